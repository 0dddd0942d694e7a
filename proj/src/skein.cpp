#include "tl/skein.hpp"

#include <cctype>
#include <numeric>
#include <string>

#include "tl/errors.hpp"

namespace tl {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 0) throw DomainError("braid: negative strand count");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1) {
      throw DomainError("braid: generator s" + std::to_string(l.index) + " out of range on " +
                        std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw DomainError("braid: letter sign must be +-1");
  }
}

namespace {

class BraidParser {
 public:
  explicit BraidParser(std::string_view text) : text_(text) {}

  std::vector<BraidLetter> parse() {
    auto word = sequence();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return word;
  }

 private:
  std::vector<BraidLetter> sequence() {
    std::vector<BraidLetter> out;
    while (true) {
      skip();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      auto factor = atom();
      const int power = exponent();
      auto powered = raise(factor, power);
      out.insert(out.end(), powered.begin(), powered.end());
    }
  }

  std::vector<BraidLetter> atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      auto inner = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (text_[pos_] != 's' && text_[pos_] != 'S') fail("expected generator 's<i>'");
    ++pos_;
    const int index = integer();
    if (index < 1) fail("generator index must be positive");
    return {BraidLetter{index, 1}};
  }

  int exponent() {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return integer();
    }
    return 1;
  }

  int integer() {
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 100000) fail("integer too large");
    }
    return sign * value;
  }

  static std::vector<BraidLetter> raise(const std::vector<BraidLetter>& w, int power) {
    std::vector<BraidLetter> base = w;
    if (power < 0) {
      base.assign(w.rbegin(), w.rend());
      for (auto& l : base) l.sign = -l.sign;
      power = -power;
    }
    std::vector<BraidLetter> out;
    for (int i = 0; i < power; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("braid word '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord BraidWord::parse(std::string_view text, int strands) {
  auto letters = BraidParser(text).parse();
  if (strands == 0) {
    strands = 1;
    for (const auto& l : letters) strands = std::max(strands, l.index + 1);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Morphism crossing(int n, int i, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("crossing: sign must be +-1");
  const Morphism e = Morphism::elementary(n, i);
  return Morphism::identity(n) - Scalar::q(-sign) * e;
}

Morphism resolve_braid(const BraidWord& w) {
  Morphism out = Morphism::identity(w.strands());
  for (const auto& l : w.letters()) out = compose(out, crossing(w.strands(), l.index, l.sign));
  return out;
}

BraidWord full_twist(int n) {
  if (n < 2) throw DomainError("full_twist: need at least two strands");
  std::vector<BraidLetter> letters;
  for (int round = 0; round < n; ++round) {
    for (int i = 1; i < n; ++i) letters.push_back({i, 1});
  }
  return BraidWord(n, std::move(letters));
}

Scalar eigenvalue_on(const Morphism& m, const Morphism& p) {
  if (p.is_zero()) throw DomainError("eigenvalue_on: zero vector");
  if (m.bottom() != m.top() || m.top() != p.top() || p.bottom() != p.top()) {
    throw BoundaryMismatch("eigenvalue_on: operands must lie in the same TL_n");
  }
  const Morphism image = compose(p, m);
  const auto& [diagram, coeff] = *p.terms().begin();
  const Scalar lambda = image.coefficient(diagram) / coeff;
  if (!(image == lambda * p)) throw NotEigenvector("eigenvalue_on: no scalar maps p to m p");
  return lambda;
}

int closure_loops(const Matching& d) {
  if (d.bottom() != d.top()) throw DomainError("closure: diagram is not square");
  const int n = d.points();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int x = 0; x < n; ++x) unite(x, d.partner(x));
  for (int i = 0; i < d.bottom(); ++i) unite(d.bottom_label(i), d.top_label(i));
  int loops = 0;
  for (int x = 0; x < n; ++x) loops += find(x) == x;
  return loops;
}

Scalar markov_trace(const Morphism& m) {
  if (m.bottom() != m.top()) throw DomainError("markov_trace: morphism is not square");
  Scalar out;
  const LaurentPoly two = quantum_int(2);
  for (const auto& [diagram, coeff] : m.terms()) {
    LaurentPoly loop_value(1);
    for (int i = closure_loops(diagram); i > 0; --i) loop_value *= two;
    out += coeff * Scalar(loop_value);
  }
  return out;
}

Scalar trace_pairing(const Morphism& a, const Morphism& b) {
  if (a.bottom() != b.bottom() || a.top() != b.top() || a.bottom() != a.top()) {
    throw BoundaryMismatch("trace_pairing: operands must lie in the same TL_n");
  }
  return markov_trace(compose(reflect(a), b));
}

}  // namespace tl
