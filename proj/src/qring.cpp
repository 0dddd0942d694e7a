#include "tl/qring.hpp"

#include <algorithm>
#include <sstream>

#include "tl/errors.hpp"

namespace tl {

namespace {

// Ordinary polynomials over Z, index = degree, no trailing zero at the top.
using Poly = std::vector<Integer>;

void trim_top(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Integer poly_content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_by(Poly& p, const Integer& d) {
  if (d == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Poly primitive_part(Poly p) {
  divide_by(p, poly_content(p));
  if (!p.empty() && sgn(p.back()) < 0) {
    for (auto& c : p) c = -c;
  }
  return p;
}

// Sparse pseudo-remainder: scales by lc(b)/g and the divisor by lc(r)/g at
// every step. Only used inside the primitive remainder sequence, where the
// integer factor it introduces is discarded anyway.
Poly pseudo_remainder(Poly r, const Poly& b) {
  const int db = degree(b);
  Integer g, sr, sb;
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    mpz_gcd(g.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    mpz_divexact(sr.get_mpz_t(), b.back().get_mpz_t(), g.get_mpz_t());
    mpz_divexact(sb.get_mpz_t(), r.back().get_mpz_t(), g.get_mpz_t());
    if (sr != 1) {
      for (auto& c : r) c *= sr;
    }
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[j + shift].get_mpz_t(), sb.get_mpz_t(), b[j].get_mpz_t());
    }
    trim_top(r);
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  auto positive = [](Poly p) {
    if (!p.empty() && sgn(p.back()) < 0) {
      for (auto& c : p) c = -c;
    }
    return p;
  };
  if (a.empty()) return positive(std::move(b));
  if (b.empty()) return positive(std::move(a));
  Integer content;
  {
    Integer ca = poly_content(a), cb = poly_content(b);
    mpz_gcd(content.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) {
      a = Poly{1};
      break;
    }
    Poly r = pseudo_remainder(std::move(a), b);
    a = std::move(b);
    b = r.empty() ? std::move(r) : primitive_part(std::move(r));
  }
  for (auto& c : a) c *= content;
  return a;
}

// Long division; returns false when b does not divide a over Z.
bool poly_divide(const Poly& a, const Poly& b, Poly& quotient) {
  quotient.clear();
  if (a.empty()) return true;
  if (degree(a) < degree(b)) return false;
  Poly r = a;
  const int db = degree(b);
  quotient.assign(degree(a) - db + 1, 0);
  Integer coef;
  for (int i = degree(a); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(coef.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    quotient[i - db] = coef;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[i - db + j].get_mpz_t(), coef.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return std::all_of(r.begin(), r.end(), [](const Integer& c) { return sgn(c) == 0; });
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p;
  if (sgn(coeff) != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  trim_top(coeffs_);
}

Integer LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[exponent - low_];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

Integer LaurentPoly::content() const { return poly_content(coeffs_); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high(), rhs.high());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), low_ - lo, Integer(0));
  low_ = lo;
  coeffs_.resize(hi - lo + 1);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[rhs.low_ - lo + i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

void LaurentPoly::add_product(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return;
  const int plo = x.low_ + y.low_;
  const int phi = x.high() + y.high();
  if (is_zero()) {
    low_ = plo;
    coeffs_.assign(phi - plo + 1, Integer(0));
  } else {
    const int lo = std::min(low_, plo);
    const int hi = std::max(high(), phi);
    if (lo < low_) coeffs_.insert(coeffs_.begin(), low_ - lo, Integer(0));
    low_ = lo;
    coeffs_.resize(hi - lo + 1);
  }
  const int base = plo - low_;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      mpz_addmul(coeffs_[base + i + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(),
                 y.coeffs_[j].get_mpz_t());
    }
  }
  trim();
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.add_product(a, b);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Integer& rhs) {
  if (sgn(rhs) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  if (auto c = a.low_ <=> b.low_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_) ^ (coeffs_.size() * 0x9e3779b97f4a7c15ULL);
  for (const auto& c : coeffs_) {
    const std::size_t v = mpz_get_ui(c.get_mpz_t()) ^ static_cast<std::size_t>(sgn(c) + 1);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly::from_dense(0, poly_gcd(a.dense(), b.dense()));
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  Poly quotient;
  return poly_divide(a.dense(), b.dense(), quotient);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  Poly quotient;
  if (!poly_divide(a.dense(), b.dense(), quotient)) {
    throw DomainError("exact_quotient: divisor does not divide dividend");
  }
  return LaurentPoly::from_dense(a.low() - b.low(), std::move(quotient));
}

LaurentPoly quantum_int(int n) {
  if (n < 0) throw DomainError("quantum_int: negative argument");
  if (n == 0) return {};
  std::vector<Integer> coeffs(2 * n - 1, Integer(0));
  for (int i = 0; i < n; ++i) coeffs[2 * i] = 1;
  return LaurentPoly::from_dense(-(n - 1), std::move(coeffs));
}

// --------------------------------------------------------------------- Scalar

Scalar::Scalar(LaurentPoly num, LaurentPoly den) {
  *this = canonical(std::move(num), std::move(den));
}

Scalar Scalar::canonical(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return Scalar();
  const int shift = den.low();
  den = den.shifted(-shift);
  num = num.shifted(-shift);
  if (den.is_constant()) {
    Integer g;
    const Integer nc = num.content();
    mpz_gcd(g.get_mpz_t(), nc.get_mpz_t(), den.leading().get_mpz_t());
    if (sgn(den.leading()) < 0) g = -g;
    if (g != 1) {
      Poly n = num.dense();
      divide_by(n, g);
      num = LaurentPoly::from_dense(num.low(), std::move(n));
      den = LaurentPoly::monomial(den.leading() / g, 0);
    }
    return Scalar(Trusted{}, std::move(num), std::move(den));
  }
  const LaurentPoly g = gcd(num, den);
  if (!(g == LaurentPoly(1))) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  if (sgn(den.leading()) < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(Trusted{}, std::move(num), std::move(den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return canonical(den_, num_);
}

Scalar Scalar::operator-() const { return Scalar(Trusted{}, -num_, den_); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_constant() && den_.leading() == 1) {
      num_ += rhs.num_;
      if (num_.is_zero()) den_ = LaurentPoly(1);
      return *this;
    }
    return *this = canonical(num_ + rhs.num_, den_);
  }
  LaurentPoly n = num_ * rhs.den_;
  n.add_product(rhs.num_, den_);
  return *this = canonical(std::move(n), den_ * rhs.den_);
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Scalar();
  if (den_.is_constant() && rhs.den_.is_constant() && den_.leading() == 1 &&
      rhs.den_.leading() == 1) {
    num_ *= rhs.num_;
    return *this;
  }
  return *this = canonical(num_ * rhs.num_, den_ * rhs.den_);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  return *this = canonical(num_ * rhs.den_, den_ * rhs.num_);
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("arith: unknown operation");
}

std::vector<std::pair<int, Integer>> series_expand(const Scalar& s, int order) {
  const LaurentPoly& num = s.num();
  const LaurentPoly& den = s.den();
  const Integer& unit = den.trailing();
  if (den.low() != 0 || (unit != 1 && unit != -1)) {
    throw NotExpandable("series_expand: denominator constant term is not a unit");
  }
  std::vector<std::pair<int, Integer>> out;
  if (num.is_zero() || order < num.low()) return out;
  const int start = num.low();
  const int count = order - start + 1;
  const int den_degree = den.span();
  std::vector<Integer> series(count);
  Integer acc;
  for (int i = 0; i < count; ++i) {
    acc = num.coeff(start + i);
    for (int j = 1; j <= std::min(i, den_degree); ++j) {
      mpz_submul(acc.get_mpz_t(), den.dense()[j].get_mpz_t(), series[i - j].get_mpz_t());
    }
    series[i] = unit == 1 ? acc : Integer(-acc);
    if (sgn(series[i]) != 0) out.emplace_back(start + i, series[i]);
  }
  return out;
}

// ------------------------------------------------------------------ rendering

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string to_string(const Scalar& s) {
  auto part = [](const LaurentPoly& p) {
    std::string body = to_string(p);
    return p.term_count() > 1 ? "(" + body + ")" : body;
  };
  return part(s.num()) + " / " + part(s.den());
}

}  // namespace tl
