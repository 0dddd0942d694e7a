#include "tl/sequences.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "tl/errors.hpp"

namespace tl {

SignSeq::SignSeq(const std::vector<int>& entries) {
  entries_.reserve(entries.size());
  for (int v : entries) {
    if (v != 1 && v != -1) throw DomainError("sequence entries must be +1 or -1");
    entries_.push_back(static_cast<std::int8_t>(v));
  }
}

SignSeq SignSeq::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  const bool paren = i < text.size() && text[i] == '(';
  if (paren) ++i;
  while (true) {
    skip_space();
    if (i < text.size() && text[i] == ')') break;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i >= text.size() || text[i] != '1') {
      throw ParseError("sign sequence: expected 1 or -1 in '" + std::string(text) + "'");
    }
    ++i;
    values.push_back(sign);
    skip_space();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  skip_space();
  if (paren) {
    if (i >= text.size() || text[i] != ')') throw ParseError("sign sequence: missing ')'");
    ++i;
  }
  skip_space();
  if (i != text.size()) throw ParseError("sign sequence: trailing input");
  return SignSeq(values);
}

int SignSeq::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::vector<int> SignSeq::prefix_sums() const {
  std::vector<int> out;
  int running = 0;
  for (int v : entries_) out.push_back(running += v);
  return out;
}

SignSeq SignSeq::appended(int sign) const {
  if (sign != 1 && sign != -1) throw DomainError("sequence entries must be +1 or -1");
  SignSeq out = *this;
  out.entries_.push_back(static_cast<std::int8_t>(sign));
  return out;
}

SignSeq SignSeq::prefix() const {
  if (entries_.empty()) throw DomainError("prefix of the empty sequence");
  SignSeq out = *this;
  out.entries_.pop_back();
  return out;
}

std::string SignSeq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i] > 0 ? "1" : "-1";
  }
  return out + ")";
}

bool is_admissible(const SignSeq& e) {
  for (int s : e.prefix_sums()) {
    if (s < 0) return false;
  }
  return true;
}

bool dominates(const SignSeq& e, const SignSeq& d) {
  if (e.length() != d.length()) throw DomainError("dominates: sequences differ in length");
  const auto pe = e.prefix_sums(), pd = d.prefix_sums();
  for (std::size_t i = 0; i < pe.size(); ++i) {
    if (pe[i] < pd[i]) return false;
  }
  return true;
}

std::vector<SignSeq> enumerate_seqs(int n, std::optional<int> k) {
  if (n < 1) throw DomainError("enumerate_seqs: length must be at least 1");
  if (k && (*k < 0 || *k > n || (n - *k) % 2 != 0)) {
    throw DomainError("enumerate_seqs: size must satisfy 0 <= k <= n and k = n mod 2");
  }
  std::vector<SignSeq> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int running) {
    const int left = n - static_cast<int>(current.size());
    if (left == 0) {
      if (!k || running == *k) out.emplace_back(current);
      return;
    }
    for (int sign : {1, -1}) {
      const int next = running + sign;
      if (next < 0) continue;
      // Remaining steps must still be able to reach k.
      if (k && std::abs(next - *k) > left - 1) continue;
      current.push_back(sign);
      extend(next);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace tl
