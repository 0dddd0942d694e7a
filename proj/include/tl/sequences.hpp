#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tl {

/// A finite sequence of +1 / -1 entries.
class SignSeq {
 public:
  SignSeq() = default;
  /// Throws DomainError unless every entry is +1 or -1.
  explicit SignSeq(const std::vector<int>& entries);
  /// Parses `(1,1,-1)`; parentheses and whitespace optional. ParseError on
  /// anything else.
  static SignSeq parse(std::string_view text);

  int length() const { return static_cast<int>(entries_.size()); }
  /// |e|: the sum of the entries.
  int sum() const;
  int operator[](int i) const { return entries_[i]; }
  std::vector<int> entries() const { return {entries_.begin(), entries_.end()}; }
  std::vector<int> prefix_sums() const;
  /// e.(+1) or e.(-1).
  SignSeq appended(int sign) const;
  /// The sequence with its last entry removed.
  SignSeq prefix() const;

  /// `(1,1,-1,-1)`.
  std::string to_string() const;

  friend bool operator==(const SignSeq&, const SignSeq&) = default;
  friend auto operator<=>(const SignSeq&, const SignSeq&) = default;

 private:
  std::vector<std::int8_t> entries_;
};

/// Every prefix sum is nonnegative.
bool is_admissible(const SignSeq& e);
/// e dominates d: each prefix sum of e is >= the matching prefix sum of d.
/// DomainError on a length mismatch.
bool dominates(const SignSeq& e, const SignSeq& d);

/// Admissible sequences of length n (and sum k when given), lexicographic
/// with +1 before -1. DomainError for n < 1 or an impossible k.
std::vector<SignSeq> enumerate_seqs(int n, std::optional<int> k = std::nullopt);

}  // namespace tl
