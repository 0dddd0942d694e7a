#pragma once

#include <string_view>
#include <vector>

#include "tl/morphism.hpp"

namespace tl {

struct BraidLetter {
  int index;  // 1 <= index <= strands - 1
  int sign;   // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  /// DomainError if a letter index is outside 1..strands-1.
  BraidWord(int strands, std::vector<BraidLetter> letters);

  /// Parses words such as `s1 s2 s1^-1` or `(s1 s2)^3`. Without an explicit
  /// strand count the word acts on (largest index + 1) strands.
  static BraidWord parse(std::string_view text, int strands = 0);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  BraidWord inverse() const;
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// Unnormalized bracket resolution: positive crossing 1 - q^-1 e_i,
/// negative crossing 1 - q e_i.
Morphism crossing(int n, int i, int sign);
/// Letters resolved and stacked in order, the first letter at the bottom.
Morphism resolve_braid(const BraidWord& w);
/// (s_1 s_2 ... s_{n-1})^n; DomainError for n < 2.
BraidWord full_twist(int n);

/// The scalar x with m * p = x p (p applied first). NotEigenvector when p is
/// not an eigenvector of m; DomainError for p = 0.
Scalar eigenvalue_on(const Morphism& m, const Morphism& p);

/// Number of loops in the closure joining bottom i to top i.
int closure_loops(const Matching& d);
/// Linear extension of D -> [2]^(loops in the closure of D).
Scalar markov_trace(const Morphism& m);
/// <a, b> = tr(reflect(a) then b).
Scalar trace_pairing(const Morphism& a, const Morphism& b);

}  // namespace tl
