#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tl/matching.hpp"
#include "tl/qring.hpp"

namespace tl {

/**
 * A Q(q)-linear combination of Matchings in TL(bottom, top).
 *
 * Terms are kept in a map ordered by Matching with zero coefficients pruned,
 * so two Morphisms are equal exactly when their term maps are equal.
 */
class Morphism {
 public:
  using Terms = std::map<Matching, Scalar>;

  /// The zero morphism in TL(bottom, top).
  Morphism(int bottom, int top);
  explicit Morphism(const Matching& diagram, const Scalar& coeff = Scalar(1));
  /// Throws BoundaryMismatch if a key has the wrong shape.
  Morphism(int bottom, int top, Terms terms);

  static Morphism identity(int n) { return Morphism(Matching::identity(n)); }
  static Morphism elementary(int n, int i) { return Morphism(Matching::elementary(n, i)); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Zero when the diagram is not in the support.
  Scalar coefficient(const Matching& diagram) const;

  Morphism& add_term(const Matching& diagram, const Scalar& coeff);
  Morphism& operator+=(const Morphism& rhs);
  Morphism& operator-=(const Morphism& rhs);
  Morphism& operator*=(const Scalar& s);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(const Scalar& s, Morphism a) { return a *= s; }
  Morphism operator-() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  int bottom_;
  int top_;
  Terms terms_;
};

/// Sum of s_i * m_i; all summands must share a shape (BoundaryMismatch
/// otherwise). The empty list is rejected since it carries no shape.
Morphism lincomb(std::span<const std::pair<Scalar, Morphism>> summands);

/// b stacked on top of a, extended bilinearly; each closed loop contributes
/// a factor [2]. In the algebra's product notation this is b * a.
Morphism compose(const Morphism& a, const Morphism& b);
/// Convenience: compose(compose(a, b), c) and so on, bottom to top.
Morphism compose(std::initializer_list<Morphism> bottom_to_top);
Morphism tensor(const Morphism& a, const Morphism& b);
Morphism reflect(const Morphism& a);
/// Maximum through-degree over the support; DomainError for zero.
int through_degree(const Morphism& a);
/// compose(a, a) == a; DomainError unless a is square.
bool is_idempotent(const Morphism& a);

}  // namespace tl
