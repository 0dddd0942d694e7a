#pragma once

/**
 * Exact arithmetic in Z[q, q^-1] and its fraction field Q(q).
 *
 * LaurentPoly stores a dense, trimmed coefficient vector starting at the
 * lowest exponent; the trimmed form is canonical, so structural equality is
 * polynomial equality. Scalar is a reduced fraction of Laurent polynomials
 * normalized so that equal rational functions have identical fields.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tl {

using Integer = mpz_class;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }
  /// Coefficients for q^low, q^(low+1), ...; zeros are trimmed.
  static LaurentPoly from_dense(int low, std::vector<Integer> coeffs);
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() == 1 && low_ == 0; }
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Lowest and highest exponent with nonzero coefficient; 0 for the zero poly.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high() - low(); the degree after clearing q-powers.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing() const { return coeffs_.front(); }
  const std::vector<Integer>& dense() const { return coeffs_; }
  /// Nonzero (exponent, coefficient) pairs in ascending exponent order.
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const;

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  /// gcd of the coefficients, nonnegative.
  Integer content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& rhs);
  /// *this += x * y without materializing the product.
  void add_product(const LaurentPoly& x, const LaurentPoly& y);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  /// Arbitrary total order, used only for keying containers.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  std::size_t hash() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Greatest common divisor in Z[q, q^-1]: q-power free, content included,
/// positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// a / b where b is known to divide a exactly in Z[q, q^-1].
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);
/// Whether b divides a in Z[q, q^-1].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// [n] = q^-(n-1) + q^-(n-3) + ... + q^(n-1); [0] = 0.
LaurentPoly quantum_int(int n);

/**
 * Element of Q(q) kept in canonical form:
 *  - num and den are coprime in Z[q, q^-1] (integer content included);
 *  - den has lowest exponent 0 and a positive leading coefficient;
 *  - zero is 0 / 1.
 */
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}
  Scalar(long constant) : num_(constant), den_(1) {}  // NOLINT
  Scalar(LaurentPoly poly) : num_(std::move(poly)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero when den is zero.
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar quantum(int n) { return Scalar(quantum_int(n)); }
  static Scalar q(int exponent = 1) { return Scalar(LaurentPoly::q(exponent)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_constant() && den_.is_constant() && num_ == den_; }
  /// Nonzero scalar of the form c*q^k with c an integer.
  bool is_monomial() const { return num_.is_monomial() && den_.is_constant(); }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Recomputes the canonical form of a possibly unreduced fraction.
  static Scalar canonical(LaurentPoly num, LaurentPoly den);

 private:
  struct Trusted {};
  Scalar(Trusted, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

enum class ArithOp { add, sub, mul, div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Truncated expansion of s in Z[q^-1][[q]]: every nonzero coefficient of
/// q^e with e <= order, ascending. Throws NotExpandable when the
/// denominator's constant term is not +-1.
std::vector<std::pair<int, Integer>> series_expand(const Scalar& s, int order);

/// `q^-1 + 2*q^3`, `0` for zero.
std::string to_string(const LaurentPoly& p);
/// `(q^-1 + q) / 1`; a polynomial with two or more terms is parenthesized.
std::string to_string(const Scalar& s);

}  // namespace tl

template <>
struct std::hash<tl::LaurentPoly> {
  std::size_t operator()(const tl::LaurentPoly& p) const noexcept { return p.hash(); }
};
