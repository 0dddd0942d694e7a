#pragma once

/**
 * Crossingless Temperley-Lieb diagrams.
 *
 * A Matching in TL(n, m) pairs up n bottom points and m top points without
 * crossings. Points carry cyclic labels around the boundary rectangle:
 * bottom points are 0..n-1 left to right, top points are n..n+m-1 right to
 * left. With this labeling a pairing is planar exactly when no two pairs
 * interleave in the linear order of labels.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace tl {

/// Upper bound on n + m for a single diagram; labels are stored in a byte.
inline constexpr int kMaxBoundaryPoints = 254;

class Matching {
 public:
  /// Validates parity, coverage and planarity; throws DomainError.
  Matching(int n_bottom, int n_top, const std::vector<std::pair<int, int>>& pairs);

  static Matching identity(int n);
  /// e_i in TL_n: cap on bottom i, i+1 and cup on top i, i+1 (1-based i).
  static Matching elementary(int n, int i);
  /// The single arc in TL(0, 2).
  static Matching cup();
  /// The single arc in TL(2, 0).
  static Matching cap();

  int bottom() const { return n_bottom_; }
  int top() const { return n_top_; }
  int points() const { return n_bottom_ + n_top_; }

  int bottom_label(int position) const { return position; }
  int top_label(int position) const { return points() - 1 - position; }
  bool is_bottom_label(int label) const { return label < n_bottom_; }
  /// Left-to-right position of a label on its own side.
  int position_of(int label) const {
    return is_bottom_label(label) ? label : points() - 1 - label;
  }
  int partner(int label) const { return partner_[label]; }

  /// Pairs (a, b) with a < b, sorted ascending.
  std::vector<std::pair<int, int>> pairs() const;
  /// Number of arcs joining a bottom point to a top point.
  int through_degree() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
    if (auto c = a.n_bottom_ <=> b.n_bottom_; c != 0) return c;
    if (auto c = a.n_top_ <=> b.n_top_; c != 0) return c;
    return a.partner_ <=> b.partner_;
  }

  std::size_t hash() const;

 private:
  friend struct MatchingAccess;
  Matching(int n_bottom, int n_top, std::vector<std::uint8_t> partner)
      : n_bottom_(n_bottom), n_top_(n_top), partner_(std::move(partner)) {}

  int n_bottom_ = 0;
  int n_top_ = 0;
  std::vector<std::uint8_t> partner_;
};

struct Composite {
  Matching matching;
  int loops = 0;
};

/// Stacks b on top of a (a in TL(n,k), b in TL(k,l)); the result lies in
/// TL(n,l) together with the number of closed loops created.
Composite compose(const Matching& a, const Matching& b);
/// b placed to the right of a.
Matching tensor(const Matching& a, const Matching& b);
/// Upside-down flip, TL(n,m) -> TL(m,n).
Matching reflect(const Matching& a);
inline int through_degree(const Matching& a) { return a.through_degree(); }

/// Every noncrossing matching in TL(n, m); there are Catalan((n+m)/2).
/// Throws DomainError on odd n + m or when n + m exceeds `max_points`.
std::vector<Matching> enumerate_basis(int n, int m, int max_points = 32);

/// Factorization a = compose(lower, upper) through through_degree(a) strands:
/// lower keeps the bottom arcs of a, upper keeps its top arcs.
struct Factorization {
  Matching lower;  // TL(n, l)
  Matching upper;  // TL(l, m)
};
Factorization factor_through_strands(const Matching& a);

}  // namespace tl

template <>
struct std::hash<tl::Matching> {
  std::size_t operator()(const tl::Matching& m) const noexcept { return m.hash(); }
};
