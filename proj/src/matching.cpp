#include "tl/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tl/errors.hpp"

namespace tl {

struct MatchingAccess {
  static Matching make(int n_bottom, int n_top, std::vector<std::uint8_t> partner) {
    return Matching(n_bottom, n_top, std::move(partner));
  }
};

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

bool planar(const std::vector<std::uint8_t>& partner) {
  std::vector<int> open;
  for (int label = 0; label < static_cast<int>(partner.size()); ++label) {
    const int other = partner[label];
    if (other > label) {
      open.push_back(label);
    } else {
      if (open.empty() || open.back() != other) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

}  // namespace

Matching::Matching(int n_bottom, int n_top, const std::vector<std::pair<int, int>>& pairs)
    : n_bottom_(n_bottom), n_top_(n_top) {
  if (n_bottom < 0 || n_top < 0) throw DomainError("matching: negative point count");
  const int n = n_bottom + n_top;
  if (n % 2 != 0) throw DomainError("matching: odd number of boundary points");
  if (n > kMaxBoundaryPoints) throw DomainError("matching: too many boundary points");
  if (static_cast<int>(pairs.size()) * 2 != n) {
    throw DomainError("matching: pair count does not cover the boundary");
  }
  std::vector<int> seen(n, -1);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw DomainError("matching: label out of range");
    }
    if (seen[a] >= 0 || seen[b] >= 0) throw DomainError("matching: point used twice");
    seen[a] = b;
    seen[b] = a;
  }
  partner_.assign(seen.begin(), seen.end());
  if (!planar(partner_)) throw DomainError("matching: arcs cross");
}

Matching Matching::identity(int n) {
  if (n < 0) throw DomainError("identity: negative strand count");
  std::vector<std::uint8_t> partner(2 * n);
  for (int i = 0; i < n; ++i) {
    partner[i] = static_cast<std::uint8_t>(2 * n - 1 - i);
    partner[2 * n - 1 - i] = static_cast<std::uint8_t>(i);
  }
  return Matching(n, n, std::move(partner));
}

Matching Matching::elementary(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw DomainError("elementary: index " + std::to_string(i) + " out of range for n = " +
                      std::to_string(n));
  }
  Matching m = identity(n);
  const int b0 = i - 1, b1 = i;
  const int t0 = m.top_label(i - 1), t1 = m.top_label(i);
  m.partner_[b0] = static_cast<std::uint8_t>(b1);
  m.partner_[b1] = static_cast<std::uint8_t>(b0);
  m.partner_[t0] = static_cast<std::uint8_t>(t1);
  m.partner_[t1] = static_cast<std::uint8_t>(t0);
  return m;
}

Matching Matching::cup() { return Matching(0, 2, std::vector<std::uint8_t>{1, 0}); }
Matching Matching::cap() { return Matching(2, 0, std::vector<std::uint8_t>{1, 0}); }

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < points(); ++a) {
    if (partner_[a] > a) out.emplace_back(a, partner_[a]);
  }
  return out;
}

int Matching::through_degree() const {
  int count = 0;
  for (int a = 0; a < n_bottom_; ++a) {
    if (partner_[a] >= n_bottom_) ++count;
  }
  return count;
}

std::size_t Matching::hash() const {
  std::size_t h = static_cast<std::size_t>(n_bottom_) * 1315423911u + n_top_;
  for (auto p : partner_) h = h * 131 + p;
  return h;
}

Composite compose(const Matching& a, const Matching& b) {
  if (a.top() != b.bottom()) {
    throw BoundaryMismatch("compose: " + std::to_string(a.top()) + " top points vs " +
                           std::to_string(b.bottom()) + " bottom points");
  }
  const int na = a.points();
  const int n = a.bottom(), k = a.top(), l = b.top();
  UnionFind uf(na + b.points());
  for (int x = 0; x < na; ++x) uf.unite(x, a.partner(x));
  for (int x = 0; x < b.points(); ++x) uf.unite(na + x, na + b.partner(x));
  for (int j = 0; j < k; ++j) uf.unite(a.top_label(j), na + b.bottom_label(j));

  // Outer boundary of the result, in its own cyclic labels.
  const int out_points = n + l;
  std::vector<int> node_of(out_points);
  for (int i = 0; i < n; ++i) node_of[i] = a.bottom_label(i);
  for (int j = 0; j < l; ++j) node_of[out_points - 1 - j] = na + b.top_label(j);

  std::vector<int> owner(na + b.points(), -1);
  std::vector<std::uint8_t> partner(out_points);
  for (int label = 0; label < out_points; ++label) {
    const int root = uf.find(node_of[label]);
    if (owner[root] < 0) {
      owner[root] = label;
    } else {
      partner[label] = static_cast<std::uint8_t>(owner[root]);
      partner[owner[root]] = static_cast<std::uint8_t>(label);
    }
  }
  int loops = 0;
  for (int j = 0; j < k; ++j) {
    const int root = uf.find(a.top_label(j));
    if (owner[root] == -1) {
      owner[root] = -2;
      ++loops;
    }
  }
  return {MatchingAccess::make(n, l, std::move(partner)), loops};
}

Matching tensor(const Matching& a, const Matching& b) {
  const int nb = a.bottom() + b.bottom();
  const int nt = a.top() + b.top();
  const int total = nb + nt;
  // Map each operand label to the label of the combined diagram.
  auto relabel = [&](const Matching& m, int bottom_offset, int top_offset, int label) {
    if (m.is_bottom_label(label)) return bottom_offset + label;
    return total - 1 - (top_offset + m.position_of(label));
  };
  std::vector<std::uint8_t> partner(total);
  for (int x = 0; x < a.points(); ++x) {
    partner[relabel(a, 0, 0, x)] = static_cast<std::uint8_t>(relabel(a, 0, 0, a.partner(x)));
  }
  for (int x = 0; x < b.points(); ++x) {
    partner[relabel(b, a.bottom(), a.top(), x)] =
        static_cast<std::uint8_t>(relabel(b, a.bottom(), a.top(), b.partner(x)));
  }
  return MatchingAccess::make(nb, nt, std::move(partner));
}

Matching reflect(const Matching& a) {
  // Flipping sends bottom position i to top position i and vice versa, which
  // in cyclic labels is label -> (points - 1 - label).
  const int n = a.points();
  std::vector<std::uint8_t> partner(n);
  for (int x = 0; x < n; ++x) partner[n - 1 - x] = static_cast<std::uint8_t>(n - 1 - a.partner(x));
  return MatchingAccess::make(a.top(), a.bottom(), std::move(partner));
}

std::vector<Matching> enumerate_basis(int n, int m, int max_points) {
  if (n < 0 || m < 0) throw DomainError("enumerate_basis: negative point count");
  if ((n + m) % 2 != 0) throw DomainError("enumerate_basis: n + m must be even");
  if (n + m > max_points) throw DomainError("enumerate_basis: n + m exceeds configured bound");
  const int total = n + m;
  std::vector<Matching> out;
  std::vector<std::uint8_t> partner(total);
  std::vector<int> open;
  // Balanced parentheses over the cyclic labels; each ')' closes the most
  // recent '('.
  std::function<void(int)> extend = [&](int label) {
    if (label == total) {
      out.push_back(MatchingAccess::make(n, m, partner));
      return;
    }
    const int remaining = total - label;
    if (static_cast<int>(open.size()) + 2 <= remaining) {
      open.push_back(label);
      extend(label + 1);
      open.pop_back();
    }
    if (!open.empty()) {
      const int mate = open.back();
      open.pop_back();
      partner[label] = static_cast<std::uint8_t>(mate);
      partner[mate] = static_cast<std::uint8_t>(label);
      extend(label + 1);
      open.push_back(mate);
    }
  };
  extend(0);
  return out;
}

Factorization factor_through_strands(const Matching& a) {
  const int n = a.bottom(), m = a.top();
  std::vector<std::pair<int, int>> through;  // (bottom position, top position)
  std::vector<std::pair<int, int>> lower_pairs, upper_pairs;
  for (auto [x, y] : a.pairs()) {
    const bool xb = a.is_bottom_label(x), yb = a.is_bottom_label(y);
    if (xb && yb) {
      lower_pairs.emplace_back(x, y);
    } else if (!xb && !yb) {
      upper_pairs.emplace_back(a.position_of(x), a.position_of(y));
    } else {
      through.emplace_back(a.position_of(x), a.position_of(y));
    }
  }
  std::sort(through.begin(), through.end());
  const int l = static_cast<int>(through.size());
  // lower: TL(n, l), labels bottom 0..n-1, top position s -> n + l - 1 - s.
  for (int s = 0; s < l; ++s) lower_pairs.emplace_back(through[s].first, n + l - 1 - s);
  // upper: TL(l, m), bottom s -> s, top position t -> l + m - 1 - t.
  std::vector<std::pair<int, int>> upper;
  for (int s = 0; s < l; ++s) upper.emplace_back(s, l + m - 1 - through[s].second);
  for (auto [p, r] : upper_pairs) upper.emplace_back(l + m - 1 - p, l + m - 1 - r);
  for (auto& pr : lower_pairs) {
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  }
  for (auto& pr : upper) {
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  }
  return {Matching(n, l, lower_pairs), Matching(l, m, upper)};
}

}  // namespace tl
