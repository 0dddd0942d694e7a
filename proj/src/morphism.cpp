#include "tl/morphism.hpp"

#include <string>
#include <unordered_map>

#include "tl/errors.hpp"

namespace tl {

namespace {

void check_shape(const Matching& m, int bottom, int top) {
  if (m.bottom() != bottom || m.top() != top) {
    throw BoundaryMismatch("morphism: diagram in TL(" + std::to_string(m.bottom()) + "," +
                           std::to_string(m.top()) + ") added to TL(" + std::to_string(bottom) +
                           "," + std::to_string(top) + ")");
  }
}

// A morphism rewritten as (1/den) * sum(nums[i] * diagram[i]) so that the
// bilinear expansion runs in Z[q, q^-1] only.
struct Cleared {
  LaurentPoly den{1};
  std::vector<std::pair<const Matching*, LaurentPoly>> nums;
};

Cleared clear_denominators(const Morphism& m) {
  Cleared out;
  for (const auto& [diagram, coeff] : m.terms()) {
    const LaurentPoly& d = coeff.den();
    if (!divides(d, out.den)) out.den = out.den * exact_quotient(d, gcd(out.den, d));
  }
  std::unordered_map<LaurentPoly, LaurentPoly> factor;
  out.nums.reserve(m.size());
  for (const auto& [diagram, coeff] : m.terms()) {
    auto it = factor.find(coeff.den());
    if (it == factor.end()) {
      it = factor.emplace(coeff.den(), exact_quotient(out.den, coeff.den())).first;
    }
    out.nums.emplace_back(&diagram, coeff.num() * it->second);
  }
  return out;
}

}  // namespace

Morphism::Morphism(int bottom, int top) : bottom_(bottom), top_(top) {
  if (bottom < 0 || top < 0 || (bottom + top) % 2 != 0) {
    throw DomainError("morphism: TL(" + std::to_string(bottom) + "," + std::to_string(top) +
                      ") has no diagrams");
  }
}

Morphism::Morphism(const Matching& diagram, const Scalar& coeff)
    : bottom_(diagram.bottom()), top_(diagram.top()) {
  if (!coeff.is_zero()) terms_.emplace(diagram, coeff);
}

Morphism::Morphism(int bottom, int top, Terms terms) : Morphism(bottom, top) {
  for (auto& [diagram, coeff] : terms) {
    check_shape(diagram, bottom, top);
    if (!coeff.is_zero()) terms_.emplace(diagram, std::move(coeff));
  }
}

Scalar Morphism::coefficient(const Matching& diagram) const {
  auto it = terms_.find(diagram);
  return it == terms_.end() ? Scalar() : it->second;
}

Morphism& Morphism::add_term(const Matching& diagram, const Scalar& coeff) {
  check_shape(diagram, bottom_, top_);
  if (coeff.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(diagram, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Morphism& Morphism::operator+=(const Morphism& rhs) {
  if (rhs.bottom_ != bottom_ || rhs.top_ != top_) {
    throw BoundaryMismatch("morphism: adding elements of different hom spaces");
  }
  for (const auto& [diagram, coeff] : rhs.terms_) add_term(diagram, coeff);
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& rhs) { return *this += -rhs; }

Morphism& Morphism::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [diagram, coeff] : terms_) coeff *= s;
  return *this;
}

Morphism Morphism::operator-() const {
  Morphism out = *this;
  for (auto& [diagram, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Morphism lincomb(std::span<const std::pair<Scalar, Morphism>> summands) {
  if (summands.empty()) throw DomainError("lincomb: empty combination has no shape");
  Morphism out(summands.front().second.bottom(), summands.front().second.top());
  for (const auto& [s, m] : summands) out += s * m;
  return out;
}

Morphism compose(const Morphism& a, const Morphism& b) {
  if (a.top() != b.bottom()) {
    throw BoundaryMismatch("compose: " + std::to_string(a.top()) + " top points vs " +
                           std::to_string(b.bottom()) + " bottom points");
  }
  if (a.is_zero() || b.is_zero()) return Morphism(a.bottom(), b.top());
  const Cleared ca = clear_denominators(a);
  const Cleared cb = clear_denominators(b);

  const int max_loops = a.top() / 2;
  std::vector<LaurentPoly> loop_factor{LaurentPoly(1)};
  for (int i = 1; i <= max_loops; ++i) loop_factor.push_back(loop_factor.back() * quantum_int(2));

  std::unordered_map<Matching, LaurentPoly> acc;
  std::vector<LaurentPoly> scaled(max_loops + 1);
  std::vector<bool> ready(max_loops + 1);
  for (const auto& [da, na] : ca.nums) {
    std::fill(ready.begin(), ready.end(), false);
    for (const auto& [db, nb] : cb.nums) {
      Composite c = compose(*da, *db);
      if (!ready[c.loops]) {
        scaled[c.loops] = na * loop_factor[c.loops];
        ready[c.loops] = true;
      }
      acc[std::move(c.matching)].add_product(scaled[c.loops], nb);
    }
  }

  const LaurentPoly den = ca.den * cb.den;
  Morphism::Terms terms;
  for (auto& [diagram, num] : acc) {
    if (num.is_zero()) continue;
    terms.emplace(diagram, Scalar::canonical(std::move(num), den));
  }
  return Morphism(a.bottom(), b.top(), std::move(terms));
}

Morphism compose(std::initializer_list<Morphism> bottom_to_top) {
  if (bottom_to_top.size() == 0) throw DomainError("compose: empty chain");
  auto it = bottom_to_top.begin();
  Morphism out = *it;
  for (++it; it != bottom_to_top.end(); ++it) out = compose(out, *it);
  return out;
}

Morphism tensor(const Morphism& a, const Morphism& b) {
  Morphism out(a.bottom() + b.bottom(), a.top() + b.top());
  for (const auto& [da, sa] : a.terms()) {
    for (const auto& [db, sb] : b.terms()) out.add_term(tensor(da, db), sa * sb);
  }
  return out;
}

Morphism reflect(const Morphism& a) {
  Morphism out(a.top(), a.bottom());
  for (const auto& [diagram, coeff] : a.terms()) out.add_term(reflect(diagram), coeff);
  return out;
}

int through_degree(const Morphism& a) {
  if (a.is_zero()) throw DomainError("through_degree: undefined for the zero morphism");
  int best = 0;
  for (const auto& [diagram, coeff] : a.terms()) best = std::max(best, diagram.through_degree());
  return best;
}

bool is_idempotent(const Morphism& a) {
  if (a.bottom() != a.top()) throw DomainError("is_idempotent: morphism is not square");
  return compose(a, a) == a;
}

}  // namespace tl
