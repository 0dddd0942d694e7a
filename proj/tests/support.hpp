#pragma once

// Test-only helpers: random generators for property tests and oracles that
// recompute expected values without going through the library's code paths.

#include <cstdint>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "tl/matching.hpp"
#include "tl/morphism.hpp"
#include "tl/qring.hpp"
#include "tl/serialize.hpp"

namespace tl {

// Readable gtest failure messages.
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << to_string(s); }
inline void PrintTo(const Matching& m, std::ostream* os) { *os << to_text(m); }
inline void PrintTo(const Morphism& m, std::ostream* os) { *os << "\n" << to_text(m); }

}  // namespace tl

namespace tl::testing {

// ----------------------------------------------------------------- generators

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4, int exp_range = 4,
                                  int coeff_range = 5) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exps(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeffs(-coeff_range, coeff_range);
  LaurentPoly p;
  for (int i = terms(rng); i > 0; --i) p += LaurentPoly::monomial(coeffs(rng), exps(rng));
  return p;
}

inline LaurentPoly random_nonzero_laurent(std::mt19937& rng, int max_terms = 4) {
  LaurentPoly p;
  while (p.is_zero()) p = random_laurent(rng, max_terms);
  return p;
}

inline Scalar random_scalar(std::mt19937& rng) {
  return Scalar(random_laurent(rng), random_nonzero_laurent(rng, 3));
}

inline Scalar random_nonzero_scalar(std::mt19937& rng) {
  Scalar s;
  while (s.is_zero()) s = random_scalar(rng);
  return s;
}

inline Matching random_matching(std::mt19937& rng, int n, int m) {
  const auto basis = enumerate_basis(n, m);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  return basis[pick(rng)];
}

inline Morphism random_morphism(std::mt19937& rng, int n, int m, int max_terms = 3) {
  Morphism out(n, m);
  std::uniform_int_distribution<int> terms(1, max_terms);
  for (int i = terms(rng); i > 0; --i) {
    out.add_term(random_matching(rng, n, m), random_nonzero_scalar(rng));
  }
  return out;
}

// -------------------------------------------------------------------- oracles

/// Catalan numbers from C_{n+1} = sum_i C_i C_{n-i}.
inline std::uint64_t catalan_recurrence(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  }
  return c[n];
}

/// All perfect matchings on 0..points-1 that are noncrossing, found by
/// pairing the first free point with every other free point and then
/// filtering with the pairwise interleaving test.
inline std::vector<std::vector<std::pair<int, int>>> brute_force_noncrossing(int points) {
  std::vector<std::vector<std::pair<int, int>>> all;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(points, false);
  auto interleave = [](std::pair<int, int> x, std::pair<int, int> y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  auto recurse = [&](auto&& self) -> void {
    int first = -1;
    for (int i = 0; i < points; ++i) {
      if (!used[i]) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          if (interleave(current[i], current[j])) return;
        }
      }
      all.push_back(current);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < points; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.emplace_back(first, j);
      self(self);
      current.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  recurse(recurse);
  return all;
}

/// Loops in the closure of a square diagram, found by walking strands:
/// alternate between the diagram's arc and the closing arc (bottom i to
/// top i) until the walk returns to its start.
inline int closure_loops_by_walking(const Matching& d) {
  const int n = d.bottom();
  std::vector<bool> seen(d.points(), false);
  auto closing = [&](int label) {
    return d.is_bottom_label(label) ? d.top_label(label) : d.bottom_label(d.position_of(label));
  };
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int at = start;
    do {
      seen[at] = true;
      const int across = d.partner(at);
      seen[across] = true;
      at = closing(across);
    } while (at != start);
  }
  return loops;
}

/// Power series of num/den by schoolbook long division over int64;
/// den[0] must be +-1. Returns coefficients of q^0..q^order of the quotient
/// of the ordinary polynomials (exponent shifts are the caller's job).
inline std::vector<long long> long_division(const std::vector<long long>& num,
                                            const std::vector<long long>& den, int order) {
  std::vector<long long> rem(order + 1 + den.size(), 0);
  for (std::size_t i = 0; i < num.size() && i < rem.size(); ++i) rem[i] = num[i];
  std::vector<long long> quotient(order + 1, 0);
  for (int i = 0; i <= order; ++i) {
    const long long c = rem[i] / den[0];
    quotient[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  return quotient;
}

}  // namespace tl::testing
