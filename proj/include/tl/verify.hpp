#pragma once

/**
 * Mechanical checks of the projector identities. Verifiers never throw on a
 * failed identity; each sub-check becomes a CheckResult and the first
 * offending input, if any, is recorded as its witness.
 */

#include <nlohmann/json.hpp>

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "tl/projectors.hpp"

namespace tl {

struct CheckResult {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::optional<nlohmann::json> witness;
};

struct Report {
  std::deque<CheckResult> checks;

  bool passed() const;
  void append(const Report& other);
  CheckResult& add(std::string check, nlohmann::json params);
};

/// p_n idempotent, killed by every e_i on both sides, identity coefficient 1,
/// vertically symmetric.
Report verify_jones_wenzl(int n, ProjectorCache& cache);

/// p_e (x) 1 = p_{e.(+1)} + p_{e.(-1)} and
/// q_e (x) 1 = q_{e.(+1)} + [k]/[k+1] q_{e.(-1)}, inadmissible terms zero.
Report verify_branching(const SignSeq& e, ProjectorCache& cache);

/// Sum of p_e is 1_n; each p_e idempotent; p_e p_v = 0 for e != v; the
/// p_{n,k} are a complete family of orthogonal idempotents.
Report verify_resolution(int n, ProjectorCache& cache);

/// The three through-degree properties of p_{n,k}, quantified over every
/// basis diagram of TL(n, l) for all l <= n.
Report verify_characterization(int n, int k, ProjectorCache& cache);

/// a then p_{m,k} equals p_{n,k} then a, for every basis diagram a of TL(n, m).
Report verify_slide_through(int n, int m, int k, ProjectorCache& cache);

/// p_{n,k} = sum over D != 1 of f_D p_{n,k} D = sum f_D b_D p_{l,k} a_D,
/// reading f_D off p_n = 1 - sum f_D D and factoring D through l = tau(D)
/// strands.
Report verify_lower_expansion(int n, int k, ProjectorCache& cache);

/// The full twist acts on each p_{n,k} by a signed power of q, and
/// eigenvalue ratios are q^(2(k - l)).
Report verify_twist(int n, ProjectorCache& cache);

/// tr(p_n) = [n+1]; the trace pairing is diagonal on {p_e : e in L_n}.
Report verify_trace(int n, ProjectorCache& cache);

enum class Suite { all, resolution, characterization, slide, branching, twist, trace };
/// DomainError on an unknown name.
Suite parse_suite(const std::string& name);
/// Runs the selected suite for every parameter set living in TL_m, m <= n.
Report run_suite(int n, Suite suite, ProjectorCache& cache);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const Report& r);

}  // namespace tl
