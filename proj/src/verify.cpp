#include "tl/verify.hpp"

#include "tl/errors.hpp"
#include "tl/serialize.hpp"
#include "tl/skein.hpp"

namespace tl {

using nlohmann::json;

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

CheckResult& Report::add(std::string check, json params) {
  checks.push_back(CheckResult{std::move(check), std::move(params), true, std::nullopt});
  return checks.back();
}

namespace {

void fail(CheckResult& r, json witness) {
  if (r.pass) r.witness = std::move(witness);
  r.pass = false;
}

}  // namespace

Report verify_jones_wenzl(int n, ProjectorCache& cache) {
  Report report;
  const json params = {{"n", n}};
  const Morphism p = jones_wenzl(n, cache);

  auto& idem = report.add("jw.idempotent", params);
  if (!is_idempotent(p)) fail(idem, json{{"n", n}});

  auto& unit = report.add("jw.identity_coefficient", params);
  if (!p.coefficient(Matching::identity(n)).is_one()) fail(unit, json{{"n", n}});

  auto& kill = report.add("jw.annihilation", params);
  for (int i = 1; i < n; ++i) {
    const Morphism e = Morphism::elementary(n, i);
    if (!compose(p, e).is_zero()) fail(kill, json{{"i", i}, {"side", "left"}});
    if (!compose(e, p).is_zero()) fail(kill, json{{"i", i}, {"side", "right"}});
  }

  auto& sym = report.add("jw.symmetric", params);
  if (!(reflect(p) == p)) fail(sym, json{{"n", n}});
  return report;
}

Report verify_branching(const SignSeq& e, ProjectorCache& cache) {
  Report report;
  const json params = {{"epsilon", to_json(e)}};
  const SignSeq up = e.appended(1), down = e.appended(-1);
  const int k = e.sum();
  const Morphism one = Morphism::identity(1);

  auto& p_rule = report.add("branching.p", params);
  Morphism rhs = p_eps(up, cache);
  if (is_admissible(down)) rhs += p_eps(down, cache);
  if (!(tensor(p_eps(e, cache), one) == rhs)) fail(p_rule, to_json(e));

  auto& q_rule = report.add("branching.q", params);
  Morphism q_rhs = q_elem(up, cache);
  if (is_admissible(down)) {
    q_rhs += Scalar(quantum_int(k), quantum_int(k + 1)) * q_elem(down, cache);
  }
  if (!(tensor(q_elem(e, cache), one) == q_rhs)) fail(q_rule, to_json(e));
  return report;
}

Report verify_resolution(int n, ProjectorCache& cache) {
  Report report;
  const json params = {{"n", n}};
  const auto seqs = enumerate_seqs(n);
  std::vector<Morphism> ps;
  for (const auto& e : seqs) ps.push_back(p_eps(e, cache));
  const Morphism identity = Morphism::identity(n);

  auto& sum = report.add("resolution.sum_p_eps", params);
  Morphism total(n, n);
  for (const auto& p : ps) total += p;
  if (!(total == identity)) fail(sum, json{{"n", n}});

  auto& idem = report.add("resolution.p_eps_idempotent", params);
  auto& orth = report.add("resolution.p_eps_orthogonal", params);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!is_idempotent(ps[i])) fail(idem, to_json(seqs[i]));
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      if (!compose(ps[j], ps[i]).is_zero()) {
        fail(orth, json{{"epsilon", to_json(seqs[i])}, {"nu", to_json(seqs[j])}});
      }
    }
  }

  auto& complete = report.add("resolution.p_nk_complete", params);
  auto& system = report.add("resolution.p_nk_orthogonal_idempotents", params);
  std::vector<std::pair<int, Morphism>> pnk;
  for (int k = n % 2; k <= n; k += 2) pnk.emplace_back(k, higher_projector(n, k, cache));
  Morphism pnk_total(n, n);
  for (const auto& [k, p] : pnk) pnk_total += p;
  if (!(pnk_total == identity)) fail(complete, json{{"n", n}});
  for (const auto& [k, pk] : pnk) {
    for (const auto& [l, pl] : pnk) {
      const Morphism product = compose(pl, pk);
      const bool ok = k == l ? product == pk : product.is_zero();
      if (!ok) fail(system, json{{"k", k}, {"l", l}});
    }
  }
  return report;
}

Report verify_characterization(int n, int k, ProjectorCache& cache) {
  Report report;
  const json params = {{"n", n}, {"k", k}};
  const Morphism p = higher_projector(n, k, cache);

  auto& degree = report.add("characterization.through_degree", params);
  if (p.is_zero() || through_degree(p) != k) fail(degree, json{{"n", n}, {"k", k}});

  auto& vanish = report.add("characterization.vanishing", params);
  auto& fixes = report.add("characterization.fixes_degree_k", params);
  for (int l = n % 2; l <= n; l += 2) {
    for (const auto& diagram : enumerate_basis(n, l, kMaxBoundaryPoints)) {
      const int tau = diagram.through_degree();
      if (tau > k) continue;
      const Morphism a(diagram);
      const Morphism after = compose(p, a);
      if (tau < k) {
        if (!after.is_zero()) fail(vanish, json{{"diagram", to_json(diagram)}, {"side", "a p"}});
        if (!compose(reflect(a), p).is_zero()) {
          fail(vanish, json{{"diagram", to_json(diagram)}, {"side", "p abar"}});
        }
      } else {
        const Morphism rest = after - a;
        if (!rest.is_zero() && through_degree(rest) >= k) {
          fail(fixes, json{{"diagram", to_json(diagram)}});
        }
      }
    }
  }
  return report;
}

Report verify_slide_through(int n, int m, int k, ProjectorCache& cache) {
  Report report;
  auto& slide = report.add("slide_through", json{{"n", n}, {"m", m}, {"k", k}});
  const Morphism pn = higher_projector(n, k, cache);
  const Morphism pm = higher_projector(m, k, cache);
  for (const auto& diagram : enumerate_basis(n, m, kMaxBoundaryPoints)) {
    const Morphism a(diagram);
    if (!(compose(pn, a) == compose(a, pm))) fail(slide, json{{"diagram", to_json(diagram)}});
  }
  return report;
}

Report verify_lower_expansion(int n, int k, ProjectorCache& cache) {
  Report report;
  const json params = {{"n", n}, {"k", k}};
  auto& direct = report.add("lower_expansion.slide_form", params);
  auto& factored = report.add("lower_expansion.factored_form", params);
  if (k >= n || k < 0 || (n - k) % 2 != 0) {
    throw DomainError("verify_lower_expansion: need 0 <= k < n with k = n mod 2");
  }
  const Morphism pnk = higher_projector(n, k, cache);
  Morphism slide_sum(n, n), factored_sum(n, n);
  const Morphism pn = jones_wenzl(n, cache);
  for (const auto& [diagram, coeff] : pn.terms()) {
    if (diagram == Matching::identity(n)) continue;
    const Scalar f = -coeff;
    const Morphism d(diagram);
    slide_sum += f * compose(d, pnk);
    const int l = diagram.through_degree();
    if (l < k) continue;
    const Factorization split = factor_through_strands(diagram);
    factored_sum += f * compose({Morphism(split.lower), higher_projector(l, k, cache),
                                 Morphism(split.upper)});
  }
  if (!(slide_sum == pnk)) fail(direct, params);
  if (!(factored_sum == pnk)) fail(factored, params);
  return report;
}

Report verify_twist(int n, ProjectorCache& cache) {
  Report report;
  const Morphism twist = resolve_braid(full_twist(n));
  std::vector<std::pair<int, Scalar>> eigen;
  for (int k = n % 2; k <= n; k += 2) {
    auto& check = report.add("twist.monomial_eigenvalue", json{{"n", n}, {"k", k}});
    try {
      const Scalar lambda = eigenvalue_on(twist, higher_projector(n, k, cache));
      const bool unit = lambda.is_monomial() && abs(lambda.num().leading()) == 1;
      if (!unit) fail(check, json{{"eigenvalue", to_string(lambda)}});
      eigen.emplace_back(k, lambda);
    } catch (const NotEigenvector&) {
      fail(check, json{{"reason", "not an eigenvector"}});
    }
  }
  auto& ratio = report.add("twist.eigenvalue_ratio", json{{"n", n}});
  for (const auto& [k, lk] : eigen) {
    for (const auto& [l, ll] : eigen) {
      if (k <= l) continue;
      if (!(lk / ll == Scalar::q(2 * (k - l)))) {
        fail(ratio, json{{"k", k}, {"l", l}, {"ratio", to_string(lk / ll)}});
      }
    }
  }
  return report;
}

Report verify_trace(int n, ProjectorCache& cache) {
  Report report;
  auto& jw = report.add("trace.jones_wenzl", json{{"n", n}});
  const Scalar tr = markov_trace(jones_wenzl(n, cache));
  if (!(tr == Scalar::quantum(n + 1))) fail(jw, json{{"trace", to_string(tr)}});

  auto& diag = report.add("trace.pairing_diagonal", json{{"n", n}});
  const auto seqs = enumerate_seqs(n);
  for (const auto& e : seqs) {
    for (const auto& v : seqs) {
      if (e == v) continue;
      if (!trace_pairing(p_eps(e, cache), p_eps(v, cache)).is_zero()) {
        fail(diag, json{{"epsilon", to_json(e)}, {"nu", to_json(v)}});
      }
    }
  }
  return report;
}

Suite parse_suite(const std::string& name) {
  static const std::pair<const char*, Suite> names[] = {
      {"all", Suite::all},         {"resolution", Suite::resolution},
      {"characterization", Suite::characterization},
      {"slide", Suite::slide},     {"branching", Suite::branching},
      {"twist", Suite::twist},     {"trace", Suite::trace}};
  for (const auto& [text, suite] : names) {
    if (name == text) return suite;
  }
  throw DomainError("unknown suite '" + name + "'");
}

Report run_suite(int n, Suite suite, ProjectorCache& cache) {
  if (n < 1) throw DomainError("run_suite: need n >= 1");
  auto wants = [&](Suite s) { return suite == Suite::all || suite == s; };
  Report report;
  if (wants(Suite::resolution)) {
    for (int m = 1; m <= n; ++m) {
      report.append(verify_jones_wenzl(m, cache));
      report.append(verify_resolution(m, cache));
    }
  }
  if (wants(Suite::characterization)) {
    for (int m = 1; m <= n; ++m) {
      for (int k = m % 2; k <= m; k += 2) report.append(verify_characterization(m, k, cache));
    }
  }
  if (wants(Suite::slide)) {
    for (int a = 0; a <= n; ++a) {
      for (int b = a % 2; b <= n; b += 2) {
        for (int k = a % 2; k <= std::min(a, b); k += 2) {
          report.append(verify_slide_through(a, b, k, cache));
        }
      }
    }
    for (int m = 2; m <= n; ++m) {
      for (int k = m % 2; k < m; k += 2) report.append(verify_lower_expansion(m, k, cache));
    }
  }
  if (wants(Suite::branching)) {
    for (int m = 1; m < n; ++m) {
      for (const auto& e : enumerate_seqs(m)) report.append(verify_branching(e, cache));
    }
  }
  if (wants(Suite::twist)) {
    for (int m = 2; m <= n; ++m) report.append(verify_twist(m, cache));
  }
  if (wants(Suite::trace)) {
    for (int m = 1; m <= n; ++m) report.append(verify_trace(m, cache));
  }
  return report;
}

json to_json(const CheckResult& r) {
  json out = {{"check", r.check}, {"params", r.params}, {"pass", r.pass}};
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"pass", r.passed()}, {"checks", checks}};
}

}  // namespace tl
