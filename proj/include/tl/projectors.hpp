#pragma once

/**
 * Jones-Wenzl projectors and the idempotents p_e, p_{n,k} built from them.
 *
 * Every constructor takes a ProjectorCache; intermediate projectors (p_k
 * inside t_e, p_{n-1} inside p_n) are memoized there. Cached values are
 * always identical to freshly computed ones.
 */

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "tl/morphism.hpp"
#include "tl/sequences.hpp"

namespace tl {

/// Persistent storage behind a ProjectorCache (see DiskCache).
class CacheBacking {
 public:
  virtual ~CacheBacking() = default;
  virtual std::optional<Morphism> load(const std::string& key) = 0;
  virtual void store(const std::string& key, const Morphism& value) = 0;
};

/// Thread-safe memo table keyed by strings such as "jw:5" or "peps:(1,-1)".
/// Keys starting with "jw:" or "peps:" are forwarded to the backing store.
class ProjectorCache {
 public:
  ProjectorCache() = default;
  explicit ProjectorCache(std::shared_ptr<CacheBacking> backing) : backing_(std::move(backing)) {}

  std::optional<Morphism> find(const std::string& key) const;
  void insert(const std::string& key, const Morphism& value);
  Morphism get_or_compute(const std::string& key, const std::function<Morphism()>& compute);
  std::size_t size() const;
  void clear();

  static bool persistent_key(const std::string& key);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, Morphism> store_;
  std::shared_ptr<CacheBacking> backing_;
};

/// p_n by Wenzl's recurrence; p_0 is the empty identity and p_1 = 1.
Morphism jones_wenzl(int n, ProjectorCache& cache);
Morphism jones_wenzl(int n);

/// t_e in TL(|e|, l(e)), built from t_(1) = 1 by
///   t_{e.(+1)} = p_{k+1} then (t_e (x) 1),
///   t_{e.(-1)} = p_{k-1} then (1_{k-1} (x) cup) then (t_e (x) 1),
/// with k = |e|. DomainError for inadmissible e.
Morphism top_half(const SignSeq& e, ProjectorCache& cache);
Morphism top_half(const SignSeq& e);

/// q_e = reflect(t_e) then t_e, in TL_n.
Morphism q_elem(const SignSeq& e, ProjectorCache& cache);
Morphism q_elem(const SignSeq& e);

/// f_(1) = 1, f_{e.(+1)} = f_e, f_{e.(-1)} = f_e [k]/[k+1] with k = |e|.
Scalar f_coeff(const SignSeq& e);

/// p_e = f_e q_e.
Morphism p_eps(const SignSeq& e, ProjectorCache& cache);
Morphism p_eps(const SignSeq& e);

/// p_{n,k}: sum of p_e over admissible e of length n and size k.
/// p_{0,0} is the empty identity. DomainError unless 0 <= k <= n, k = n mod 2.
Morphism higher_projector(int n, int k, ProjectorCache& cache);
Morphism higher_projector(int n, int k);

/// Cache keys used by the constructors above.
std::string jw_key(int n);
std::string peps_key(const SignSeq& e);

}  // namespace tl
