#include "tl/projectors.hpp"

#include <mutex>

#include "tl/errors.hpp"

namespace tl {

// ------------------------------------------------------------- ProjectorCache

std::optional<Morphism> ProjectorCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = store_.find(key);
  if (it == store_.end()) return std::nullopt;
  return it->second;
}

void ProjectorCache::insert(const std::string& key, const Morphism& value) {
  {
    std::unique_lock lock(mutex_);
    store_.insert_or_assign(key, value);
  }
  if (backing_ && persistent_key(key)) backing_->store(key, value);
}

Morphism ProjectorCache::get_or_compute(const std::string& key,
                                        const std::function<Morphism()>& compute) {
  if (auto hit = find(key)) return *hit;
  if (backing_ && persistent_key(key)) {
    if (auto loaded = backing_->load(key)) {
      std::unique_lock lock(mutex_);
      store_.insert_or_assign(key, *loaded);
      return *loaded;
    }
  }
  Morphism value = compute();
  insert(key, value);
  return value;
}

std::size_t ProjectorCache::size() const {
  std::shared_lock lock(mutex_);
  return store_.size();
}

void ProjectorCache::clear() {
  std::unique_lock lock(mutex_);
  store_.clear();
}

bool ProjectorCache::persistent_key(const std::string& key) {
  return key.rfind("jw:", 0) == 0 || key.rfind("peps:", 0) == 0;
}

// -------------------------------------------------------------- constructors

std::string jw_key(int n) { return "jw:" + std::to_string(n); }
std::string peps_key(const SignSeq& e) { return "peps:" + e.to_string(); }

namespace {

void require_admissible(const SignSeq& e, const char* what) {
  if (e.length() < 1 || !is_admissible(e)) {
    throw DomainError(std::string(what) + ": sequence " + e.to_string() + " is not admissible");
  }
}

}  // namespace

Morphism jones_wenzl(int n, ProjectorCache& cache) {
  if (n < 0) throw DomainError("jones_wenzl: negative strand count");
  if (n <= 1) return Morphism::identity(n);
  return cache.get_or_compute(jw_key(n), [&] {
    const Morphism prev = tensor(jones_wenzl(n - 1, cache), Morphism::identity(1));
    const Morphism sandwich = compose({prev, Morphism::elementary(n, n - 1), prev});
    return prev - Scalar(quantum_int(n - 1), quantum_int(n)) * sandwich;
  });
}

Morphism top_half(const SignSeq& e, ProjectorCache& cache) {
  require_admissible(e, "top_half");
  if (e.length() == 1) return Morphism::identity(1);
  return cache.get_or_compute("top:" + e.to_string(), [&] {
    const SignSeq head = e.prefix();
    const int k = head.sum();
    const Morphism extended = tensor(top_half(head, cache), Morphism::identity(1));
    if (e[e.length() - 1] > 0) return compose(jones_wenzl(k + 1, cache), extended);
    const Morphism turn = tensor(Morphism::identity(k - 1), Morphism(Matching::cup()));
    return compose({jones_wenzl(k - 1, cache), turn, extended});
  });
}

Morphism q_elem(const SignSeq& e, ProjectorCache& cache) {
  require_admissible(e, "q_elem");
  return cache.get_or_compute("q:" + e.to_string(), [&] {
    const Morphism t = top_half(e, cache);
    return compose(reflect(t), t);
  });
}

Scalar f_coeff(const SignSeq& e) {
  require_admissible(e, "f_coeff");
  Scalar f(1);
  int running = 1;
  for (int i = 1; i < e.length(); ++i) {
    if (e[i] < 0) f *= Scalar(quantum_int(running), quantum_int(running + 1));
    running += e[i];
  }
  return f;
}

Morphism p_eps(const SignSeq& e, ProjectorCache& cache) {
  require_admissible(e, "p_eps");
  return cache.get_or_compute(peps_key(e), [&] { return f_coeff(e) * q_elem(e, cache); });
}

Morphism higher_projector(int n, int k, ProjectorCache& cache) {
  if (n < 0 || k < 0 || k > n || (n - k) % 2 != 0) {
    throw DomainError("higher_projector: need 0 <= k <= n with k = n mod 2");
  }
  if (n == 0) return Morphism::identity(0);
  return cache.get_or_compute("pnk:" + std::to_string(n) + "," + std::to_string(k), [&] {
    Morphism sum(n, n);
    for (const auto& e : enumerate_seqs(n, k)) sum += p_eps(e, cache);
    return sum;
  });
}

Morphism jones_wenzl(int n) {
  ProjectorCache cache;
  return jones_wenzl(n, cache);
}
Morphism top_half(const SignSeq& e) {
  ProjectorCache cache;
  return top_half(e, cache);
}
Morphism q_elem(const SignSeq& e) {
  ProjectorCache cache;
  return q_elem(e, cache);
}
Morphism p_eps(const SignSeq& e) {
  ProjectorCache cache;
  return p_eps(e, cache);
}
Morphism higher_projector(int n, int k) {
  ProjectorCache cache;
  return higher_projector(n, k, cache);
}

}  // namespace tl
