#ifndef VERIFY_CACHE_HPP
#define VERIFY_CACHE_HPP

#include <optional>
#include <string>

#include "verify/hwrep.hpp"
#include "verify/klpoly.hpp"

namespace verify {

// Embedded in every cache file and cache key; bumping it invalidates all
// previously stored exact values.
extern const char* kToolVersion;

// Cache root resolution: an explicit directory wins, then the
// VERIFY_CACHE_DIR environment variable, then ./cache.
std::string resolve_cache_dir(const std::string& explicit_dir);

// Exact on-disk store for the two expensive artifact families:
// Kazhdan-Lusztig entries between named group elements (kl/<type>/) and
// irreducible-module tables (irrep/<type>/<highest weight>.json). Every file
// embeds its inputs verbatim; a load whose inputs, version, or shapes do not
// match reports a miss so the caller recomputes and overwrites.
class DiskCache {
 public:
  explicit DiskCache(std::string root);
  const std::string& root() const { return root_; }

  std::optional<PolyZ> load_kl(const std::string& type, const std::string& y,
                               const std::string& w) const;
  void store_kl(const std::string& type, const std::string& y, const std::string& w,
                const PolyZ& p) const;

  std::optional<HWModule> load_module(const ChevalleyAlgebra& g, const IVec& lambda) const;
  void store_module(const HWModule& M) const;

  struct Stats {
    long long hits = 0;
    long long misses = 0;
    long long writes = 0;
  };
  mutable Stats stats;

 private:
  std::string root_;
  std::string kl_path(const std::string& type, const std::string& y,
                      const std::string& w) const;
  std::string irrep_path(const std::string& type, const IVec& lambda) const;
  void write_text(const std::string& path, const std::string& text) const;
};

// Kazhdan-Lusztig entry between the longest elements of the double cosets of
// mu and lambda, through the cache when one is given.
PolyZ coset_kl_cached(const DiskCache* cache, const AffWeyl& W, const IVec& lambda,
                      const IVec& mu);
// Costalk series on top of the cached entry.
PolyZ costalk_cached(const DiskCache* cache, const AffWeyl& W, const IVec& lambda,
                     const IVec& mu);
// Irreducible-module tables through the cache (build and store on a miss).
HWModule module_cached(const DiskCache* cache, const ChevalleyAlgebra& g, const IVec& lambda);

}  // namespace verify

#endif
