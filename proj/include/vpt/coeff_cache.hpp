#ifndef VPT_COEFF_CACHE_HPP
#define VPT_COEFF_CACHE_HPP

#include <filesystem>
#include <shared_mutex>
#include <string>

#include "vpt/weak_series.hpp"

namespace vpt {

/// Report produced by verify_cache_file.
struct CacheReport {
    int max_order = -1;
    bool bit_exact = false;
    std::string detail;
};

/// Text format, one record per order:
///   vpt-coeff-cache 1 <max_order>
///   <k> <numerator>/<denominator>
/// Rationals are canonical GMP decimal strings, so a write/read cycle is
/// bit-exact by construction.
void save_cache_file(const std::filesystem::path& path, const WeakSeries& series);
WeakSeries load_cache_file(const std::filesystem::path& path);

/// Re-parses `path` and compares every rational against `expected`.
CacheReport verify_cache_file(const std::filesystem::path& path, const WeakSeries& expected);

/// Process-wide store of weak-coupling coefficients. Readers share; extending
/// the order takes the write lock. All downstream modules pull prefixes from
/// here so E_k is only ever computed once.
class CoefficientCache {
  public:
    /// Prefix E_0..E_K, extending the table if needed.
    WeakSeries series(int max_order);

    /// Highest order currently available without recomputation.
    int available_order() const;

    /// Replace the store with coefficients loaded from a file.
    void adopt(WeakSeries series);

    static CoefficientCache& instance();

  private:
    mutable std::shared_mutex mutex_;
    WeakSeries store_;
    bool primed_ = false;
};

}  // namespace vpt

#endif
