#include "vpt/coeff_cache.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace vpt {

namespace {
constexpr const char* kMagic = "vpt-coeff-cache";
constexpr int kVersion = 1;
}  // namespace

void save_cache_file(const std::filesystem::path& path, const WeakSeries& series) {
    std::ofstream out(path);
    if (!out) throw CacheError("cache: cannot open for writing: " + path.string());
    out << kMagic << ' ' << kVersion << ' ' << series.max_order << '\n';
    for (int k = 0; k <= series.max_order; ++k) {
        const Rational& q = series.coeffs[k];
        out << k << ' ' << numerator(q).str() << '/' << denominator(q).str() << '\n';
    }
    if (!out) throw CacheError("cache: write failed: " + path.string());
}

WeakSeries load_cache_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cache: cannot open: " + path.string());
    std::string magic;
    int version = -1, max_order = -1;
    std::string header;
    if (!std::getline(in, header)) throw CacheError("cache: empty file: " + path.string());
    {
        std::istringstream hs(header);
        if (!(hs >> magic >> version >> max_order) || magic != kMagic)
            throw CacheError("cache: bad header (line 1): " + path.string());
        if (version != kVersion)
            throw CacheError("cache: format version " + std::to_string(version) +
                             " not supported (expected " + std::to_string(kVersion) + ")");
        if (max_order < 0) throw CacheError("cache: negative max order (line 1)");
    }
    WeakSeries series;
    series.max_order = max_order;
    series.coeffs.resize(max_order + 1);
    std::string line;
    for (int k = 0; k <= max_order; ++k) {
        if (!std::getline(in, line))
            throw CacheError("cache: truncated at line " + std::to_string(k + 2) + ": " +
                             path.string());
        std::istringstream ls(line);
        int idx;
        std::string ratio;
        if (!(ls >> idx >> ratio) || idx != k)
            throw CacheError("cache: bad record at line " + std::to_string(k + 2) + ": " +
                             path.string());
        try {
            series.coeffs[k] = Rational(ratio);
        } catch (const std::exception&) {
            throw CacheError("cache: unparsable rational at line " + std::to_string(k + 2) + ": " +
                             path.string());
        }
    }
    return series;
}

CacheReport verify_cache_file(const std::filesystem::path& path, const WeakSeries& expected) {
    CacheReport report;
    WeakSeries loaded = load_cache_file(path);
    report.max_order = loaded.max_order;
    if (loaded.max_order != expected.max_order) {
        report.detail = "max order differs";
        return report;
    }
    for (int k = 0; k <= loaded.max_order; ++k) {
        if (loaded.coeffs[k] != expected.coeffs[k]) {
            report.detail = "mismatch at k=" + std::to_string(k);
            return report;
        }
    }
    report.bit_exact = true;
    report.detail = "all " + std::to_string(loaded.max_order + 1) + " records bit-exact";
    return report;
}

WeakSeries CoefficientCache::series(int max_order) {
    if (max_order < 0) throw UsageError("CoefficientCache: negative order");
    {
        std::shared_lock lock(mutex_);
        if (primed_ && store_.max_order >= max_order) {
            WeakSeries prefix;
            prefix.max_order = max_order;
            prefix.coeffs.assign(store_.coeffs.begin(), store_.coeffs.begin() + max_order + 1);
            return prefix;
        }
    }
    std::unique_lock lock(mutex_);
    if (!primed_ || store_.max_order < max_order) {
        // E_k is prefix-stable, so recomputing from scratch at the larger
        // order supersedes the old store.
        store_ = bender_wu(max_order);
        primed_ = true;
    }
    WeakSeries prefix;
    prefix.max_order = max_order;
    prefix.coeffs.assign(store_.coeffs.begin(), store_.coeffs.begin() + max_order + 1);
    return prefix;
}

int CoefficientCache::available_order() const {
    std::shared_lock lock(mutex_);
    return primed_ ? store_.max_order : -1;
}

void CoefficientCache::adopt(WeakSeries series) {
    std::unique_lock lock(mutex_);
    store_ = std::move(series);
    primed_ = true;
}

CoefficientCache& CoefficientCache::instance() {
    static CoefficientCache cache;
    return cache;
}

}  // namespace vpt
