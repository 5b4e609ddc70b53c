#ifndef VPT_WEAK_SERIES_HPP
#define VPT_WEAK_SERIES_HPP

#include <vector>

#include "vpt/numeric.hpp"

namespace vpt {

/// Weak-coupling perturbation coefficients E_0..E_K of the ground-state
/// energy, in the convention E(g) = omega * sum_k E_k (g / 4 omega^3)^k.
/// All entries are exact rationals.
struct WeakSeries {
    int max_order = 0;
    std::vector<Rational> coeffs;  // coeffs[k] = E_k, size max_order + 1

    const Rational& at(int k) const {
        if (k < 0 || k > max_order) throw UsageError("WeakSeries: order out of range");
        return coeffs[k];
    }
};

/// Full recursion table B_{k,m}. rows[k][m] for 0 <= m <= 2k; E_k = -B_{k,1}.
struct BenderWuTable {
    std::vector<std::vector<Rational>> rows;

    const Rational& at(int k, int m) const;
    WeakSeries weak_series() const;
};

/// Exact E_0..E_K from the wavefunction recursion (units omega = 1).
WeakSeries bender_wu(int max_order);

/// Same sweep, returning the whole table (memory grows ~ K^2 entries).
BenderWuTable bender_wu_table(int max_order);

/// Factorial-growth approximant A_k = -(1/pi) sqrt(6/pi) (-3)^k k^{-1/2} k!.
Real large_order_asymptote(int k, unsigned digits10);

/// Im E(g - i eta) for g < 0 from the tunneling formula:
/// -omega sqrt(6/pi) sqrt(-4 omega^3 / 3g) exp(4 omega^3 / 3g).
Real semiclassical_disc(const Real& g, const Real& omega, unsigned digits10);

}  // namespace vpt

#endif
