#ifndef VPT_REEXPAND_HPP
#define VPT_REEXPAND_HPP

#include <vector>

#include "vpt/sigma_poly.hpp"
#include "vpt/weak_series.hpp"

namespace vpt {

/// Physical couplings. Stored as exact rationals so CLI inputs round-trip
/// deterministically; gbar = g/omega^3 is derived.
struct CouplingSpec {
    Rational g;
    Rational omega;

    CouplingSpec(Rational g_, Rational omega_) : g(std::move(g_)), omega(std::move(omega_)) {
        if (!(g > 0)) throw UsageError("CouplingSpec: g must be positive");
        if (omega < 0) throw UsageError("CouplingSpec: omega must be non-negative");
    }
    Rational gbar() const {
        if (omega == 0) throw UsageError("CouplingSpec: gbar undefined at omega = 0");
        return g / (omega * omega * omega);
    }
};

/// Reexpanded coefficients eps_0(sigma)..eps_N(sigma) plus the weak-series
/// prefix they were built from. Immutable after construction.
struct ReexpandedSeries {
    int order = 0;
    std::vector<SigmaPolynomial> polys;
    WeakSeries source;

    const SigmaPolynomial& at(int k) const {
        if (k < 0 || k > order) throw UsageError("ReexpandedSeries: order out of range");
        return polys[k];
    }
};

/// Generalized binomial ((1-3j)/2 choose m), exact.
Rational half_binomial(int j, int m);

/// eps_k(sigma) = sum_j E_j ((1-3j)/2 choose k-j) (-4 sigma)^{k-j} for k <= N.
ReexpandedSeries epsilon_polys(const WeakSeries& weak, int order);

/// Truncated variational energy
///   W_N = Omega sum_{k<=N} eps_k(sigma) (ghat/4)^k,
/// ghat = g/Omega^3, sigma = Omega(Omega^2 - omega^2)/g.
///
/// sigma and ghat are rationalized at the working precision and the sum runs
/// in exact rationals (Horner), so rounding happens once, on the final
/// conversion. Verified by a second pass at +20 digits; escalates twice
/// before giving up.
Real w_n_eval(const ReexpandedSeries& series, const CouplingSpec& spec, const Real& trial_omega,
              unsigned digits10);

}  // namespace vpt

#endif
