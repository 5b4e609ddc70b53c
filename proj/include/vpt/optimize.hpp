#ifndef VPT_OPTIMIZE_HPP
#define VPT_OPTIMIZE_HPP

#include <string>

#include "vpt/reexpand.hpp"
#include "vpt/roots.hpp"

namespace vpt {

/// P_N(sigma) = -2 d eps_{N+1}/d sigma; its roots are the stationary points
/// of W_N with respect to Omega.
struct CriticalPolynomial {
    int order = 0;
    SigmaPolynomial poly;
};

enum class SigmaKind { extremum, turning_point };

inline const char* to_string(SigmaKind k) {
    return k == SigmaKind::extremum ? "extremum" : "turning-point";
}

/// Selected variational parameter for one order, with the fit value used to
/// pick the branch.
struct SigmaOptimum {
    int order = 0;
    Real sigma;
    SigmaKind kind = SigmaKind::extremum;
    Real fit_reference;
};

/// Root Omega > omega of Omega^3 - omega^2 Omega - g sigma = 0.
struct FrequencySolution {
    Real Omega;
    Real residual;
};

CriticalPolynomial critical_polynomial(const ReexpandedSeries& series, int order);

/// Fit sigma_fit = c N (1 + b / N^(2/3)) used for branch selection.
Real sigma_fit_value(int order, unsigned digits10);

/// Candidate sigma values are the positive roots of P_N (extrema) and of
/// P_N' (turning points); the one nearest sigma_fit wins. Ties prefer the
/// extremum, then the smaller sigma. Roots are refined to
/// digits10 + 10 digits.
SigmaOptimum select_sigma(const WeakSeries& weak, int order, unsigned digits10);

FrequencySolution omega_from_sigma(const Real& sigma, const CouplingSpec& spec,
                                   unsigned digits10);

/// CSV row "N,sigma,kind,fit_reference" (decimal strings at digits10).
std::string sigma_csv_row(const SigmaOptimum& opt, unsigned digits10);

}  // namespace vpt

#endif
