#ifndef VPT_STRONG_COUPLING_HPP
#define VPT_STRONG_COUPLING_HPP

#include <optional>
#include <vector>

#include "vpt/optimize.hpp"

namespace vpt {

/// Reference constants used for branch selection, convergence analysis and
/// acceptance checks. Stored as decimal strings; convert at any precision.
namespace reference {
/// Strong-coupling limit of the leading coefficient (23 digits; the
/// most precise value this library takes as ground truth).
inline constexpr const char* alpha0 = "0.66798625915577710827096";
/// Slope of the optimal-sigma law sigma_N ~ c N (analytic origin).
inline constexpr const char* sigma_slope = "0.186047272";
/// Subleading fit constant b in sigma_N = c N (1 + b / N^(2/3)).
inline constexpr const char* sigma_subleading = "6.85";
/// Saddle constant controlling the leading cut contribution.
inline constexpr const char* saddle_gamma = "-0.242964029";
/// Convergence radius |gbar_s| of the strong-coupling series.
inline constexpr const char* radius_abs = "0.160";
/// Angle of the complex-conjugate singularity pair (radians).
inline constexpr const char* singularity_angle = "-0.467";

Real alpha0_value(unsigned digits10);
}  // namespace reference

/// Strong-coupling coefficients alpha_0..alpha_{n_max} computed at one order
/// N with the selected sigma_N (evaluation point ghat = 1/sigma_N).
struct StrongCouplingSeries {
    int order = 0;                // N
    Real sigma;                   // sigma_N used
    SigmaKind sigma_kind = SigmaKind::extremum;
    std::vector<Real> alphas;     // alpha_0..alpha_{n_max}
    unsigned digits10 = 0;

    int n_max() const { return (int)alphas.size() - 1; }
};

/// Per-order distance of (alpha_0)_N from the reference limit.
struct ConvergenceRecord {
    struct Entry {
        int order = 0;
        Real delta;
        bool cusp_flag = false;  // delta at the working-precision floor
    };
    std::vector<Entry> entries;
    unsigned digits10 = 0;
};

/// alpha_n at order N evaluated at ghat = 1/sigma:
///   alpha_n = y^{(2n-1)/3} sum_{j=0}^{N-n} E_j T_{j,n} y^j,   y = ghat/4,
///   T_{j,n} = sum_{d=n}^{N-j} (-1)^{d+n} ((1-3j)/2 choose d) (d choose n).
/// The sum is evaluated in exact rationals with ghat rationalized at the
/// working precision; the fractional power is applied once at the end.
Real alpha(const WeakSeries& weak, int order, int index, const Real& sigma, unsigned digits10);

/// Builds sigma_N (via select_sigma) and alpha_0..alpha_{n_max}.
StrongCouplingSeries strong_series(const WeakSeries& weak, int order, int n_max,
                                   unsigned digits10);

/// E = (g/4)^(1/3) [alpha_0 + alpha_1 (4 w^3/g)^(2/3) + ...] truncated to
/// `terms` terms.
Real strong_eval(const StrongCouplingSeries& series, const CouplingSpec& spec, int terms);

/// Delta_N = |(alpha_0)_N - alpha0_ref| for N = 1..max_order.
ConvergenceRecord delta_series(const WeakSeries& weak, int max_order, unsigned digits10);

/// Estimated convergence radius |gbar_s| from the geometric decay of
/// |alpha_n| over n in [n_lo, n_hi] (defaults: upper half of what's there).
/// The series in x = (4/gbar)^(2/3) has radius 1/r, so |gbar_s| = 4 r^(3/2).
Real estimate_gs(const StrongCouplingSeries& series, std::optional<int> n_lo = std::nullopt,
                 std::optional<int> n_hi = std::nullopt);

}  // namespace vpt

#endif
