#ifndef VPT_CONVERGENCE_HPP
#define VPT_CONVERGENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "vpt/strong_coupling.hpp"

namespace vpt {

/// Error model Delta_N ~ prefactor e^{-a cos(theta) N^(1/3)} |cos(a sin(theta) N^(1/3) + phase)|.
/// The phase is a fit-only extension: the asymptotic form carries none, but
/// measured cusp positions need the offset.
struct OscillationModel {
    double scale_a = 0;     // a > 0
    double theta = 0;       // radians; envelope rate = a cos(theta) > 0
    double prefactor = 0;   // > 0
    double phase = 0;
    double residual_norm = 0;
    int points_used = 0;
    int points_excluded = 0;

    double envelope_rate() const;      // a cos(theta)
    double oscillation_rate() const;   // |a sin(theta)|
};

/// Constants of the cut analysis: subleading fit constant b, sigma-law slope
/// c, saddle constant gamma (negative).
struct CutConstants {
    double b = 0;
    double c = 0;
    double gamma = 0;
};

/// Decay exponent -b ln(-gamma) + (c g)^(-2/3); pass g = infinity for the
/// strong-coupling limit.
double predicted_exponent(const CutConstants& constants, double g);

/// a = (|gbar_s| c)^(-2/3).
double oscillation_scale(double gbar_s_abs, double c);

/// Model prediction for Delta_N.
double predict_delta(const OscillationModel& model, int order);

/// Least-squares fit of log Delta_N to the oscillation model over orders in
/// [n_min, n_max]. Cusp-flagged entries and entries within a factor 10 of
/// the precision floor are excluded. Separable linear part (prefactor and
/// envelope rate) + derivative-free search over (oscillation rate, phase).
OscillationModel fit_model(const ConvergenceRecord& record, int n_min, int n_max);

/// Fit of sigma_N to c N (1 + b / N^(2/3)) over orders in [n_min, n_max];
/// linear least squares in (c, c*b). Returns (c_fit, b_fit, rms residual).
struct SigmaLawFit {
    double c = 0;
    double b = 0;
    double rms_residual = 0;
};
SigmaLawFit fit_sigma_law(const std::vector<SigmaOptimum>& sigmas, int n_min, int n_max);

}  // namespace vpt

#endif
