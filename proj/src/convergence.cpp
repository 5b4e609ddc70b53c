#include "vpt/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vpt {

double OscillationModel::envelope_rate() const { return scale_a * std::cos(theta); }
double OscillationModel::oscillation_rate() const { return std::abs(scale_a * std::sin(theta)); }

double predicted_exponent(const CutConstants& constants, double g) {
    if (constants.gamma >= 0) throw UsageError("predicted_exponent: gamma must be negative");
    double lead = -constants.b * std::log(-constants.gamma);
    if (std::isinf(g)) return lead;
    if (!(g > 0)) throw UsageError("predicted_exponent: g must be positive or infinite");
    if (!(constants.c > 0)) throw UsageError("predicted_exponent: c must be positive");
    return lead + std::pow(constants.c * g, -2.0 / 3.0);
}

double oscillation_scale(double gbar_s_abs, double c) {
    if (!(gbar_s_abs > 0) || !(c > 0))
        throw UsageError("oscillation_scale: inputs must be positive");
    return std::pow(gbar_s_abs * c, -2.0 / 3.0);
}

double predict_delta(const OscillationModel& model, int order) {
    if (order < 1) throw UsageError("predict_delta: order must be >= 1");
    double x = std::cbrt((double)order);
    double osc = std::cos(model.scale_a * std::sin(model.theta) * x + model.phase);
    return model.prefactor * std::exp(-model.scale_a * std::cos(model.theta) * x) * std::abs(osc);
}

namespace {

struct FitPoint {
    double x;  // N^(1/3)
    double y;  // ln Delta_N
};

// min over |cos| below which a point is treated as a model cusp
constexpr double kCosCusp = 0.02;

/// For fixed (v, phi), fit y ~ lnA - u x + ln|cos(v x + phi)| by linear
/// least squares in (lnA, u). Returns mean squared residual over non-cusp
/// points (infinity if the cut leaves too few).
double separable_fit(const std::vector<FitPoint>& pts, double v, double phi, double& lnA,
                     double& u) {
    double sw = 0, sx = 0, sz = 0, sxx = 0, sxz = 0;
    int used = 0;
    for (const auto& p : pts) {
        double c = std::cos(v * p.x + phi);
        if (std::abs(c) < kCosCusp) continue;
        double z = p.y - std::log(std::abs(c));
        sw += 1;
        sx += p.x;
        sz += z;
        sxx += p.x * p.x;
        sxz += p.x * z;
        ++used;
    }
    if (used < 6) return std::numeric_limits<double>::infinity();
    double det = sw * sxx - sx * sx;
    if (std::abs(det) < 1e-12) return std::numeric_limits<double>::infinity();
    // z = lnA - u x
    lnA = (sz * sxx - sx * sxz) / det;
    u = -(sw * sxz - sx * sz) / det;
    double sse = 0;
    for (const auto& p : pts) {
        double c = std::cos(v * p.x + phi);
        if (std::abs(c) < kCosCusp) continue;
        double r = p.y - (lnA - u * p.x + std::log(std::abs(c)));
        sse += r * r;
    }
    return sse / used;
}

}  // namespace

OscillationModel fit_model(const ConvergenceRecord& record, int n_min, int n_max) {
    if (n_min > n_max) throw UsageError("fit_model: empty order range");
    std::vector<FitPoint> pts;
    int excluded = 0;
    double floor_log = std::log(10.0) * (-(double)record.digits10 + 1);
    for (const auto& e : record.entries) {
        if (e.order < n_min || e.order > n_max) continue;
        if (e.cusp_flag || e.delta == 0) {
            ++excluded;
            continue;
        }
        double y = (double)log(e.delta);
        if (y < floor_log + std::log(10.0)) {  // within a factor 10 of the floor
            ++excluded;
            continue;
        }
        pts.push_back({std::cbrt((double)e.order), y});
    }
    if ((int)pts.size() < 10)
        throw UsageError("fit_model: fewer than 10 usable points in range");

    // coarse grid over (oscillation rate v, phase), then local shrinking
    double best_sse = std::numeric_limits<double>::infinity();
    double best_v = 0, best_phi = 0, best_lnA = 0, best_u = 0;
    const double pi = 3.14159265358979323846;
    auto scan = [&](double v_lo, double v_hi, double v_step, double p_lo, double p_hi,
                    double p_step) {
        for (double v = v_lo; v <= v_hi + 1e-12; v += v_step) {
            for (double phi = p_lo; phi <= p_hi + 1e-12; phi += p_step) {
                double lnA, u;
                double sse = separable_fit(pts, v, phi, lnA, u);
                if (sse < best_sse) {
                    best_sse = sse;
                    best_v = v;
                    best_phi = phi;
                    best_lnA = lnA;
                    best_u = u;
                }
            }
        }
    };
    scan(0.5, 12.0, 0.05, 0.0, pi, pi / 64);
    for (int round = 0; round < 4; ++round) {
        double dv = 0.05 / std::pow(8.0, round), dp = (pi / 64) / std::pow(8.0, round);
        scan(best_v - 8 * dv, best_v + 8 * dv, dv, best_phi - 8 * dp, best_phi + 8 * dp, dp);
    }
    if (!std::isfinite(best_sse))
        throw ConvergenceError("fit_model: singular fit (no candidate with enough points)");

    OscillationModel m;
    m.scale_a = std::hypot(best_u, best_v);
    m.theta = -std::atan2(best_v, best_u);  // negative-angle convention
    m.prefactor = std::exp(best_lnA);
    m.phase = best_phi;
    m.residual_norm = std::sqrt(best_sse);
    m.points_used = (int)pts.size();
    m.points_excluded = excluded;
    return m;
}

SigmaLawFit fit_sigma_law(const std::vector<SigmaOptimum>& sigmas, int n_min, int n_max) {
    std::vector<std::pair<double, double>> pts;  // (N, sigma)
    for (const auto& s : sigmas)
        if (s.order >= n_min && s.order <= n_max) pts.push_back({(double)s.order, (double)s.sigma});
    if ((int)pts.size() < 10) throw UsageError("fit_sigma_law: fewer than 10 optima in range");
    // sigma = c N + d N^(1/3), b = d/c
    double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
    for (auto& [N, sig] : pts) {
        double f1 = N, f2 = std::cbrt(N);
        s11 += f1 * f1;
        s12 += f1 * f2;
        s22 += f2 * f2;
        b1 += f1 * sig;
        b2 += f2 * sig;
    }
    double det = s11 * s22 - s12 * s12;
    if (std::abs(det) < 1e-12) throw ConvergenceError("fit_sigma_law: singular normal equations");
    double c = (b1 * s22 - s12 * b2) / det;
    double d = (s11 * b2 - s12 * b1) / det;
    SigmaLawFit fit;
    fit.c = c;
    fit.b = d / c;
    double sse = 0;
    for (auto& [N, sig] : pts) {
        double r = sig - (c * N + d * std::cbrt(N));
        sse += r * r;
    }
    fit.rms_residual = std::sqrt(sse / pts.size());
    return fit;
}

}  // namespace vpt
