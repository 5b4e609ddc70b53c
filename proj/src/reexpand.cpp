#include "vpt/reexpand.hpp"

namespace vpt {

Rational half_binomial(int j, int m) {
    if (m < 0) return 0;
    Rational b = 1;
    for (int t = 0; t < m; ++t) b *= Rational(1 - 3 * j - 2 * t, 2 * (t + 1));
    return b;
}

ReexpandedSeries epsilon_polys(const WeakSeries& weak, int order) {
    if (order < 0) throw UsageError("epsilon_polys: negative order");
    if (weak.max_order < order)
        throw UsageError("epsilon_polys: weak series carries only " +
                         std::to_string(weak.max_order) + " orders, need " + std::to_string(order));
    ReexpandedSeries out;
    out.order = order;
    out.source.max_order = order;
    out.source.coeffs.assign(weak.coeffs.begin(), weak.coeffs.begin() + order + 1);
    out.polys.reserve(order + 1);
    for (int k = 0; k <= order; ++k) {
        // power i of sigma comes only from j = k - i
        std::vector<Rational> c(k + 1);
        Rational pow4 = 1;  // (-4)^i
        for (int i = 0; i <= k; ++i) {
            c[i] = weak.coeffs[k - i] * half_binomial(k - i, i) * pow4;
            pow4 *= -4;
        }
        out.polys.emplace_back(std::move(c));
    }
    return out;
}

namespace {

/// One exact pass: rationalize sigma and ghat at `digits`, Horner in (ghat/4).
Real w_n_pass(const ReexpandedSeries& series, const Real& trial_omega, const Real& sigma_real,
              const Real& ghat_real, unsigned digits) {
    PrecisionGuard guard(digits);
    Rational sigma = rationalize(sigma_real, digits);
    Rational x = rationalize(ghat_real, digits) / 4;
    Rational acc;
    for (int k = series.order; k >= 0; --k) acc = acc * x + series.polys[k].eval(sigma);
    return trial_omega * Real(acc);
}

}  // namespace

Real w_n_eval(const ReexpandedSeries& series, const CouplingSpec& spec, const Real& trial_omega,
              unsigned digits10) {
    if (!(trial_omega > 0)) throw UsageError("w_n_eval: requires Omega > 0");
    if (digits10 < 16) throw UsageError("w_n_eval: precision below 16-digit floor");

    // working precision grows with the coefficient magnitudes
    unsigned work = 40 + 2 * (unsigned)series.order + digits10;
    for (int attempt = 0; attempt < 3; ++attempt) {
        PrecisionGuard guard(work + 40);
        Real omega_hp = trial_omega;
        Real g = Real(spec.g), w = Real(spec.omega);
        Real sigma = omega_hp * (omega_hp * omega_hp - w * w) / g;
        Real ghat = g / (omega_hp * omega_hp * omega_hp);
        Real first = w_n_pass(series, omega_hp, sigma, ghat, work);
        Real second = w_n_pass(series, omega_hp, sigma, ghat, work + 20);
        Real scale = abs(second) > 1 ? abs(second) : Real(1);
        if (abs(first - second) <= scale * pow(Real(10), -(int)digits10)) {
            PrecisionGuard out(digits10);
            return Real(second);
        }
        work += 40;
    }
    throw PrecisionError("w_n_eval: verification passes disagree at requested precision");
}

}  // namespace vpt
