#include "vpt/strong_coupling.hpp"

#include <cmath>

namespace vpt {

namespace reference {
Real alpha0_value(unsigned digits10) {
    PrecisionGuard guard(digits10);
    return Real(alpha0);
}
}  // namespace reference

Real alpha(const WeakSeries& weak, int order, int index, const Real& sigma, unsigned digits10) {
    if (index < 0 || index > order)
        throw UsageError("alpha: coefficient index must satisfy 0 <= n <= N");
    if (!(sigma > 0)) throw UsageError("alpha: requires sigma > 0");
    if (weak.max_order < order) throw UsageError("alpha: weak series shorter than order");

    const unsigned work = digits10 + 20;
    PrecisionGuard guard(work + 10);
    Rational y = rationalize(1 / Real(sigma), work) / 4;  // ghat/4 > 0

    const int n = index, N = order;
    // coefficient of y^j: E_j * T_{j,n}
    Rational sum;
    for (int j = N - n; j >= 0; --j) {
        Rational t;                             // T_{j,n}
        Rational hb = half_binomial(j, n);      // ((1-3j)/2 choose d) at d = n
        Rational dn = 1;                        // (d choose n) at d = n
        int sign = 1;                           // (-1)^{d+n} at d = n
        for (int d = n; d <= N - j; ++d) {
            if (d > n) {
                hb *= Rational(1 - 3 * j - 2 * (d - 1), 2 * d);
                dn *= Rational(d, d - n);
                sign = -sign;
            }
            t += sign * hb * dn;
        }
        sum = sum * y + weak.coeffs[j] * t;
    }
    Real power = pow(Real(y), Real(2 * n - 1) / 3);
    PrecisionGuard out(digits10);
    return Real(power * Real(sum));
}

StrongCouplingSeries strong_series(const WeakSeries& weak, int order, int n_max,
                                   unsigned digits10) {
    if (n_max < 0 || n_max > order)
        throw UsageError("strong_series: need 0 <= n_max <= N");
    SigmaOptimum opt = select_sigma(weak, order, digits10 + 10);
    StrongCouplingSeries s;
    s.order = order;
    s.sigma = opt.sigma;
    s.sigma_kind = opt.kind;
    s.digits10 = digits10;
    s.alphas.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) s.alphas.push_back(alpha(weak, order, n, opt.sigma, digits10));
    return s;
}

Real strong_eval(const StrongCouplingSeries& series, const CouplingSpec& spec, int terms) {
    if (terms < 1) throw UsageError("strong_eval: need at least one term");
    if (terms > (int)series.alphas.size())
        throw UsageError("strong_eval: only " + std::to_string(series.alphas.size()) +
                         " coefficients available");
    PrecisionGuard guard(series.digits10 + 10);
    Real g = Real(spec.g), w = Real(spec.omega);
    Real x = 0;
    if (w > 0) x = pow(4 * w * w * w / g, Real(2) / 3);
    Real acc = 0;
    for (int i = terms - 1; i >= 0; --i) acc = acc * x + series.alphas[i];
    return pow(g / 4, Real(1) / 3) * acc;
}

ConvergenceRecord delta_series(const WeakSeries& weak, int max_order, unsigned digits10) {
    if (max_order < 1) throw UsageError("delta_series: requires N_max >= 1");
    if (digits10 < 33) digits10 = 33;  // resolve against the 23-digit reference
    if (weak.max_order < max_order + 1)
        throw UsageError("delta_series: weak series must carry order N_max+1");
    ConvergenceRecord record;
    record.digits10 = digits10;
    record.entries.reserve(max_order);
    Real ref = reference::alpha0_value(digits10 + 10);
    Real floor_level = pow(Real(10), -(long)digits10 + 1);
    for (int N = 1; N <= max_order; ++N) {
        SigmaOptimum opt = select_sigma(weak, N, digits10 + 10);
        Real a0 = alpha(weak, N, 0, opt.sigma, digits10 + 10);
        ConvergenceRecord::Entry e;
        e.order = N;
        e.delta = abs(a0 - ref);
        e.cusp_flag = e.delta < floor_level;
        record.entries.push_back(std::move(e));
    }
    return record;
}

Real estimate_gs(const StrongCouplingSeries& series, std::optional<int> n_lo_opt,
                 std::optional<int> n_hi_opt) {
    const int n_max = series.n_max();
    if (n_max < 12)
        throw UsageError("estimate_gs: need at least 12 strong-coupling coefficients");
    int n_hi = n_hi_opt.value_or(n_max);
    int n_lo = n_lo_opt.value_or(n_hi / 2);
    if (n_lo < 1 || n_hi > n_max || n_hi - n_lo < 4)
        throw UsageError("estimate_gs: bad coefficient range");

    PrecisionGuard guard(series.digits10);
    // log|alpha_n| must decay; fit a line, slope -> ratio
    std::vector<double> xs, ys;
    for (int n = n_lo; n <= n_hi; ++n) {
        Real a = abs(series.alphas[n]);
        if (a == 0) continue;
        xs.push_back((double)n);
        ys.push_back((double)log(a));
    }
    if (xs.size() < 5) throw ConvergenceError("estimate_gs: too few usable coefficients");
    for (size_t i = 1; i < ys.size(); ++i)
        if (ys[i] >= ys[i - 1])
            throw ConvergenceError(
                "estimate_gs: |alpha_n| not decaying (unconverged coefficients?)");
    double n_ = (double)xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double slope = (n_ * sxy - sx * sy) / (n_ * sxx - sx * sx);
    double ratio = std::exp(slope);
    Real r(ratio);
    return 4 * pow(r, Real(3) / 2);
}

}  // namespace vpt
