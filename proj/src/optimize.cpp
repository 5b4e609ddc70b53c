#include "vpt/optimize.hpp"

#include <sstream>

namespace vpt {

CriticalPolynomial critical_polynomial(const ReexpandedSeries& series, int order) {
    if (order < 0) throw UsageError("critical_polynomial: negative order");
    if (series.order < order + 1)
        throw UsageError("critical_polynomial: series must carry eps_{N+1}");
    SigmaPolynomial d = series.at(order + 1).derivative();
    std::vector<Rational> c(d.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -2 * d.coeff((int)i);
    CriticalPolynomial p;
    p.order = order;
    p.poly = SigmaPolynomial(std::move(c));
    return p;
}

Real sigma_fit_value(int order, unsigned digits10) {
    PrecisionGuard guard(digits10);
    Real c("0.186047272"), b("6.85");
    Real n = order;
    return c * n * (1 + b / pow(n, Real(2) / 3));
}

SigmaOptimum select_sigma(const WeakSeries& weak, int order, unsigned digits10) {
    if (order < 1) throw UsageError("select_sigma: requires N >= 1");
    if (weak.max_order < order + 1)
        throw UsageError("select_sigma: weak series must carry order N+1");
    unsigned root_digits = digits10 + 10;
    PrecisionGuard guard(root_digits + 10);

    ReexpandedSeries series = epsilon_polys(weak, order + 1);
    CriticalPolynomial crit = critical_polynomial(series, order);
    SigmaPolynomial dcrit = crit.poly.derivative();

    Real fit = sigma_fit_value(order, root_digits);

    // coarse pass for branch selection; only the winner is refined deep
    constexpr unsigned kCoarse = 20;
    struct Candidate {
        IsolatedRoot root;
        SigmaKind kind;
    };
    std::vector<Candidate> candidates;
    for (auto& r : positive_roots(crit.poly, kCoarse))
        candidates.push_back({std::move(r), SigmaKind::extremum});
    if (!dcrit.is_zero() && dcrit.degree() >= 1)
        for (auto& r : positive_roots(dcrit, kCoarse))
            candidates.push_back({std::move(r), SigmaKind::turning_point});

    if (candidates.empty())
        throw ConvergenceError("select_sigma: degenerate order " + std::to_string(order) +
                               ": no positive stationary or turning point");

    const Candidate* best = nullptr;
    Real best_dist;
    for (const auto& c : candidates) {
        Real dist = abs(c.root.value - fit);
        bool better = best == nullptr || dist < best_dist;
        if (!better && best != nullptr && dist == best_dist) {
            // tie: extremum first, then smaller sigma
            if (best->kind == SigmaKind::turning_point && c.kind == SigmaKind::extremum)
                better = true;
            else if (best->kind == c.kind && c.root.value < best->root.value)
                better = true;
        }
        if (better) {
            best = &c;
            best_dist = dist;
        }
    }

    const SigmaPolynomial& host = best->kind == SigmaKind::extremum ? crit.poly : dcrit;
    IsolatedRoot refined = root_digits > kCoarse ? refine_root(host, best->root, root_digits)
                                                 : best->root;

    SigmaOptimum opt;
    opt.order = order;
    opt.sigma = refined.value;
    opt.kind = best->kind;
    opt.fit_reference = fit;
    return opt;
}

FrequencySolution omega_from_sigma(const Real& sigma, const CouplingSpec& spec,
                                   unsigned digits10) {
    if (sigma < 0) throw UsageError("omega_from_sigma: requires sigma >= 0");
    PrecisionGuard guard(digits10 + 20);
    Real omega = Real(spec.omega), g = Real(spec.g);
    FrequencySolution sol;
    if (sigma == 0) {  // zero split admitted as a limit
        sol.Omega = omega;
        sol.residual = 0;
        return sol;
    }
    Real rhs = g * sigma;
    auto f = [&](const Real& x) { return x * x * x - omega * omega * x - rhs; };
    // bracket [max(omega, cbrt(g sigma)/2), omega + cbrt(g sigma) + 1]
    Real cbrt_rhs = pow(rhs, Real(1) / 3);
    Real lo = omega > cbrt_rhs / 2 ? omega : cbrt_rhs / 2;
    Real hi = omega + cbrt_rhs + 1;
    // f(lo) <= 0 < f(hi): expand defensively in case of rounding at the edge
    while (f(lo) > 0) lo /= 2;
    while (f(hi) < 0) hi *= 2;
    Real tol = pow(Real(10), -(long)(digits10 + 10));
    // bisection start, Newton finish
    for (int i = 0; i < 64 && (hi - lo) > tol * hi; ++i) {
        Real mid = (lo + hi) / 2;
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    Real x = (lo + hi) / 2;
    for (int i = 0; i < 64; ++i) {
        Real fx = f(x);
        Real dfx = 3 * x * x - omega * omega;
        if (dfx == 0) break;
        Real step = fx / dfx;
        x -= step;
        if (abs(step) <= tol * abs(x)) break;
    }
    sol.Omega = x;
    sol.residual = abs(f(x));
    return sol;
}

std::string sigma_csv_row(const SigmaOptimum& opt, unsigned digits10) {
    std::ostringstream os;
    os << opt.order << ',' << opt.sigma.str(digits10) << ',' << to_string(opt.kind) << ','
       << opt.fit_reference.str(digits10);
    return os.str();
}

}  // namespace vpt
