#include "vpt/weak_series.hpp"

namespace vpt {

const Rational& BenderWuTable::at(int k, int m) const {
    if (k < 0 || k >= (int)rows.size()) throw UsageError("BenderWuTable: k out of range");
    static const Rational zero = 0;
    if (m < 0 || m > 2 * k) return zero;
    return rows[k][m];
}

WeakSeries BenderWuTable::weak_series() const {
    WeakSeries w;
    w.max_order = (int)rows.size() - 1;
    w.coeffs.resize(rows.size());
    w.coeffs[0] = Rational(1, 2);
    for (int k = 1; k <= w.max_order; ++k) w.coeffs[k] = -rows[k][1];
    return w;
}

// Ground state written as exp(-x^2/2) sum_k (g/4)^k B_k(x), B_k(x) = sum_m B_{k,m} x^{2m},
// B_0 = 1 and B_{k,0} = 0 for k >= 1. One downward sweep in m per order:
//   2m B_{k,m} = (m+1)(2m+1) B_{k,m+1} - B_{k-1,m-2} + sum_{j=1}^{k-1} E_j B_{k-j,m}
// and E_k = -B_{k,1}. The E_j convolution needs every earlier row, so the whole
// triangular table stays live during the sweep.
static BenderWuTable run_recursion(int max_order) {
    if (max_order < 0) throw UsageError("bender_wu: negative order");
    BenderWuTable t;
    t.rows.reserve(max_order + 1);
    t.rows.push_back({Rational(1)});
    std::vector<Rational> energies(max_order + 1);
    energies[0] = Rational(1, 2);
    for (int k = 1; k <= max_order; ++k) {
        std::vector<Rational> row(2 * k + 1);
        for (int m = 2 * k; m >= 1; --m) {
            Rational acc;
            if (m + 1 <= 2 * k) acc += Rational((m + 1) * (2 * m + 1)) * row[m + 1];
            if (m >= 2 && m - 2 <= 2 * (k - 1)) acc -= t.rows[k - 1][m - 2];
            for (int j = 1; j <= k - 1; ++j)
                if (m <= 2 * (k - j)) acc += energies[j] * t.rows[k - j][m];
            row[m] = acc / (2 * m);
        }
        energies[k] = -row[1];
        t.rows.push_back(std::move(row));
    }
    return t;
}

WeakSeries bender_wu(int max_order) { return run_recursion(max_order).weak_series(); }

BenderWuTable bender_wu_table(int max_order) { return run_recursion(max_order); }

Real large_order_asymptote(int k, unsigned digits10) {
    if (k < 1) throw UsageError("large_order_asymptote: requires k >= 1");
    PrecisionGuard guard(digits10 + 10);
    Real pi = pi_value();
    Integer fact;
    mpz_fac_ui(fact.backend().data(), (unsigned long)k);
    Real value = -(1 / pi) * sqrt(6 / pi) / sqrt(Real(k)) * Real(fact);
    // (-3)^k
    Real p = 1;
    for (int i = 0; i < k; ++i) p *= -3;
    return value * p;
}

Real semiclassical_disc(const Real& g, const Real& omega, unsigned digits10) {
    if (!(g < 0)) throw UsageError("semiclassical_disc: requires g < 0");
    if (!(omega > 0)) throw UsageError("semiclassical_disc: requires omega > 0");
    PrecisionGuard guard(digits10 + 10);
    Real pi = pi_value();
    Real w3 = omega * omega * omega;
    Real ratio = 4 * w3 / (3 * g);  // negative
    return -omega * sqrt(6 / pi) * sqrt(-ratio) * exp(ratio);
}

}  // namespace vpt
