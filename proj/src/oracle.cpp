#include "vpt/oracle.hpp"

namespace vpt {

BasisConfig BasisConfig::adapted(const CouplingSpec& spec, int size, unsigned digits10) {
    PrecisionGuard guard(digits10);
    BasisConfig cfg;
    cfg.size = size;
    Real w = Real(spec.omega);
    cfg.basis_frequency = pow(w * w * w + 3 * Real(spec.g), Real(1) / 3);
    return cfg;
}

BandedMatrix hamiltonian_elements(const CouplingSpec& spec, const BasisConfig& cfg,
                                  unsigned digits10) {
    if (cfg.size < 4) throw UsageError("hamiltonian_elements: basis size must be >= 4");
    if (!(cfg.basis_frequency > 0))
        throw UsageError("hamiltonian_elements: basis frequency must be positive");
    PrecisionGuard guard(digits10);
    const int M = cfg.size;
    Real wb = cfg.basis_frequency;
    Real w2 = Real(spec.omega) * Real(spec.omega);
    Real split = (w2 - wb * wb) / 2;     // coefficient of x^2 beyond the wb oscillator
    Real quart = Real(spec.g) / 4;       // coefficient of x^4
    Real x2scale = 1 / (2 * wb);         // <x^2> = (a+a')^2 / (2 wb)
    Real x4scale = 1 / (4 * wb * wb);    // <x^4> = (a+a')^4 / (4 wb^2)

    BandedMatrix h;
    h.diag.resize(M);
    h.off1.resize(M > 1 ? M - 1 : 0);
    h.off2.resize(M > 2 ? M - 2 : 0);
    for (int i = 0; i < M; ++i) {
        Real n = 2 * i;  // even state index
        h.diag[i] = wb * (n + Real(1) / 2) + split * x2scale * (2 * n + 1) +
                    quart * x4scale * 3 * (2 * n * n + 2 * n + 1);
        if (i + 1 < M) {
            Real root = sqrt((n + 1) * (n + 2));
            h.off1[i] = split * x2scale * root + quart * x4scale * (4 * n + 6) * root;
        }
        if (i + 2 < M) {
            Real root4 = sqrt((n + 1) * (n + 2) * (n + 3) * (n + 4));
            h.off2[i] = quart * x4scale * root4;
        }
    }
    return h;
}

int BandedMatrix::count_below(const Real& shift) const {
    const int M = size();
    // LDL^T with semibandwidth 2; count negative pivots
    std::vector<Real> d(M), l1(M), l2(M);
    int negatives = 0;
    Real tiny = pow(Real(10), -(long)(Real::default_precision())) * (abs(shift) + 1);
    for (int i = 0; i < M; ++i) {
        if (i >= 2) l2[i] = off2[i - 2] / d[i - 2];
        if (i >= 1) {
            Real corr = i >= 2 ? l2[i] * l1[i - 1] * d[i - 2] : Real(0);
            l1[i] = (off1[i - 1] - corr) / d[i - 1];
        }
        Real pivot = diag[i] - shift;
        if (i >= 1) pivot -= l1[i] * l1[i] * d[i - 1];
        if (i >= 2) pivot -= l2[i] * l2[i] * d[i - 2];
        if (pivot == 0) pivot = tiny;  // measure-zero; bias to the positive side
        d[i] = pivot;
        if (pivot < 0) ++negatives;
    }
    return negatives;
}

namespace {

Real smallest_eigenvalue(const BandedMatrix& h, unsigned digits10) {
    PrecisionGuard guard(2 * digits10);
    const int M = h.size();
    // Gershgorin bounds
    Real lo = h.diag[0], hi = h.diag[0];
    for (int i = 0; i < M; ++i) {
        Real radius = 0;
        if (i >= 1) radius += abs(h.off1[i - 1]);
        if (i >= 2) radius += abs(h.off2[i - 2]);
        if (i + 1 < M) radius += abs(h.off1[i]);
        if (i + 2 < M) radius += abs(h.off2[i]);
        Real a = h.diag[i] - radius, b = h.diag[i] + radius;
        if (a < lo) lo = a;
        if (b > hi) hi = b;
    }
    Real tol = pow(Real(10), -(long)(digits10 + 4)) * (abs(hi) + 1);
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        if (h.count_below(mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

EigenResult ground_energy(const CouplingSpec& spec, const BasisConfig& cfg, unsigned digits10,
                          std::optional<Real> required_gap) {
    if (cfg.size < 4) throw UsageError("ground_energy: basis size must be >= 4");
    PrecisionGuard guard(2 * digits10);
    BandedMatrix full = hamiltonian_elements(spec, cfg, 2 * digits10);
    BasisConfig half = cfg;
    half.size = std::max(4, cfg.size / 2);
    BandedMatrix halfm = hamiltonian_elements(spec, half, 2 * digits10);

    EigenResult result;
    result.basis_size = cfg.size;
    result.energy = smallest_eigenvalue(full, digits10);
    Real half_energy = smallest_eigenvalue(halfm, digits10);
    result.convergence_gap = abs(result.energy - half_energy);
    if (required_gap && result.convergence_gap > *required_gap)
        throw ConvergenceError("ground_energy: basis not converged (gap " +
                               result.convergence_gap.str(3) + " above requested " +
                               required_gap->str(3) + ")");
    return result;
}

}  // namespace vpt
