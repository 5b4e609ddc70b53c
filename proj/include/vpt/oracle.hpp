#ifndef VPT_ORACLE_HPP
#define VPT_ORACLE_HPP

#include <optional>

#include "vpt/reexpand.hpp"

namespace vpt {

/// Truncated even-parity harmonic basis: M states n = 0, 2, ..., 2(M-1)
/// built on the trial frequency omega_b.
struct BasisConfig {
    int size = 0;
    Real basis_frequency;

    /// Strong-coupling-adapted default omega_b = (omega^3 + 3g)^(1/3);
    /// a plain omega basis converges poorly at large g.
    static BasisConfig adapted(const CouplingSpec& spec, int size, unsigned digits10);
};

/// Symmetric pentadiagonal matrix in the even-state index.
struct BandedMatrix {
    std::vector<Real> diag;   // H[i][i]
    std::vector<Real> off1;   // H[i][i+1]
    std::vector<Real> off2;   // H[i][i+2]

    int size() const { return (int)diag.size(); }
    /// Eigenvalues of the leading principal minors below `shift`
    /// (Sylvester inertia of the LDL^T factorization).
    int count_below(const Real& shift) const;
};

struct EigenResult {
    Real energy;
    int basis_size = 0;
    Real convergence_gap;  // |E(M) - E(M/2)|, never hidden
};

/// H = p^2/2 + omega^2 x^2/2 + (g/4) x^4 in the omega_b ladder basis,
/// even-parity block only.
BandedMatrix hamiltonian_elements(const CouplingSpec& spec, const BasisConfig& cfg,
                                  unsigned digits10);

/// Smallest even-parity eigenvalue by bisection on the inertia count,
/// solved at twice the output precision. Throws ConvergenceError if
/// required_gap is given and |E(M) - E(M/2)| exceeds it.
EigenResult ground_energy(const CouplingSpec& spec, const BasisConfig& cfg,
                          unsigned digits10 = 16,
                          std::optional<Real> required_gap = std::nullopt);

}  // namespace vpt

#endif
