#ifndef VPT_ROOTS_HPP
#define VPT_ROOTS_HPP

#include <vector>

#include "vpt/sigma_poly.hpp"

namespace vpt {

/// A real root, certified by a sign-change interval [lower, upper] of the
/// square-free part, refined so that upper - lower <= 10^-digits.
struct IsolatedRoot {
    Real value;
    int multiplicity = 1;
    Rational lower;  // certified bracket (lower == upper for exact hits)
    Rational upper;
};

/// Sturm sequence of a square-free integer polynomial.
class SturmChain {
  public:
    explicit SturmChain(IntPolynomial squarefree);

    const IntPolynomial& head() const { return seq_.front(); }
    const IntPolynomial& last() const { return seq_.back(); }

    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;

    /// Number of distinct real roots in (lo, hi].
    int count_in(const Rational& lo, const Rational& hi) const;

  private:
    std::vector<IntPolynomial> seq_;
};

/// gcd of integer polynomials (primitive, positive leading coefficient).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient; throws if the division leaves a remainder.
SigmaPolynomial poly_divide_exact(const SigmaPolynomial& num, const SigmaPolynomial& den);

/// Square-free decomposition p ~ prod f_i^i (Yun). Returned list is indexed
/// by multiplicity: result[i-1] has multiplicity i (possibly constant 1).
std::vector<SigmaPolynomial> squarefree_decompose(const SigmaPolynomial& p);

/// All real roots with multiplicities, sorted ascending. Brackets come from
/// Sturm-certified isolation; refinement is exact-integer false position
/// with an interleaved bisection safeguard, so every step stays certified.
std::vector<IsolatedRoot> real_roots(const SigmaPolynomial& p, unsigned digits10);

/// Positive roots only (same contract).
std::vector<IsolatedRoot> positive_roots(const SigmaPolynomial& p, unsigned digits10);

/// Narrows an already certified root of `p` to more digits. `p` must be the
/// polynomial (or its square-free factor) whose sign changes across the
/// bracket.
IsolatedRoot refine_root(const SigmaPolynomial& p, const IsolatedRoot& root, unsigned digits10);

}  // namespace vpt

#endif
