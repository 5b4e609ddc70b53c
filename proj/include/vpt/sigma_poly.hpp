#ifndef VPT_SIGMA_POLY_HPP
#define VPT_SIGMA_POLY_HPP

#include <vector>

#include "vpt/numeric.hpp"

namespace vpt {

/// Polynomial in the variational variable sigma with exact rational
/// coefficients, constant term first. Normalized: no trailing zero
/// coefficients (the zero polynomial has an empty coefficient list).
class SigmaPolynomial {
  public:
    SigmaPolynomial() = default;
    explicit SigmaPolynomial(std::vector<Rational> coeffs);

    /// Degree; -1 for the zero polynomial.
    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const;
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    Real eval(const Real& x) const;

    SigmaPolynomial derivative() const;

    bool operator==(const SigmaPolynomial& o) const = default;

  private:
    std::vector<Rational> coeffs_;
};

/// Integer polynomial (content-free after make_primitive), constant term
/// first. Workhorse for Sturm sequences and certified sign evaluation.
struct IntPolynomial {
    std::vector<Integer> coeffs;

    int degree() const { return (int)coeffs.size() - 1; }
    bool is_zero() const { return coeffs.empty(); }
    void strip();
    void make_primitive();
    IntPolynomial derivative() const;
    /// p(a / 2^s) * 2^(s * degree), exact.
    Integer scaled_value_at_dyadic(const Integer& a, long scale_bits) const;
    /// Exact sign of p(a / 2^s).
    int sign_at_dyadic(const Integer& a, long scale_bits) const;
    /// Exact sign of p(x) for any rational x.
    int sign_at(const Rational& x) const;
    Real eval(const Real& x) const;
};

/// Clears denominators; the result spans the same roots.
IntPolynomial to_integer_poly(const SigmaPolynomial& p);

}  // namespace vpt

#endif
