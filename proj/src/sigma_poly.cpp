#include "vpt/sigma_poly.hpp"

namespace vpt {

SigmaPolynomial::SigmaPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& SigmaPolynomial::coeff(int i) const {
    static const Rational zero = 0;
    if (i < 0 || i >= (int)coeffs_.size()) return zero;
    return coeffs_[i];
}

const Rational& SigmaPolynomial::leading() const {
    if (coeffs_.empty()) throw UsageError("SigmaPolynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational SigmaPolynomial::eval(const Rational& x) const {
    Rational acc;
    for (int i = (int)coeffs_.size() - 1; i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

Real SigmaPolynomial::eval(const Real& x) const {
    Real acc = 0;
    for (int i = (int)coeffs_.size() - 1; i >= 0; --i) acc = acc * x + Real(coeffs_[i]);
    return acc;
}

SigmaPolynomial SigmaPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return SigmaPolynomial{};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * (long)i;
    return SigmaPolynomial(std::move(d));
}

void IntPolynomial::strip() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void IntPolynomial::make_primitive() {
    strip();
    if (coeffs.empty()) return;
    Integer g = 0;
    for (const auto& c : coeffs) {
        g = gcd(g, c);
        if (g == 1) return;
    }
    for (auto& c : coeffs) c /= g;
}

IntPolynomial IntPolynomial::derivative() const {
    IntPolynomial d;
    if (coeffs.size() <= 1) return d;
    d.coeffs.resize(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs[i - 1] = coeffs[i] * (long)i;
    return d;
}

Integer IntPolynomial::scaled_value_at_dyadic(const Integer& a, long scale_bits) const {
    if (coeffs.empty()) return 0;
    Integer acc = coeffs.back();
    long shift = 0;
    for (int i = (int)coeffs.size() - 2; i >= 0; --i) {
        shift += scale_bits;
        acc = acc * a + (coeffs[i] << shift);
    }
    return acc;
}

int IntPolynomial::sign_at_dyadic(const Integer& a, long scale_bits) const {
    return sign_of(scaled_value_at_dyadic(a, scale_bits));
}

int IntPolynomial::sign_at(const Rational& x) const {
    if (coeffs.empty()) return 0;
    Integer num = numerator(x), den = denominator(x);
    if (mpz_popcount(den.backend().data()) == 1)  // dyadic point: shifts beat multiplies
        return sign_at_dyadic(num, (long)mpz_sizeinbase(den.backend().data(), 2) - 1);
    Integer acc = coeffs.back();
    Integer denpow = 1;
    for (int i = (int)coeffs.size() - 2; i >= 0; --i) {
        denpow *= den;
        acc = acc * num + coeffs[i] * denpow;
    }
    return sign_of(acc);
}

Real IntPolynomial::eval(const Real& x) const {
    Real acc = 0;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) acc = acc * x + Real(coeffs[i]);
    return acc;
}

IntPolynomial to_integer_poly(const SigmaPolynomial& p) {
    IntPolynomial z;
    if (p.is_zero()) return z;
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = denominator(c);
        l = l / gcd(l, d) * d;
    }
    z.coeffs.resize(p.coeffs().size());
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        z.coeffs[i] = numerator(p.coeffs()[i]) * (l / denominator(p.coeffs()[i]));
    z.strip();
    return z;
}

}  // namespace vpt
