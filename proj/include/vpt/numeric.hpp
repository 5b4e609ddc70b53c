#ifndef VPT_NUMERIC_HPP
#define VPT_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace vpt {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;  // variable precision

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument / contract violation by the caller.
struct UsageError : Error {
    using Error::Error;
};

/// A result failed its verification pass at increased precision.
struct PrecisionError : Error {
    using Error::Error;
};

/// An iterative computation did not reach the requested tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Coefficient cache file is unreadable, corrupt, or has a wrong version.
struct CacheError : Error {
    using Error::Error;
};

/// Sets the mpfr working precision (decimal digits) for the current scope.
///
/// boost's default precision is process-global here, so scopes must not be
/// interleaved across threads with different precisions; parallel sweeps fix
/// one working precision before fan-out.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline Real pi_value() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

/// x^e for integer e (mpq_rational has no pow overload in this boost version).
inline Rational rational_pow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw UsageError("rational_pow: zero base with negative exponent");
        return 1 / rational_pow(x, -e);
    }
    Rational r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer integer_pow(const Integer& x, long e) {
    Integer r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Nearest rational with denominator 10^digits. Used to feed measured reals
/// into exact-rational evaluation paths.
inline Rational rationalize(const Real& x, unsigned digits10) {
    Integer den = integer_pow(10, digits10);
    Real scaled = x * Real(den);
    mpfr_t rounded;
    mpfr_init2(rounded, mpfr_get_prec(scaled.backend().data()));
    mpfr_round(rounded, scaled.backend().data());
    Integer num;
    mpfr_get_z(num.backend().data(), rounded, MPFR_RNDN);
    mpfr_clear(rounded);
    return Rational(num, den);
}

inline int sign_of(const Integer& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(const Rational& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

}  // namespace vpt

#endif
