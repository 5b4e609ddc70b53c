#include "vpt/roots.hpp"

#include <algorithm>

namespace vpt {

namespace {

/// Remainder of r by g scaled by an unknown positive constant; the sign of
/// the true remainder is recovered through the parity of the leading-
/// coefficient multiplications.
IntPolynomial pseudo_rem(IntPolynomial r, const IntPolynomial& g, int& sign_factor) {
    const int dg = g.degree();
    const Integer& lg = g.coeffs.back();
    long times = 0;
    r.strip();
    while (!r.is_zero() && r.degree() >= dg) {
        int dr = r.degree();
        Integer top = r.coeffs.back();
        r.coeffs.pop_back();
        for (auto& c : r.coeffs) c *= lg;
        for (int j = 0; j < dg; ++j) r.coeffs[dr - dg + j] -= top * g.coeffs[j];
        ++times;
        r.strip();
    }
    sign_factor = (lg < 0 && (times & 1)) ? -1 : 1;
    return r;
}

int sign_at_inf(const IntPolynomial& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sign_of(p.coeffs.back());
    if (!positive && (p.degree() & 1)) s = -s;
    return s;
}

/// Dyadic interval (lo/2^s, hi/2^s].
struct DyadicInterval {
    Integer lo, hi;
    long scale = 0;
};

Rational to_rational(const Integer& a, long scale) { return Rational(a, Integer(1) << scale); }

}  // namespace

SturmChain::SturmChain(IntPolynomial p) {
    p.make_primitive();
    if (p.is_zero()) throw UsageError("SturmChain: zero polynomial");
    seq_.push_back(p);
    IntPolynomial d = p.derivative();
    d.make_primitive();
    if (!d.is_zero()) {
        seq_.push_back(std::move(d));
        while (seq_.back().degree() > 0) {
            int sf = 1;
            IntPolynomial r = pseudo_rem(seq_[seq_.size() - 2], seq_.back(), sf);
            if (r.is_zero()) break;
            r.make_primitive();
            if (sf > 0)
                for (auto& c : r.coeffs) c = -c;
            seq_.push_back(std::move(r));
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::variations_at_pos_inf() const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sign_at_inf(p, true);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::variations_at_neg_inf() const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sign_at_inf(p, false);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::count_in(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = a, g = b;
    f.make_primitive();
    g.make_primitive();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        int sf;
        IntPolynomial r = pseudo_rem(f, g, sf);
        r.make_primitive();
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.is_zero() && f.coeffs.back() < 0)
        for (auto& c : f.coeffs) c = -c;
    return f;
}

SigmaPolynomial poly_divide_exact(const SigmaPolynomial& num, const SigmaPolynomial& den) {
    if (den.is_zero()) throw UsageError("poly_divide_exact: division by zero polynomial");
    std::vector<Rational> r = num.coeffs();
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) throw UsageError("poly_divide_exact: numerator degree below denominator");
    std::vector<Rational> q(dn - dd + 1);
    for (int i = dn; i >= dd; --i) {
        Rational f = r[i] / den.leading();
        q[i - dd] = f;
        if (f != 0)
            for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * den.coeff(j);
    }
    for (int i = 0; i < dd; ++i)
        if (r[i] != 0) throw UsageError("poly_divide_exact: nonzero remainder");
    return SigmaPolynomial(std::move(q));
}

std::vector<SigmaPolynomial> squarefree_decompose(const SigmaPolynomial& p) {
    if (p.is_zero()) throw UsageError("squarefree_decompose: zero polynomial");
    std::vector<SigmaPolynomial> factors;
    if (p.degree() == 0) return factors;
    IntPolynomial zp = to_integer_poly(p);
    IntPolynomial g0 = poly_gcd(zp, zp.derivative());
    if (g0.degree() == 0) {
        factors.push_back(p);
        return factors;
    }
    auto as_sigma = [](const IntPolynomial& z) {
        std::vector<Rational> c(z.coeffs.size());
        for (size_t i = 0; i < z.coeffs.size(); ++i) c[i] = Rational(z.coeffs[i]);
        return SigmaPolynomial(std::move(c));
    };
    // Yun: w = p/g, y = p'/g; iterate f_i = gcd(w, y - w')
    SigmaPolynomial w = poly_divide_exact(p, as_sigma(g0));
    SigmaPolynomial y = poly_divide_exact(p.derivative(), as_sigma(g0));
    while (w.degree() > 0) {
        // z = y - w'
        std::vector<Rational> zc(std::max(y.coeffs().size(), w.derivative().coeffs().size()));
        SigmaPolynomial wd = w.derivative();
        for (size_t i = 0; i < zc.size(); ++i) zc[i] = y.coeff((int)i) - wd.coeff((int)i);
        SigmaPolynomial z(std::move(zc));
        IntPolynomial fz = z.is_zero() ? IntPolynomial{} : poly_gcd(to_integer_poly(w), to_integer_poly(z));
        SigmaPolynomial f = z.is_zero() ? w : as_sigma(fz);
        factors.push_back(f);
        if (z.is_zero()) break;
        w = poly_divide_exact(w, f);
        y = poly_divide_exact(z, f);
    }
    return factors;
}

namespace {

/// Root magnitude bound as a power of two (Fujiwara-style: much tighter
/// than Cauchy when low-order coefficients dominate, as they do here).
long root_bound_bits(const IntPolynomial& p) {
    const int n = p.degree();
    long lead_bits = (long)mpz_sizeinbase(p.coeffs.back().backend().data(), 2);
    long bound = 1;
    for (int i = 1; i <= n; ++i) {
        if (p.coeffs[n - i] == 0) continue;
        long bits = (long)mpz_sizeinbase(p.coeffs[n - i].backend().data(), 2);
        // |a_{n-i}/a_n|^(1/i) <= 2^ceil((bits - lead_bits + 1) / i)
        long est = (bits - lead_bits + 1 + i - 1) / i + 1;
        bound = std::max(bound, est);
    }
    return bound + 1;
}

struct Bracket {
    DyadicInterval iv;      // sign change certified across (lo, hi]
    bool exact = false;     // root exactly at hi/2^scale (or at lo == hi)
};

/// Isolates all real roots of the (square-free) chain head into disjoint
/// dyadic intervals with exactly one root each. Endpoint zeros are handled
/// by the (a, b] counting convention of the chain.
std::vector<Bracket> isolate(const SturmChain& chain) {
    const IntPolynomial& p = chain.head();
    std::vector<Bracket> out;
    if (p.degree() <= 0) return out;
    long bbits = root_bound_bits(p);
    DyadicInterval all{-(Integer(1) << (bbits + 1)), Integer(1) << (bbits + 1), 1};
    std::vector<DyadicInterval> work{all};
    while (!work.empty()) {
        DyadicInterval iv = work.back();
        work.pop_back();
        int n = chain.count_in(to_rational(iv.lo, iv.scale), to_rational(iv.hi, iv.scale));
        if (n == 0) continue;
        if (n == 1) {
            bool exact = p.sign_at_dyadic(iv.hi, iv.scale) == 0;
            if (exact) iv.lo = iv.hi;
            out.push_back({iv, exact});
            continue;
        }
        Integer mid = iv.lo + iv.hi;  // value at scale + 1
        work.push_back({iv.lo * 2, mid, iv.scale + 1});
        work.push_back({mid, iv.hi * 2, iv.scale + 1});
    }
    std::sort(out.begin(), out.end(), [](const Bracket& a, const Bracket& b) {
        return Rational(a.iv.hi, Integer(1) << a.iv.scale) < Rational(b.iv.hi, Integer(1) << b.iv.scale);
    });
    return out;
}

/// Shrinks a certified bracket until its width is below 2^-target_bits.
/// False-position steps on exact scaled values (Illinois weighting against
/// endpoint stalling), with an interleaved bisection whenever two
/// consecutive steps fail to halve the width. Fully exact: every iterate is
/// certified by an integer sign evaluation.
Bracket refine(const IntPolynomial& p, Bracket b, long target_bits) {
    if (b.iv.lo == b.iv.hi) return b;

    Integer v_hi = p.scaled_value_at_dyadic(b.iv.hi, b.iv.scale);
    if (v_hi == 0) {  // the single root of (lo, hi] is hi itself
        b.iv.lo = b.iv.hi;
        b.exact = true;
        return b;
    }
    Integer v_lo = p.scaled_value_at_dyadic(b.iv.lo, b.iv.scale);
    while (v_lo == 0) {
        // lo sits exactly on a neighboring root; step just inside
        b.iv.lo = (b.iv.lo << 8) + 1;
        b.iv.hi <<= 8;
        b.iv.scale += 8;
        v_lo = p.scaled_value_at_dyadic(b.iv.lo, b.iv.scale);
        v_hi <<= 8 * p.degree();
    }

    int stuck_lo = 0, stuck_hi = 0;
    while (true) {
        Integer width = b.iv.hi - b.iv.lo;
        if (width == 0) return b;
        long wbits = (long)mpz_sizeinbase(width.backend().data(), 2);
        if (b.iv.scale - wbits >= target_bits) return b;

        // upscale so the next step has room to multiply digits
        long s2 = std::min(2 * std::max(b.iv.scale - wbits, (long)8) + 8, target_bits + 8);
        if (s2 > b.iv.scale) {
            long shift = s2 - b.iv.scale;
            b.iv.lo <<= shift;
            b.iv.hi <<= shift;
            long vshift = shift * p.degree();
            v_lo <<= vshift;
            v_hi <<= vshift;
            b.iv.scale = s2;
            width = b.iv.hi - b.iv.lo;
        }

        Integer cand;
        bool bisect = (stuck_lo >= 2 || stuck_hi >= 2);
        if (!bisect) {
            // false position with Illinois halving of the stuck endpoint
            Integer wl = v_lo >> stuck_lo, wh = v_hi >> stuck_hi;
            Integer den = wl - wh;
            if (den == 0)
                cand = b.iv.lo + (width >> 1);
            else
                cand = b.iv.lo + width * wl / den;
            if (cand <= b.iv.lo) cand = b.iv.lo + 1;
            if (cand >= b.iv.hi) cand = b.iv.hi - 1;
        } else {
            cand = b.iv.lo + (width >> 1);
            if (cand == b.iv.lo) cand += 1;
        }
        if (cand <= b.iv.lo || cand >= b.iv.hi) {
            // width 1 at this scale; loop to upscale
            b.iv.lo <<= 1;
            b.iv.hi <<= 1;
            v_lo <<= p.degree();
            v_hi <<= p.degree();
            b.iv.scale += 1;
            continue;
        }
        Integer v_c = p.scaled_value_at_dyadic(cand, b.iv.scale);
        if (v_c == 0) {
            b.iv.lo = b.iv.hi = cand;
            b.exact = true;
            return b;
        }
        if (sign_of(v_c) == sign_of(v_lo)) {
            b.iv.lo = cand;
            v_lo = v_c;
            stuck_lo = 0;
            stuck_hi = bisect ? 0 : stuck_hi + 1;
        } else {
            b.iv.hi = cand;
            v_hi = v_c;
            stuck_hi = 0;
            stuck_lo = bisect ? 0 : stuck_lo + 1;
        }
    }
}

}  // namespace

namespace {

IsolatedRoot finish(const IntPolynomial& poly, const Bracket& bracket, int multiplicity,
                    long target_bits, unsigned digits10) {
    Bracket r = refine(poly, bracket, target_bits);
    PrecisionGuard guard(digits10 + 10);
    IsolatedRoot root;
    root.multiplicity = multiplicity;
    root.lower = to_rational(r.iv.lo, r.iv.scale);
    root.upper = to_rational(r.iv.hi, r.iv.scale);
    root.value = (Real(root.lower) + Real(root.upper)) / 2;
    return root;
}

}  // namespace

std::vector<IsolatedRoot> real_roots(const SigmaPolynomial& p, unsigned digits10) {
    if (p.is_zero()) throw UsageError("real_roots: zero polynomial");
    std::vector<IsolatedRoot> roots;
    if (p.degree() == 0) return roots;

    long target_bits = (long)(3.33 * (double)digits10) + 8;

    IntPolynomial zp = to_integer_poly(p);
    zp.make_primitive();
    SturmChain chain(zp);
    if (chain.last().degree() == 0) {
        // square-free (the PRS tail is constant); no extra gcd work needed
        for (auto& b : isolate(chain)) roots.push_back(finish(zp, b, 1, target_bits, digits10));
    } else {
        auto factors = squarefree_decompose(p);  // factors[i] has multiplicity i+1
        for (size_t i = 0; i < factors.size(); ++i) {
            IntPolynomial zf = to_integer_poly(factors[i]);
            if (zf.degree() <= 0) continue;
            zf.make_primitive();
            SturmChain fchain(zf);
            for (auto& b : isolate(fchain))
                roots.push_back(finish(zf, b, (int)i + 1, target_bits, digits10));
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.upper < b.upper; });
    return roots;
}

IsolatedRoot refine_root(const SigmaPolynomial& p, const IsolatedRoot& root, unsigned digits10) {
    if (p.is_zero()) throw UsageError("refine_root: zero polynomial");
    IntPolynomial zp = to_integer_poly(p);
    zp.make_primitive();
    // rebuild a dyadic bracket from the rational one (denominators of
    // certified brackets are powers of two by construction)
    Integer dl = denominator(root.lower), dh = denominator(root.upper);
    if (mpz_popcount(dl.backend().data()) != 1 || mpz_popcount(dh.backend().data()) != 1)
        throw UsageError("refine_root: bracket endpoints are not dyadic");
    long sl = (long)mpz_sizeinbase(dl.backend().data(), 2) - 1;
    long sh = (long)mpz_sizeinbase(dh.backend().data(), 2) - 1;
    long s = std::max(sl, sh);
    Bracket b;
    b.iv.lo = numerator(root.lower) << (s - sl);
    b.iv.hi = numerator(root.upper) << (s - sh);
    b.iv.scale = s;
    b.exact = b.iv.lo == b.iv.hi;
    long target_bits = (long)(3.33 * (double)digits10) + 8;
    IsolatedRoot out = finish(zp, b, root.multiplicity, target_bits, digits10);
    return out;
}

std::vector<IsolatedRoot> positive_roots(const SigmaPolynomial& p, unsigned digits10) {
    auto all = real_roots(p, digits10);
    std::vector<IsolatedRoot> pos;
    for (auto& r : all)
        if (r.value > 0 && r.upper > 0) pos.push_back(std::move(r));
    return pos;
}

}  // namespace vpt
