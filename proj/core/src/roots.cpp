#include "cyclodyn/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <type_traits>

#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/embedding.hpp"

namespace cyclodyn {

namespace {

// Round-to-nearest complex number at a fixed precision, used only to
// produce approximations; certification happens in interval arithmetic.
struct MC {
    Real re, im;

    explicit MC(mpfr_prec_t p) : re(p), im(p) {}

    static MC from(const std::complex<long double>& z, mpfr_prec_t p) {
        MC r(p);
        mpfr_set_ld(r.re.get(), z.real(), MPFR_RNDN);
        mpfr_set_ld(r.im.get(), z.imag(), MPFR_RNDN);
        return r;
    }
    static MC from(const MC& z, mpfr_prec_t p) {
        MC r(p);
        mpfr_set(r.re.get(), z.re.get(), MPFR_RNDN);
        mpfr_set(r.im.get(), z.im.get(), MPFR_RNDN);
        return r;
    }
    mpfr_prec_t prec() const { return re.prec(); }

    friend MC operator+(const MC& a, const MC& b) {
        MC r(a.prec());
        mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        return r;
    }
    friend MC operator-(const MC& a, const MC& b) {
        MC r(a.prec());
        mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        return r;
    }
    friend MC operator*(const MC& a, const MC& b) {
        MC r(a.prec());
        Real t(a.prec());
        mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
        mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
        return r;
    }
    friend MC operator/(const MC& a, const MC& b) {
        MC r(a.prec());
        Real den(a.prec()), t(a.prec());
        mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
        mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
        mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
        MC conj_b(a.prec());
        mpfr_set(conj_b.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_neg(conj_b.im.get(), b.im.get(), MPFR_RNDN);
        r = a * conj_b;
        mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
        mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
        return r;
    }
    long double abs() const {
        return std::hypot(static_cast<long double>(mpfr_get_ld(re.get(), MPFR_RNDN)),
                          static_cast<long double>(mpfr_get_ld(im.get(), MPFR_RNDN)));
    }
    // log2 of the modulus, usable even when long double would underflow
    long exponent() const {
        long e = mpfr_zero_p(re.get()) ? LONG_MIN : mpfr_get_exp(re.get());
        if (!mpfr_zero_p(im.get())) e = std::max(e, static_cast<long>(mpfr_get_exp(im.get())));
        return e;
    }
    bool is_zero() const { return mpfr_zero_p(re.get()) && mpfr_zero_p(im.get()); }
};

using LC = std::complex<long double>;

long double mag(const LC& z) { return std::abs(z); }

// One simultaneous Aberth sweep; returns the largest relative correction.
template <class T, class Make>
long double aberth_sweep(const std::vector<T>& coeffs, std::vector<T>& z, Make make) {
    const std::size_t m = z.size();
    long double worst = 0;
    for (std::size_t i = 0; i < m; ++i) {
        T p = coeffs.back();
        T dp = make(0);
        for (std::size_t t = coeffs.size() - 1; t-- > 0;) {
            dp = dp * z[i] + p;
            p = p * z[i] + coeffs[t];
        }
        T s = make(0);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) s = s + make(1) / (z[i] - z[j]);
        T ratio = p / dp;
        T w = ratio / (make(1) - ratio * s);
        z[i] = z[i] - w;
        long double rel;
        if constexpr (std::is_same_v<T, LC>) {
            rel = mag(w) / std::max(mag(z[i]), static_cast<long double>(1e-300L));
        } else {
            rel = w.abs() / std::max(z[i].abs(), static_cast<long double>(1e-300L));
            if (w.is_zero()) rel = 0;
        }
        if (!(rel < 1e300L)) rel = 1e300L;  // NaN guard
        worst = std::max(worst, rel);
    }
    return worst;
}

std::vector<ComplexInterval> embed_coeffs(const CPoly& p, unsigned k, mpfr_prec_t wp) {
    std::vector<ComplexInterval> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(embed(c, k, wp));
    return out;
}

Real midpoint(const Interval& x) {
    Real m(x.prec() + 1);
    mpfr_add(m.get(), x.lo().get(), x.hi().get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

Interval point(const Real& r) {
    Interval x(r.prec());
    mpfr_set(x.lo().get(), r.get(), MPFR_RNDD);
    mpfr_set(x.hi().get(), r.get(), MPFR_RNDU);
    return x;
}

// Attempts certification at the given approximations; fills `out` on success.
bool certify(const std::vector<ComplexInterval>& coeffs, const std::vector<MC>& z, mpfr_prec_t wp,
             RootIsolation& out) {
    const std::size_t m = z.size();
    std::vector<ComplexInterval> centers;
    centers.reserve(m);
    for (const auto& zi : z) centers.emplace_back(point(zi.re), point(zi.im));

    Interval lead_abs = coeffs.back().abs();
    if (lead_abs.contains_zero()) return false;

    std::vector<Interval> radius;
    radius.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        ComplexInterval pv = coeffs.back();
        for (std::size_t t = coeffs.size() - 1; t-- > 0;) pv = pv * centers[i] + coeffs[t];
        Interval prod = lead_abs;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            prod = prod * (centers[i] - centers[j]).abs();
        }
        if (prod.contains_zero()) return false;
        Interval r = Interval::exact(static_cast<long>(m), wp) * pv.abs() / prod;
        radius.push_back(r);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Interval dist = (centers[i] - centers[j]).abs();
            if (!certainly_less(radius[i] + radius[j], dist)) return false;
        }

    out.boxes.clear();
    out.max_modulus_upper = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Rational re = z[i].re.to_rational(), im = z[i].im.to_rational();
        Rational r = radius[i].hi_q();
        out.boxes.push_back({re - r, re + r, im - r, im + r});
        Interval mod = centers[i].abs() + radius[i];
        Rational bound = mod.hi_q();
        if (bound > out.max_modulus_upper) out.max_modulus_upper = bound;
    }
    out.certified = true;
    out.precision_bits = static_cast<unsigned>(wp);
    return true;
}

MC mid(const ComplexInterval& z) {
    MC r(z.re.prec());
    mpfr_set(r.re.get(), midpoint(z.re).get(), MPFR_RNDN);
    mpfr_set(r.im.get(), midpoint(z.im).get(), MPFR_RNDN);
    return r;
}

unsigned common_conductor(const CPoly& p) {
    unsigned n = 1;
    for (const auto& c : p.coeffs()) n = lcm(n, c.conductor());
    return n;
}

}  // namespace

RootIsolation isolate_roots(const CPoly& p_in, unsigned k, unsigned max_bits) {
    RootIsolation out;
    const CPoly p = squarefree_part(p_in);
    if (p.degree() <= 0) {
        out.certified = true;
        return out;
    }
    const std::size_t m = static_cast<std::size_t>(p.degree());

    std::vector<LC> lc;
    for (const auto& c : embed_coeffs(p, k, 64)) {
        MC z = mid(c);
        lc.emplace_back(mpfr_get_ld(z.re.get(), MPFR_RNDN), mpfr_get_ld(z.im.get(), MPFR_RNDN));
    }
    long double cauchy = 0;
    for (std::size_t i = 0; i < m; ++i) cauchy = std::max(cauchy, mag(lc[i] / lc.back()));
    const long double R = 1 + cauchy;
    auto start = [&](std::size_t j) {
        const long double ang = 2 * 3.14159265358979323846L * static_cast<long double>(j) / m + 0.4L;
        return LC(R * std::cos(ang), R * std::sin(ang));
    };
    std::vector<LC> z0(m);
    for (std::size_t j = 0; j < m; ++j) z0[j] = start(j);
    auto make_ld = [](int v) { return LC(v, 0); };
    for (int it = 0; it < 500; ++it)
        if (aberth_sweep(lc, z0, make_ld) < 1e-18L) break;
    for (std::size_t j = 0; j < m; ++j)
        if (!std::isfinite(z0[j].real()) || !std::isfinite(z0[j].imag())) z0[j] = start(j) * 0.5L;

    mpfr_prec_t wp = 128;
    std::vector<MC> z;
    for (const auto& v : z0) z.push_back(MC::from(v, wp));
    while (wp <= static_cast<mpfr_prec_t>(max_bits)) {
        std::vector<ComplexInterval> enc = embed_coeffs(p, k, wp);
        std::vector<MC> mc;
        for (const auto& c : enc) mc.push_back(mid(c));
        auto make = [wp](int v) {
            MC r(wp);
            mpfr_set_si(r.re.get(), v, MPFR_RNDN);
            return r;
        };
        const long double tol = std::ldexp(1.0L, -static_cast<int>(wp) + 8);
        for (int it = 0; it < 200; ++it)
            if (aberth_sweep(mc, z, make) < tol) break;
        if (certify(enc, z, wp, out)) return out;
        wp *= 2;
        std::vector<MC> next;
        for (const auto& v : z) next.push_back(MC::from(v, wp));
        z = std::move(next);
    }
    out.certified = false;
    out.precision_bits = max_bits;
    return out;
}

QPoly norm_polynomial(const CPoly& p) {
    const unsigned N = common_conductor(p);
    if (N <= 2 || has_rational_coeffs(p)) return to_rational(p);
    CPoly acc = CPoly::constant(CycloNum(1L));
    for (unsigned k : units_mod(N)) {
        std::vector<CycloNum> c;
        for (const auto& x : p.coeffs()) c.push_back(x.lift(N).galois(k));
        acc = acc * CPoly(std::move(c));
    }
    return to_rational(acc);
}

}  // namespace cyclodyn
