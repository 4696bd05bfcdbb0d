#include "cyclodyn/bounds.hpp"

#include <algorithm>

#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/errors.hpp"

namespace cyclodyn {

namespace {

// Representatives of embeddings up to complex conjugation, which preserves
// every modulus used below.
std::vector<unsigned> embedding_reps(unsigned N) {
    std::vector<unsigned> out;
    for (unsigned k : units_mod(N))
        if (N <= 2 || 2 * k < N) out.push_back(k);
    return out;
}

Rational interval_upper(const Interval& x) { return x.hi_q(); }

}  // namespace

Rational bound_L(const PolySystem& sys, const Rational& A, unsigned precision_bits) {
    Rational best = 0;
    if (sys.rational_coefficients()) {
        for (const auto& g : to_rational_system(sys)) {
            Rational sum = 1;
            for (int j = 0; j < g.degree(); ++j) sum += abs(g.coeffs()[j]);
            best = std::max(best, Rational(1 + sum / abs(g.leading())));
        }
        return std::max(best, A);
    }
    const unsigned bits = precision_bits + 8;
    const mpfr_prec_t wp = bits + 16;
    for (unsigned k : embedding_reps(sys.conductor())) {
        Interval worst = Interval::exact(0L, wp);
        for (const auto& g : sys.generators()) {
            Interval sum = Interval::exact(1L, wp);
            for (int j = 0; j < g.degree(); ++j)
                if (!g.coeffs()[j].is_zero()) sum = sum + embedded_modulus(g.coeffs()[j], k, bits);
            worst = max(worst, sum / embedded_modulus(g.leading(), k, bits));
        }
        best = std::max(best, interval_upper(Interval::exact(1L, wp) + worst));
    }
    return std::max(best, A);
}

Integer bound_D(const PolySystem& sys) {
    Integer D = 1;
    auto absorb = [&](const CycloNum& x) {
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), denominator_clearing(canonicalize_conductor(x)).get_mpz_t());
    };
    for (const auto& g : sys.generators()) {
        const CycloNum inv = g.leading().inverse();
        absorb(inv);
        for (int j = 0; j < g.degree(); ++j) absorb(g.coeffs()[j] * inv);
    }
    return D;
}

Integer bound_D_sigma(const PolySystem& sys) {
    Integer D = bound_D(sys);
    for (const auto& g : sys.generators())
        for (const auto& c : g.coeffs())
            mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), denominator_clearing(canonicalize_conductor(c)).get_mpz_t());
    return D;
}

unsigned choose_m(const PolySystem& sys, unsigned max_bits) {
    if (!sys.common_degree()) throw PreconditionViolated("choose_m needs generators of one common degree");
    auto from_floor = [](const Integer& f) -> unsigned {
        Integer m = f + 1;
        if (!m.fits_uint_p()) throw PrecisionExhausted("m does not fit an unsigned integer");
        return static_cast<unsigned>(m.get_ui());
    };
    if (sys.rational_coefficients()) {
        Rational mu = -1;
        for (const auto& g : to_rational_system(sys)) {
            Rational x = abs(g.leading());
            if (mu < 0 || x < mu) mu = x;
        }
        return from_floor(floor(Rational(1 / mu)));
    }
    const auto reps = embedding_reps(sys.conductor());
    for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
        std::optional<Interval> mu;
        for (unsigned k : reps)
            for (const auto& g : sys.generators()) {
                Interval x = embedded_modulus(g.leading(), k, bits);
                if (!mu) {
                    mu = x;
                } else {
                    Interval r = *mu;
                    mpfr_min(r.lo().get(), mu->lo().get(), x.lo().get(), MPFR_RNDD);
                    mpfr_min(r.hi().get(), mu->hi().get(), x.hi().get(), MPFR_RNDU);
                    mu = r;
                }
            }
        if (mu->contains_zero()) continue;
        // 1/mu lies in [1/mu_hi, 1/mu_lo]
        const Rational r_lo = 1 / mu->hi_q();
        const Rational r_hi = 1 / mu->lo_q();
        const Integer f_lo = floor(r_lo), f_hi = floor(r_hi);
        if (f_lo == f_hi) return from_floor(f_lo);
        // An integer k inside the enclosure equals 1/mu only if some leading
        // coefficient has modulus exactly 1/k, i.e. a * conj(a) = 1/k^2.
        const Rational target = Rational(1) / (f_hi * f_hi);
        for (const auto& g : sys.generators()) {
            CycloNum nsq = canonicalize_conductor(g.leading() * g.leading().conj());
            if (nsq.is_rational() && nsq.rational_value() == target) return from_floor(f_hi);
        }
    }
    throw PrecisionExhausted("min |sigma(a_d)| could not be separated from 1/m");
}

Rational bound_K(const PolySystem& sys, const Rational& A, unsigned precision_bits) {
    const auto d = sys.common_degree();
    if (!d || *d < 3) throw PreconditionViolated("bound_K needs generators of one common degree d >= 3");
    const unsigned m = choose_m(sys);
    const Rational inv_m = Rational(1, m);
    const Rational base = 2 * Rational(sys.size()) * m * m * A;
    if (sys.rational_coefficients()) {
        Rational worst = 0;
        for (const auto& g : to_rational_system(sys)) {
            Rational lead = abs(g.leading());
            Rational sum = 0;
            for (int j = 0; j < g.degree(); ++j) sum += abs(g.coeffs()[j]);
            Rational term = lead + (1 + 1 / (lead - inv_m)) * sum;
            worst = std::max(worst, term);
        }
        return base + worst;
    }
    for (unsigned bits = precision_bits + 8;; bits *= 2) {
        const mpfr_prec_t wp = bits + 16;
        Rational best = 0;
        bool ok = true;
        for (unsigned k : embedding_reps(sys.conductor())) {
            Interval worst = Interval::exact(0L, wp);
            for (const auto& g : sys.generators()) {
                Interval lead = embedded_modulus(g.leading(), k, bits);
                Interval gap = lead - Interval::exact(inv_m, wp);
                if (gap.contains_zero()) {
                    ok = false;
                    break;
                }
                Interval sum = Interval::exact(0L, wp);
                for (int j = 0; j < g.degree(); ++j)
                    if (!g.coeffs()[j].is_zero()) sum = sum + embedded_modulus(g.coeffs()[j], k, bits);
                Interval term = lead + (Interval::exact(1L, wp) + Interval::exact(1L, wp) / gap) * sum;
                worst = max(worst, term);
            }
            if (!ok) break;
            best = std::max(best, interval_upper(Interval::exact(base, wp) + worst));
        }
        if (ok) return best;
        if (bits > 8192) throw PrecisionExhausted("|sigma(a_d)| - 1/m could not be separated from zero");
    }
}

LKValue loxton_LK(const Rational& t, const LoxtonParams& params, unsigned precision_bits) {
    if (t <= 0) throw PreconditionViolated("L_K needs t > 0");
    if (params.R_exponent <= 0) throw PreconditionViolated("Loxton exponent must be positive");
    const Rational x = params.B * t;
    const Rational scale = Rational(params.E_size) * params.R_scale;
    const Integer& p = params.R_exponent.get_num();
    const Integer& q = params.R_exponent.get_den();
    if (!p.fits_slong_p() || !q.fits_ulong_p()) throw PreconditionViolated("Loxton exponent too large");
    const Rational xp = pow(x, p.get_si());
    if (q == 1) return {scale * xp, true};
    if (auto r = rational_root(xp, q.get_ui())) return {scale * *r, true};
    Real y(precision_bits + 16);
    mpfr_set_q(y.get(), xp.get_mpq_t(), MPFR_RNDU);
    mpfr_rootn_ui(y.get(), y.get(), q.get_ui(), MPFR_RNDU);
    return {scale * y.to_rational(), false};
}

MBound bound_M(const PolySystem& sys, const Rational& A, const LoxtonParams& params, unsigned precision_bits) {
    MBound out;
    out.L = bound_L(sys, A, precision_bits);
    out.D = bound_D(sys);
    out.LK_of_DL = loxton_LK(Rational(out.D) * out.L, params, precision_bits);
    // M - 3 > 2 log2(y) with y = 2 L_K(D L)  <=>  2^(M-3) > y^2
    const Rational y = 2 * out.LK_of_DL.value;
    const long e = floor_log2(y * y);
    out.M = static_cast<unsigned>(std::max(1L, e + 4));
    return out;
}

}  // namespace cyclodyn
