#include <limits>
#include <numeric>

#include "cyclodyn/bounds.hpp"
#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/dynamics.hpp"
#include "cyclodyn/errors.hpp"

namespace cyclodyn {

namespace {

// 1 + max_i |a_{i,d}|^-1 (1 + sum_{j<d} |a_{i,j}|) under sigma_k.
Interval arch_threshold(const PolySystem& sys, unsigned k, unsigned bits) {
    const mpfr_prec_t wp = bits + 16;
    Interval worst = Interval::exact(0L, wp);
    for (const auto& g : sys.generators()) {
        Interval sum = Interval::exact(1L, wp);
        for (int j = 0; j < g.degree(); ++j) {
            if (g.coeffs()[j].is_zero()) continue;
            sum = sum + embedded_modulus(g.coeffs()[j], k, bits);
        }
        worst = max(worst, sum / embedded_modulus(g.leading(), k, bits));
    }
    return Interval::exact(1L, wp) + worst;
}

Rational exact_threshold(const PolySystem& sys) {
    Rational worst = 0;
    for (const auto& g : to_rational_system(sys)) {
        Rational sum = 1;
        for (int j = 0; j < g.degree(); ++j) sum += abs(g.coeffs()[j]);
        Rational t = sum / abs(g.leading());
        if (t > worst) worst = t;
    }
    return 1 + worst;
}

}  // namespace

std::vector<QPoly> to_rational_system(const PolySystem& sys) {
    std::vector<QPoly> out;
    for (const auto& g : sys.generators()) out.push_back(to_rational(g));
    return out;
}

ArchGrowthReport growth_check_arch(const PolySystem& sys, const CycloNum& a_in, const Word& w, unsigned k,
                                   unsigned max_bits) {
    const CycloNum a = canonicalize_conductor(a_in);
    const unsigned N = lcm(a.conductor(), sys.conductor());
    if (std::gcd(k % N, N) != 1 && N > 1) throw PreconditionViolated("embedding index is not a unit mod the conductor");
    ArchGrowthReport rep;
    rep.embedding = k;

    std::vector<CycloNum> values{a};
    for (unsigned i : w) values.push_back(canonicalize_conductor(sys.gen(i)(values.back())));

    if (a.is_rational() && sys.rational_coefficients()) {
        rep.exact = true;
        rep.threshold_upper = exact_threshold(sys);
        if (!(abs(a.rational_value()) > rep.threshold_upper))
            throw HypothesisNotMet("|a| = " + to_string(abs(a.rational_value())) + " does not exceed the threshold " +
                                   to_string(rep.threshold_upper));
        rep.increasing = true;
        for (std::size_t t = 0; t < values.size(); ++t) {
            Rational m = abs(values[t].rational_value());
            rep.moduli.emplace_back(m, m);
            if (t > 0 && !(m > rep.moduli[t - 1].first)) rep.increasing = false;
        }
        return rep;
    }

    bool certified = false;
    for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
        Interval thr = arch_threshold(sys, k, bits);
        Interval mod = embedded_modulus(a, k, bits);
        rep.threshold_upper = thr.hi_q();
        if (certainly_less(thr, mod)) {
            certified = true;
            break;
        }
        if (certainly_less(mod, thr)) break;
    }
    if (!certified) throw HypothesisNotMet("|sigma(a)| above the growth threshold could not be certified");

    rep.increasing = true;
    std::vector<Interval> mods;
    for (std::size_t t = 0; t < values.size(); ++t) {
        unsigned bits = 64;
        Interval m = embedded_modulus(values[t], k, bits);
        if (t > 0) {
            for (;;) {
                if (certainly_less(mods[t - 1], m)) break;
                if (!certainly_less(m, mods[t - 1]) && bits * 2 <= max_bits) {
                    bits *= 2;
                    m = embedded_modulus(values[t], k, bits);
                    mods[t - 1] = embedded_modulus(values[t - 1], k, bits);
                    continue;
                }
                rep.increasing = false;
                break;
            }
        }
        mods.push_back(m);
    }
    for (const auto& m : mods) rep.moduli.emplace_back(m.lo_q(), m.hi_q());
    return rep;
}

PadicGrowthReport growth_check_padic(const PolySystem& sys, const Rational& a, const Integer& p, const Word& w) {
    const auto gens = to_rational_system(sys);
    if (!is_prime(p)) throw InvalidPlace(p.get_str() + " is not prime");
    // |x|_p > |y|_p  <=>  v(x) < v(y); nullopt is +infinity
    const auto va = padic_val(a, p);
    if (!va) throw HypothesisNotMet("a = 0 has |a|_p = 0");
    std::optional<long> bound = 0;  // valuation of the max on the right-hand side
    auto take_min = [&](long v) {
        if (v < *bound) bound = v;
    };
    for (const auto& g : gens) {
        const long vd = *padic_val(g.leading(), p);
        take_min(-vd);
        for (int j = 0; j < g.degree(); ++j)
            if (auto vj = padic_val(g.coeffs()[j], p)) take_min(*vj - vd);
    }
    if (!(*va < *bound))
        throw HypothesisNotMet("|a|_p = " + to_string(padic_abs(a, p)) + " does not exceed the threshold " +
                               to_string(pow(Rational(p), -*bound)));

    PadicGrowthReport rep;
    rep.p = p;
    rep.valuations.push_back(*va);
    rep.increasing = true;
    rep.recurrence_holds = true;
    Rational b = a;
    for (unsigned i : w) {
        const QPoly& g = gens.at(i - 1);
        const long prev = rep.valuations.back();
        b = g(b);
        const auto vb = padic_val(b, p);
        if (!vb) {
            rep.increasing = false;
            rep.recurrence_holds = false;
            rep.valuations.push_back(std::numeric_limits<long>::max());
            break;
        }
        rep.valuations.push_back(*vb);
        if (!(*vb < prev)) rep.increasing = false;
        if (*vb != *padic_val(g.leading(), p) + g.degree() * prev) rep.recurrence_holds = false;
    }
    return rep;
}

PrefixHouseReport prefix_house_bound(const PolySystem& sys, const CycloNum& a, const Word& w, const Rational& A,
                                     unsigned precision_bits) {
    if (house_leq(evaluate_word(sys, w, a), A) != Tri::yes)
        throw PreconditionViolated("the word's endpoint is not certified to have house at most A");
    PrefixHouseReport rep;
    rep.L = bound_L(sys, A);
    rep.pass = true;
    CycloNum v = canonicalize_conductor(a);
    for (std::size_t t = 0; t < w.size(); ++t) {
        rep.prefix_houses.push_back(house(v, precision_bits));
        if (house_leq(v, rep.L) != Tri::yes) rep.pass = false;
        v = canonicalize_conductor(sys.gen(w[t])(v));
    }
    return rep;
}

PrefixIntegralityReport prefix_integrality(const PolySystem& sys, const CycloNum& a, const Word& w) {
    if (!is_algebraic_integer(evaluate_word(sys, w, a)))
        throw PreconditionViolated("the word's endpoint is not an algebraic integer");
    PrefixIntegralityReport rep;
    rep.D = bound_D(sys);
    rep.pass = true;
    CycloNum v = canonicalize_conductor(a);
    for (std::size_t t = 0; t < w.size(); ++t) {
        const bool ok = is_algebraic_integer(CycloNum(rep.D) * v);
        rep.integral.push_back(ok);
        if (!ok) rep.pass = false;
        v = canonicalize_conductor(sys.gen(w[t])(v));
    }
    return rep;
}

}  // namespace cyclodyn
