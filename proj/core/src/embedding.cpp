#include "cyclodyn/embedding.hpp"

#include <algorithm>

#include "cyclodyn/cyclo_field.hpp"

namespace cyclodyn {

namespace {

long coord_bits(const CycloNum& a) {
    long bits = 1;
    for (const auto& c : a.coords()) {
        if (c == 0) continue;
        const long b = static_cast<long>(mpz_sizeinbase(c.get_num_mpz_t(), 2));
        const long d = static_cast<long>(mpz_sizeinbase(c.get_den_mpz_t(), 2));
        bits = std::max({bits, b, d});
    }
    return bits;
}

// Rational exponent-of-two bound: returns e with |x| < 2^e (x dyadic, nonzero).
bool width_ok(const Interval& x, const Rational& limit) {
    Real w = x.width();
    return mpfr_cmp_q(w.get(), limit.get_mpq_t()) <= 0;
}

Rational snap_down(const Rational& x, unsigned cell_bits) {
    Integer scale = Integer(1) << cell_bits;
    Rational scaled = x * scale;
    Integer f = floor(scaled);
    return make_rational(f - 2, scale);
}

Rational snap_up(const Rational& x, unsigned cell_bits) {
    Integer scale = Integer(1) << cell_bits;
    Rational scaled = x * scale;
    Integer c = ceil(scaled);
    return make_rational(c + 2, scale);
}

}  // namespace

const char* to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        case Tri::boundary: return "boundary";
    }
    return "?";
}

ComplexInterval embed(const CycloNum& a, unsigned k, mpfr_prec_t wp) {
    const unsigned n = a.conductor();
    ComplexInterval sum = ComplexInterval::exact(a.coords()[0], wp);
    for (unsigned j = 1; j < a.coords().size(); ++j) {
        const auto& c = a.coords()[j];
        if (c == 0) continue;
        const unsigned e = static_cast<unsigned>((static_cast<unsigned long>(j) * k) % n);
        ComplexInterval z = root_of_unity_box(n, e, wp);
        Interval ci = Interval::exact(c, wp);
        sum = sum + ComplexInterval(ci * z.re, ci * z.im);
    }
    return sum;
}

Interval embedded_modulus(const CycloNum& a, unsigned k, unsigned bits) {
    if (a.is_rational()) return Interval::exact(abs(a.rational_value()), bits + 8).abs();
    mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32 + coord_bits(a);
    for (;;) {
        Interval m = embed(a, k, wp).abs();
        // relative criterion: width <= 2^-bits * max(1, hi)
        Rational limit = Rational(1) / (Integer(1) << bits);
        Rational hi = m.hi_q();
        if (hi > 1) limit *= hi;
        if (width_ok(m, limit)) return m;
        wp *= 2;
    }
}

std::vector<ComplexBox> embeddings(const CycloNum& a_in, unsigned precision_bits) {
    const CycloNum a = canonicalize_conductor(a_in);
    const unsigned cell_bits = precision_bits + 4;
    const Rational tight = Rational(1) / (Integer(1) << (cell_bits + 3));
    std::vector<ComplexBox> out;
    for (unsigned k : units_mod(a.conductor())) {
        if (a.is_rational()) {
            const Rational& q = a.rational_value();
            out.push_back({q, q, 0, 0});
            continue;
        }
        mpfr_prec_t wp = static_cast<mpfr_prec_t>(cell_bits) + 40 + coord_bits(a);
        for (;;) {
            ComplexInterval z = embed(a, k, wp);
            if (width_ok(z.re, tight) && width_ok(z.im, tight)) {
                out.push_back({snap_down(z.re.lo_q(), cell_bits), snap_up(z.re.hi_q(), cell_bits),
                               snap_down(z.im.lo_q(), cell_bits), snap_up(z.im.hi_q(), cell_bits)});
                break;
            }
            wp *= 2;
        }
    }
    return out;
}

HouseInterval house(const CycloNum& a_in, unsigned precision_bits) {
    const CycloNum a = canonicalize_conductor(a_in);
    if (a.is_rational()) {
        Rational q = abs(a.rational_value());
        return {q, q, precision_bits};
    }
    // Conjugate embeddings share a modulus; k and n - k pair up.
    const unsigned n = a.conductor();
    Rational lo, hi;
    bool first = true;
    for (unsigned k : units_mod(n)) {
        if (2 * k > n) break;
        Interval m = embedded_modulus(a, k, precision_bits + 1);
        Rational l = m.lo_q(), h = m.hi_q();
        if (first || l > lo) lo = l;
        if (first || h > hi) hi = h;
        first = false;
    }
    return {lo, hi, precision_bits};
}

Tri house_leq(const CycloNum& a_in, const Rational& A, const HouseLeqOptions& opts) {
    const CycloNum a = canonicalize_conductor(a_in);
    if (a.is_rational()) return abs(a.rational_value()) <= A ? Tri::yes : Tri::no;

    auto refine = [&](unsigned from, unsigned to) -> std::optional<Tri> {
        for (unsigned bits = from; bits <= to; bits *= 2) {
            HouseInterval h = house(a, bits);
            if (h.hi <= A) return Tri::yes;
            if (h.lo > A) return Tri::no;
        }
        return std::nullopt;
    };

    const unsigned quick = std::min(opts.start_bits, opts.max_bits);
    if (auto t = refine(quick, quick)) return *t;

    // An exact equality house(a) = A shows up as a * conj(a) = A^2 at some
    // embedding; when the norm-square is rational this settles it.
    CycloNum nsq = canonicalize_conductor(a * a.conj());
    if (nsq.is_rational() && nsq.rational_value() == A * A) return Tri::yes;
    if (A == 1 && is_algebraic_integer(a)) return is_root_of_unity(a) ? Tri::yes : Tri::no;

    if (auto t = refine(quick * 2, opts.max_bits)) return *t;
    return Tri::boundary;
}

}  // namespace cyclodyn
