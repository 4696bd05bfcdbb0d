#include "cyclodyn/interval.hpp"

#include <algorithm>

#include "cyclodyn/errors.hpp"

namespace cyclodyn {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Rational Real::to_rational() const {
    if (!mpfr_number_p(v_)) throw Error("non-finite interval endpoint");
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval Interval::exact(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::exact(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

Real Interval::width() const {
    Real w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_add(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_add(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_sub(r.lo().get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
    mpfr_sub(r.hi().get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = joint(a, b);
    Interval r(p);
    Real t(p);
    mpfr_srcptr as[2] = {a.lo().get(), a.hi().get()};
    mpfr_srcptr bs[2] = {b.lo().get(), b.hi().get()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), r.lo().get())) mpfr_set(r.lo().get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), r.hi().get())) mpfr_set(r.hi().get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DivisionByZero();
    Interval inv(joint(a, b));
    mpfr_ui_div(inv.lo().get(), 1, b.hi().get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi().get(), 1, b.lo().get(), MPFR_RNDU);
    return a * inv;
}

Interval Interval::sqr() const {
    Interval r(prec());
    if (mpfr_sgn(lo_.get()) >= 0) {
        mpfr_sqr(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_sqr(r.hi_.get(), hi_.get(), MPFR_RNDU);
    } else if (mpfr_sgn(hi_.get()) <= 0) {
        mpfr_sqr(r.lo_.get(), hi_.get(), MPFR_RNDD);
        mpfr_sqr(r.hi_.get(), lo_.get(), MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_.get(), 1);
        Real t(prec());
        mpfr_sqr(r.hi_.get(), lo_.get(), MPFR_RNDU);
        mpfr_sqr(t.get(), hi_.get(), MPFR_RNDU);
        mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    }
    return r;
}

Interval Interval::sqrt() const {
    Interval r(prec());
    if (mpfr_sgn(lo_.get()) <= 0)
        mpfr_set_zero(r.lo_.get(), 1);
    else
        mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    if (mpfr_sgn(hi_.get()) <= 0)
        mpfr_set_zero(r.hi_.get(), 1);
    else
        mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return -*this;
    Interval r(prec());
    mpfr_set_zero(r.lo_.get(), 1);
    Real t(prec());
    mpfr_neg(t.get(), lo_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), t.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval hull(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_min(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_max(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return r;
}

Interval max(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_max(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_max(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return r;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi().get(), b.lo().get()); }

bool certainly_less(const Interval& a, const Rational& b) { return mpfr_cmp_q(a.hi().get(), b.get_mpq_t()) < 0; }

bool certainly_greater(const Interval& a, const Rational& b) {
    return mpfr_cmp_q(a.lo().get(), b.get_mpq_t()) > 0;
}

bool certainly_leq(const Interval& a, const Rational& b) { return mpfr_cmp_q(a.hi().get(), b.get_mpq_t()) <= 0; }

ComplexInterval root_of_unity_box(unsigned n, long m, mpfr_prec_t prec) {
    long e = m % static_cast<long>(n);
    if (e < 0) e += n;
    const unsigned long k = static_cast<unsigned long>(e);
    if (k == 0) return {Interval::exact(1L, prec), Interval::exact(0L, prec)};
    if (2 * k == n) return {Interval::exact(-1L, prec), Interval::exact(0L, prec)};
    if (4 * k == n) return {Interval::exact(0L, prec), Interval::exact(1L, prec)};
    if (4 * k == 3UL * n) return {Interval::exact(0L, prec), Interval::exact(-1L, prec)};

    // theta in [2k*pi_lo/n, 2k*pi_hi/n]; cos and sin are 1-Lipschitz, so
    // widen the value at theta_lo by the angle width.
    const mpfr_prec_t wp = prec + 16;
    Interval pi = Interval::pi(wp);
    Real tlo(wp), thi(wp), w(wp);
    mpfr_mul_ui(tlo.get(), pi.lo().get(), 2 * k, MPFR_RNDD);
    mpfr_div_ui(tlo.get(), tlo.get(), n, MPFR_RNDD);
    mpfr_mul_ui(thi.get(), pi.hi().get(), 2 * k, MPFR_RNDU);
    mpfr_div_ui(thi.get(), thi.get(), n, MPFR_RNDU);
    mpfr_sub(w.get(), thi.get(), tlo.get(), MPFR_RNDU);

    auto enclose = [&](int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
        Interval r(prec);
        fn(r.lo().get(), tlo.get(), MPFR_RNDD);
        mpfr_sub(r.lo().get(), r.lo().get(), w.get(), MPFR_RNDD);
        fn(r.hi().get(), tlo.get(), MPFR_RNDU);
        mpfr_add(r.hi().get(), r.hi().get(), w.get(), MPFR_RNDU);
        if (mpfr_cmp_si(r.lo().get(), -1) < 0) mpfr_set_si(r.lo().get(), -1, MPFR_RNDD);
        if (mpfr_cmp_si(r.hi().get(), 1) > 0) mpfr_set_si(r.hi().get(), 1, MPFR_RNDU);
        return r;
    };
    return {enclose(mpfr_cos), enclose(mpfr_sin)};
}

ComplexInterval ComplexBox::to_interval(mpfr_prec_t prec) const {
    ComplexInterval z(prec);
    mpfr_set_q(z.re.lo().get(), re_lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(z.re.hi().get(), re_hi.get_mpq_t(), MPFR_RNDU);
    mpfr_set_q(z.im.lo().get(), im_lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(z.im.hi().get(), im_hi.get_mpq_t(), MPFR_RNDU);
    return z;
}

}  // namespace cyclodyn
