#pragma once

#include <mpfr.h>

#include <string>

#include "cyclodyn/rational.hpp"

namespace cyclodyn {

// Owning wrapper around an mpfr_t.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 53);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    // Exact value; the wrapped number must be finite.
    Rational to_rational() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

// Closed real interval [lo, hi] with outward-rounded endpoints.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 53);

    static Interval exact(const Rational& q, mpfr_prec_t prec);
    static Interval exact(long v, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    Real& lo() { return lo_; }
    Real& hi() { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    Rational lo_q() const { return lo_.to_rational(); }
    Rational hi_q() const { return hi_.to_rational(); }

    // Upper bound on hi - lo.
    Real width() const;
    bool contains_zero() const;
    bool contains(const Rational& q) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    // Throws DivisionByZero if b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;

    Interval sqr() const;
    Interval sqrt() const;  // negative part clamped to zero
    Interval abs() const;

  private:
    Real lo_;
    Real hi_;
};

Interval hull(const Interval& a, const Interval& b);
// Interval containing max(x, y) for x in a, y in b.
Interval max(const Interval& a, const Interval& b);

// Every point of a is strictly below every point of b.
bool certainly_less(const Interval& a, const Interval& b);
bool certainly_less(const Interval& a, const Rational& b);
bool certainly_greater(const Interval& a, const Rational& b);
bool certainly_leq(const Interval& a, const Rational& b);

struct ComplexInterval {
    Interval re;
    Interval im;

    explicit ComplexInterval(mpfr_prec_t prec = 53) : re(prec), im(prec) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexInterval exact(const Rational& q, mpfr_prec_t prec) {
        return {Interval::exact(q, prec), Interval::exact(0L, prec)};
    }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexInterval operator-() const { return {-re, -im}; }

    Interval abs2() const { return re.sqr() + im.sqr(); }
    Interval abs() const { return abs2().sqrt(); }
};

// exp(2*pi*i*m/n) enclosed at the given precision; exact at multiples of
// quarter turns.
ComplexInterval root_of_unity_box(unsigned n, long m, mpfr_prec_t prec);

// A certified axis-aligned complex box with dyadic rational corners.
struct ComplexBox {
    Rational re_lo, re_hi, im_lo, im_hi;

    bool contains(const Rational& re, const Rational& im) const {
        return re_lo <= re && re <= re_hi && im_lo <= im && im <= im_hi;
    }
    bool contains(const ComplexBox& inner) const {
        return re_lo <= inner.re_lo && inner.re_hi <= re_hi && im_lo <= inner.im_lo && inner.im_hi <= im_hi;
    }
    static ComplexBox from(const ComplexInterval& z) {
        return {z.re.lo_q(), z.re.hi_q(), z.im.lo_q(), z.im.hi_q()};
    }
    ComplexInterval to_interval(mpfr_prec_t prec) const;
};

// Certified enclosure lo <= house <= hi.
struct HouseInterval {
    Rational lo;
    Rational hi;
    unsigned precision_bits = 0;
};

}  // namespace cyclodyn
