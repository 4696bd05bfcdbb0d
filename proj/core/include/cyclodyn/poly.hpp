#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cyclodyn/cyclotomic.hpp"
#include "cyclodyn/errors.hpp"

namespace cyclodyn {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const CycloNum& c) { return c.is_zero(); }

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<C> c) : c_(std::move(c)) { trim(); }

    static Poly x() { return Poly(std::vector<C>{C(0L), C(1L)}); }
    static Poly constant(const C& c) { return Poly(std::vector<C>{c}); }
    static Poly monomial(const C& c, std::size_t d) {
        std::vector<C> v(d + 1, C(0L));
        v[d] = c;
        return Poly(std::move(v));
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0L); }
    const C& leading() const { return c_.back(); }

    C operator()(const C& x) const {
        C acc(0L);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // this(inner)
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly::constant(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> d(c_.size() - 1, C(0L));
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long>(i));
        return Poly(std::move(d));
    }

    Poly& operator+=(const Poly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), C(0L));
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), C(0L));
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0L));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!coeff_is_zero(b.c_[j])) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const C& s, const Poly& p) {
        if (coeff_is_zero(s)) return Poly();
        Poly r = p;
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

  private:
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

using QPoly = Poly<Rational>;
using CPoly = Poly<CycloNum>;

// Euclidean division over the coefficient field; throws DivisionByZero on b = 0.
template <class C>
std::pair<Poly<C>, Poly<C>> divrem(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<C> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly<C>(), a};
    std::vector<C> q(a.degree() - db + 1, C(0L));
    const C inv = C(1L) / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (coeff_is_zero(r[i])) continue;
        C f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
    }
    return {Poly<C>(std::move(q)), Poly<C>(std::move(r))};
}

template <class C>
Poly<C> monic(const Poly<C>& p) {
    if (p.is_zero()) return p;
    return (C(1L) / p.leading()) * p;
}

// Monic gcd; gcd(0, 0) = 0.
template <class C>
Poly<C> gcd(Poly<C> a, Poly<C> b) {
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// p / gcd(p, p'): same roots, each simple.
template <class C>
Poly<C> squarefree_part(const Poly<C>& p) {
    if (p.degree() <= 0) return p;
    Poly<C> g = gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return divrem(p, g).first;
}

inline CPoly to_cyclo(const QPoly& p) {
    std::vector<CycloNum> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return CPoly(std::move(c));
}

// Precondition: every coefficient is rational.
inline QPoly to_rational(const CPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        CycloNum y = canonicalize_conductor(x);
        if (!y.is_rational()) throw PreconditionViolated("polynomial has non-rational coefficients");
        c.push_back(y.rational_value());
    }
    return QPoly(std::move(c));
}

inline bool has_rational_coeffs(const CPoly& p) {
    for (const auto& x : p.coeffs())
        if (!canonicalize_conductor(x).is_rational()) return false;
    return true;
}

}  // namespace cyclodyn
