#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cyclodyn/rational.hpp"

namespace cyclodyn {

// An element of Q(zeta_n), stored by its rational coordinates in the power
// basis 1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial.
//
// Binary operations lift both operands to Q(zeta_lcm) first. Results are not
// reduced to their minimal conductor; equality is nonetheless exact across
// conductors. Use canonicalize_conductor() before using a value as a key.
class CycloNum {
  public:
    CycloNum() : n_(1), c_(1) {}
    CycloNum(long v) : n_(1), c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
    CycloNum(int v) : CycloNum(static_cast<long>(v)) {}  // NOLINT
    CycloNum(const Integer& v) : n_(1), c_{Rational(v)} {}  // NOLINT
    CycloNum(const Rational& v) : n_(1), c_{v} {}  // NOLINT

    // zeta_n^k for any integer k.
    static CycloNum zeta(unsigned n, long k = 1);
    static CycloNum from_coords(unsigned n, std::vector<Rational> coords);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Precondition: is_rational().
    const Rational& rational_value() const { return c_[0]; }

    // The same element expressed in Q(zeta_big); big must be a multiple of
    // the current conductor.
    CycloNum lift(unsigned big) const;

    // Image under the automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
    CycloNum galois(long k) const;
    // Complex conjugate (k = -1); commutes with every embedding.
    CycloNum conj() const { return galois(-1); }

    // Throws DivisionByZero on zero.
    CycloNum inverse() const;
    CycloNum pow(unsigned long e) const;

    CycloNum& operator+=(const CycloNum& b);
    CycloNum& operator-=(const CycloNum& b);
    CycloNum& operator*=(const CycloNum& b);
    CycloNum& operator/=(const CycloNum& b) { return *this *= b.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    CycloNum operator-() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);

  private:
    CycloNum(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

    unsigned n_;
    std::vector<Rational> c_;
};

// Same element at the least conductor admitting it. Conductors are never
// congruent to 2 mod 4 afterwards; zero and rationals get conductor 1.
CycloNum canonicalize_conductor(const CycloNum& a);

// Membership of a in Q(zeta_m); returns the element re-expressed there.
std::optional<CycloNum> restrict_to(const CycloNum& a, unsigned m);

// Power-basis coordinates all integral (the power basis is an integral basis
// of Q(zeta_n)).
bool is_algebraic_integer(const CycloNum& a);

// Least D >= 1 with D*a integral: lcm of the coordinate denominators.
Integer denominator_clearing(const CycloNum& a);

// a is a root of unity (exact: a^lcm(2, n) == 1).
bool is_root_of_unity(const CycloNum& a);
// Multiplicative order when a is a root of unity, otherwise nullopt.
std::optional<unsigned> root_of_unity_order(const CycloNum& a);

// Total order on canonical values: conductor, then coordinates
// lexicographically. Both arguments must already be canonical.
std::strong_ordering canonical_compare(const CycloNum& a, const CycloNum& b);

struct CanonicalLess {
    bool operator()(const CycloNum& a, const CycloNum& b) const { return canonical_compare(a, b) < 0; }
};

}  // namespace cyclodyn
