#pragma once

#include <map>
#include <optional>

#include "cyclodyn/poly.hpp"

namespace cyclodyn {

// Finite sum of c_e X^e, e in Z; zero coefficients are never stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const std::map<long, CycloNum>& terms);
    static LaurentPoly from_poly(const CPoly& p);
    static LaurentPoly monomial(const CycloNum& c, long e);

    const std::map<long, CycloNum>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    CycloNum coeff(long e) const;
    // Terms with nonzero exponent.
    std::size_t nonconstant_terms() const;

    LaurentPoly& operator+=(const LaurentPoly& b);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  private:
    void add_term(long e, const CycloNum& c);

    std::map<long, CycloNum> terms_;
};

// g(q(X)).
LaurentPoly laurent_compose(const CPoly& g, const LaurentPoly& q);

struct TrinomialForm {
    CycloNum a, b, c;
    long n = 1;
};

// Matches a X^n + b X^-n + c, n >= 1, with any of a, b, c allowed to be
// zero. Constants match with n = 1.
std::optional<TrinomialForm> is_trinomial_symmetric(const LaurentPoly& q);

struct FZReport {
    std::size_t ell = 0;  // nonconstant terms of g(q)
    int deg_g = 0;
    long bound = 0;  // 2 (2 ell - 1)(ell - 1)
    bool pass = false;
};

// Throws HypothesisNotMet when q has the excluded symmetric trinomial form
// and PreconditionViolated when g is constant.
FZReport fz_bound_check(const CPoly& g, const LaurentPoly& q);

}  // namespace cyclodyn
