#pragma once

#include <optional>
#include <vector>

#include "cyclodyn/embedding.hpp"
#include "cyclodyn/system.hpp"

namespace cyclodyn {

// Upper bound on max over embeddings of
//   1 + max_i |sigma(a_{i,d_i})|^-1 (1 + sum_{j<d_i} |sigma(a_{i,j})|),
// then the max with A. Exact for rational coefficients.
Rational bound_L(const PolySystem& sys, const Rational& A, unsigned precision_bits = 128);

// Least D with D a_{i,d}^-1 and D a_{i,j} a_{i,d}^-1 (j < d) integral.
Integer bound_D(const PolySystem& sys);

// Least D with D a_{i,d}^-1, D a_{i,j} and D a_{i,j} a_{i,d}^-1 (j <= d)
// integral; the denominator bound for Sigma_A.
Integer bound_D_sigma(const PolySystem& sys);

// Least m >= 1 with |sigma(a_{i,d})| > 1/m for all embeddings and i.
// Requires equal degrees. Throws PrecisionExhausted if refinement up to
// max_bits cannot locate floor(1 / min |sigma(a_{i,d})|).
unsigned choose_m(const PolySystem& sys, unsigned max_bits = 4096);

// Upper bound on max over embeddings of
//   2 s m^2 A + max_i (|sigma(a_{i,d})|
//                      + (1 + (|sigma(a_{i,d})| - 1/m)^-1) sum_{j<d} |sigma(a_{i,j})|).
// Requires equal degrees d >= 3. Exact for rational coefficients.
Rational bound_K(const PolySystem& sys, const Rational& A, unsigned precision_bits = 128);

// R(x) = R_scale * x^R_exponent; L_K(t) = E_size * R(B t).
struct LoxtonParams {
    Integer E_size = 1;
    Rational B = 1;
    Rational R_scale = 1;
    Rational R_exponent = 3;
};

struct LKValue {
    Rational value;  // exact, or a certified upper bound when !exact
    bool exact = true;
};

LKValue loxton_LK(const Rational& t, const LoxtonParams& params, unsigned precision_bits = 128);

struct MBound {
    unsigned M = 1;
    Rational L;
    Integer D;
    LKValue LK_of_DL;
};

// Least integer M > 2 log2(2 L_K(D L)) + 3, i.e. 2^(M-3) > (2 L_K(D L))^2,
// with L = bound_L and D = bound_D. Exact whenever L_K(D L) is.
MBound bound_M(const PolySystem& sys, const Rational& A, const LoxtonParams& params,
               unsigned precision_bits = 128);

struct LoxtonCertificate {
    CycloNum target;
    // Exponents e with terms zeta_order^e, nondecreasing; coefficient 1 each.
    unsigned order = 1;
    std::vector<unsigned> exponents;
    std::vector<CycloNum> terms;
    unsigned b() const { return static_cast<unsigned>(exponents.size()); }
};

struct LoxtonSearch {
    std::optional<LoxtonCertificate> certificate;
    // Sizes 0..exhausted_below-1 were searched completely without success.
    unsigned exhausted_below = 0;
};

// Shortest representation of a as a sum of roots of unity of order dividing
// order_bound, sizes 1..max_b in order; within a size the lexicographically
// least nondecreasing exponent tuple. Zero is the empty sum (b = 0).
// Requires a integral and order_bound a multiple of its conductor.
LoxtonSearch loxton_decompose(const CycloNum& a, unsigned max_b, unsigned order_bound, unsigned threads = 1);

// Sum of the terms equals the target, recomputed in Q(zeta_order).
bool verify_loxton_certificate(const LoxtonCertificate& c);

struct LoxtonBoundReport {
    LoxtonCertificate certificate;
    HouseInterval house;
    LKValue bound;  // L_K(house.hi)
    bool pass = false;
};

// Throws PreconditionViolated when no decomposition is found.
LoxtonBoundReport verify_loxton_bound(const CycloNum& a, const LoxtonParams& params, unsigned max_b,
                                      unsigned order_bound, unsigned threads = 1);

}  // namespace cyclodyn
