#pragma once

#include <vector>

#include "cyclodyn/cyclotomic.hpp"
#include "cyclodyn/interval.hpp"

namespace cyclodyn {

// Enclosure of sigma_k(a), where sigma_k sends zeta_n to exp(2*pi*i*k/n) and
// n is a's own conductor (k is reduced mod n). Working precision wp is used
// for every intermediate; the result is not refined.
ComplexInterval embed(const CycloNum& a, unsigned k, mpfr_prec_t wp);

// Enclosure of |sigma_k(a)| with relative width at most 2^-bits; refines the
// working precision as needed.
Interval embedded_modulus(const CycloNum& a, unsigned k, unsigned bits);

// One box per unit k mod n (n the canonical conductor, units increasing).
// Each box is snapped outward to the dyadic grid of cell 2^-(bits+4) and
// padded by two cells, so boxes at higher precision nest inside boxes at
// lower precision, and each side is at most 2^-bits long.
std::vector<ComplexBox> embeddings(const CycloNum& a, unsigned precision_bits);

// Certified enclosure of the house. Exact for rationals and zero.
HouseInterval house(const CycloNum& a, unsigned precision_bits);

enum class Tri { yes, no, boundary };

const char* to_string(Tri t);

struct HouseLeqOptions {
    unsigned start_bits = 64;
    unsigned max_bits = 4096;
};

// Decides house(a) <= A. Equality is detected exactly through a * conj(a);
// at A = 1 algebraic integers are decided by Kronecker's theorem. boundary
// is returned only when refinement up to max_bits cannot separate.
Tri house_leq(const CycloNum& a, const Rational& A, const HouseLeqOptions& opts = {});

}  // namespace cyclodyn
