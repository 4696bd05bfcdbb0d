#pragma once

#include <cstdint>
#include <vector>

#include "cyclodyn/rational.hpp"

namespace cyclodyn {

unsigned euler_phi(unsigned n);
std::vector<unsigned> prime_divisors(unsigned n);
unsigned lcm(unsigned a, unsigned b);

// Units mod n in increasing order; these index the complex embeddings
// zeta_n -> exp(2*pi*i*k/n).
std::vector<unsigned> units_mod(unsigned n);

// Integer coefficients of the n-th cyclotomic polynomial, low to high.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

namespace detail {

// Precomputed reduction data for Q(zeta_n) in the power basis
// 1, z, ..., z^(phi-1).
struct CycloField {
    unsigned n = 1;
    unsigned phi = 1;
    // Row e (0 <= e < n) holds the coordinates of z^e, flattened row-major.
    std::vector<std::int64_t> powers;

    const std::int64_t* power(unsigned e) const { return powers.data() + std::size_t(e % n) * phi; }
};

// Returns cached tables; safe to call from several threads.
const CycloField& field(unsigned n);

// Solves for coordinates in Q(zeta_m) of an element of Q(zeta_n), m | n.
// `rows` are phi(m) coordinate positions of Q(zeta_n) whose restriction of
// the embedded basis is invertible; `inverse` is that submatrix inverse.
struct SubfieldProjection {
    unsigned n = 1;
    unsigned m = 1;
    std::vector<unsigned> rows;
    std::vector<Rational> inverse;  // phi(m) x phi(m), row-major
};

const SubfieldProjection& subfield_projection(unsigned n, unsigned m);

}  // namespace detail
}  // namespace cyclodyn
