#pragma once

#include <vector>

#include "cyclodyn/interval.hpp"
#include "cyclodyn/poly.hpp"

namespace cyclodyn {

struct RootIsolation {
    // One box per distinct root, each certified to contain exactly one root.
    std::vector<ComplexBox> boxes;
    // Upper bound on the modulus of every root (0 when there are no roots).
    Rational max_modulus_upper = 0;
    bool certified = false;
    unsigned precision_bits = 0;
};

// Distinct complex roots of p with its coefficients embedded by
// zeta_N -> exp(2*pi*i*k/N). Root approximations come from Aberth iteration;
// inclusion disks of radius deg*|p(z_i)| / |lead * prod_{j != i}(z_i - z_j)|
// certify them once pairwise disjoint.
RootIsolation isolate_roots(const CPoly& p, unsigned k = 1, unsigned max_bits = 2048);

// prod over Galois conjugates of p, taken in the lcm conductor of its
// coefficients. Rational, and vanishes exactly at all conjugates of roots of p.
QPoly norm_polynomial(const CPoly& p);

}  // namespace cyclodyn
