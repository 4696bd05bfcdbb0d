#pragma once

#include <optional>

#include "cyclodyn/cyclotomic.hpp"

namespace cyclodyn {

// A square root of q inside a cyclotomic field, assembled from quadratic
// Gauss sums. nullopt only when |num*den| has a prime factor above the
// trial-division limit.
std::optional<CycloNum> sqrt_rational(const Rational& q);

// Some r with r^k = c, searched in Q(zeta_M) for multiples M of the
// conductor of c with M <= conductor_cap and phi(M) <= 12. Square roots of
// rationals always succeed through sqrt_rational. nullopt when nothing in
// the search space works.
std::optional<CycloNum> cyclo_root(const CycloNum& c, unsigned k, unsigned conductor_cap = 24);

}  // namespace cyclodyn
