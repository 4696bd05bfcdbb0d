#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclodyn/system.hpp"

namespace cyclodyn {

// Monic T_d with T_d(x + 1/x) = x^d + x^-d.
CPoly chebyshev(unsigned d);

// x -> u x + v, u != 0.
struct LinearMap {
    CycloNum u{1L};
    CycloNum v{0L};

    static LinearMap identity() { return {}; }
    CPoly poly() const { return CPoly(std::vector<CycloNum>{v, u}); }
    LinearMap inverse() const;
    // this o other
    LinearMap after(const LinearMap& other) const;
    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.u == b.u && a.v == b.v; }
};

// l o f o l^-1
CPoly conjugate(const LinearMap& l, const CPoly& f);

struct NormalForm {
    CPoly g;
    LinearMap l;  // g = l^-1 o f o l
};

// g monic with zero X^(d-1) coefficient. Among the d-1 admissible scalings,
// the one whose highest nonzero non-leading coefficient is 1 is taken;
// otherwise the least coefficient vector (high degree first, canonical
// order per coefficient). Throws ScalingOutsideSearchSpace when no
// (d-1)-th root of 1/a_d is found among cyclotomic fields up to the cap.
NormalForm conjugate_normal_form(const CPoly& f, unsigned conductor_cap = 24);

// Exact tests over the algebraic closure, independent of any root
// extraction:
//   power: f(x + v) - v = a_d x^d with v = -a_{d-1} / (d a_d)
//   cheb:  the centered coefficients match eps u T_d(x / u)
bool power_normal_form_matches(const CPoly& f);
bool cheb_normal_form_matches(const CPoly& f);

// l with f = l o X^d o l^-1, verified by expansion. Throws
// ScalingOutsideSearchSpace when f is conjugate to X^d but the scaling u
// (u^(d-1) = 1/a_d) was not found up to the conductor cap.
std::optional<LinearMap> is_conjugate_to_power(const CPoly& f, unsigned conductor_cap = 24);

struct ChebConjugacy {
    LinearMap l;
    int sign = 1;  // f = l o (sign T_d) o l^-1
};

std::optional<ChebConjugacy> is_conjugate_to_cheb(const CPoly& f, unsigned conductor_cap = 24);

struct TwoSided {
    LinearMap l1;
    LinearMap l2;  // f = l1 o g o l2
};

// f = l1 o X^d o l2.
std::optional<TwoSided> two_sided_equiv_power(const CPoly& f);

// f = l1 o T_d o l2, i.e. f(x) = a T_d(u x + v) + b. The scaling u with
// first nonzero coordinate positive is returned. Throws
// ScalingOutsideSearchSpace when the needed square root is not found up to
// the conductor cap.
std::optional<TwoSided> two_sided_equiv_cheb(const CPoly& f, unsigned conductor_cap = 24);

enum class Form { power, cheb };
const char* to_string(Form f);

struct SpecialFinding {
    int condition = 1;             // 1 or 2
    std::vector<unsigned> indices;  // 1-based; (i, j) means f_j o f_i for condition 2
    Form form = Form::power;
    int sign = 1;
    // Witness maps: condition 1 stores l (f = l o g o l^-1); condition 2
    // stores l1, l2 (h = l1 o g o l2). Empty when the identity was decided
    // without extracting the scaling.
    std::vector<LinearMap> witnesses;
    std::string note;
};

struct SpecialityReport {
    bool special = false;
    std::vector<SpecialFinding> findings;
};

struct SpecialOptions {
    unsigned conductor_cap = 24;
    unsigned threads = 1;
};

// Condition 1 on every generator, condition 2 through f_j o f_i on every
// ordered pair i != j.
SpecialityReport is_special_set(const PolySystem& sys, const SpecialOptions& opts = {});

// Re-expands the witness of a finding against the system.
bool verify_finding(const PolySystem& sys, const SpecialFinding& f);

}  // namespace cyclodyn
