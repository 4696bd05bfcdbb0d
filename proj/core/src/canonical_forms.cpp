#include "cyclodyn/canonical_forms.hpp"

#include <algorithm>

#include "cyclodyn/dynamics.hpp"
#include "cyclodyn/errors.hpp"
#include "cyclodyn/parallel.hpp"
#include "cyclodyn/radicals.hpp"

namespace cyclodyn {

namespace {

CPoly power_poly(unsigned d) { return CPoly::monomial(CycloNum(1L), d); }

CPoly shift(const CPoly& f, const CycloNum& v) { return f.compose(CPoly(std::vector<CycloNum>{v, CycloNum(1L)})); }

// -a_{d-1} / (d a_d)
CycloNum center(const CPoly& f) {
    const int d = f.degree();
    return -f[static_cast<std::size_t>(d - 1)] / (CycloNum(static_cast<long>(d)) * f.leading());
}

// Signed powers.
CycloNum ipow(const CycloNum& w, long e) { return e >= 0 ? w.pow(static_cast<unsigned long>(e)) : w.inverse().pow(static_cast<unsigned long>(-e)); }

bool first_coord_positive(const CycloNum& u) {
    for (const auto& c : canonicalize_conductor(u).coords())
        if (sgn(c) != 0) return sgn(c) > 0;
    return false;
}

// Rootless data for f = eps u T_d(x/u) centered at v: w = u^2, and eps.
struct ChebData {
    CycloNum v;
    CycloNum w;
    int eps = 1;
};

std::optional<ChebData> cheb_data(const CPoly& f) {
    const int d = f.degree();
    if (d < 2) return std::nullopt;
    const CycloNum ad = f.leading();
    const CycloNum v = center(f);
    const CPoly g = shift(f, v) - CPoly::constant(v);
    const CPoly t = chebyshev(static_cast<unsigned>(d));
    const CycloNum w = -g[static_cast<std::size_t>(d - 2)] / (CycloNum(static_cast<long>(d)) * ad);
    if (w.is_zero()) return std::nullopt;
    for (int j = 0; j < d; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        if ((d - j) % 2) {
            if (!g[sj].is_zero()) return std::nullopt;
        } else if (!(g[sj] == t[sj] * ad * ipow(w, (d - j) / 2))) {
            return std::nullopt;
        }
    }
    if (!(ad * ad * ipow(w, d - 1) == CycloNum(1L))) return std::nullopt;
    int eps = 1;
    if (d % 2) {
        const CycloNum e = ad * ipow(w, (d - 1) / 2);
        if (e == CycloNum(1L))
            eps = 1;
        else if (e == CycloNum(-1L))
            eps = -1;
        else
            return std::nullopt;
    }
    return ChebData{v, w, eps};
}

// Rootless data for f(x) = a T_d(u (x - r)) + b: w = u^2 and r.
struct TwoSidedChebData {
    CycloNum r;
    CycloNum w;
    CPoly g;  // f(y + r)
};

std::optional<TwoSidedChebData> two_sided_cheb_data(const CPoly& f) {
    const int d = f.degree();
    if (d < 2) return std::nullopt;
    const CycloNum ad = f.leading();
    const CycloNum r = center(f);
    CPoly g = shift(f, r);
    if (d == 2) return TwoSidedChebData{r, CycloNum(1L), std::move(g)};
    const CycloNum gd2 = g[static_cast<std::size_t>(d - 2)];
    if (gd2.is_zero()) return std::nullopt;
    const CycloNum w = -CycloNum(static_cast<long>(d)) * ad / gd2;
    const CPoly t = chebyshev(static_cast<unsigned>(d));
    for (int j = 1; j < d; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        if ((d - j) % 2) {
            if (!g[sj].is_zero()) return std::nullopt;
        } else if (!(g[sj] == ad * t[sj] * ipow(w, -(d - j) / 2))) {
            return std::nullopt;
        }
    }
    return TwoSidedChebData{r, w, std::move(g)};
}

CPoly two_sided(const TwoSided& m, const CPoly& g) { return m.l1.poly().compose(g.compose(m.l2.poly())); }

// Coefficients X^(d-1) .. X^0 compared in canonical order.
bool normal_less(const CPoly& a, const CPoly& b) {
    const int d = a.degree();
    for (int j = d - 1; j >= 0; --j) {
        const auto c = canonical_compare(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j)]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool top_is_one(const CPoly& g) {
    for (int j = g.degree() - 1; j >= 0; --j) {
        const CycloNum& c = g[static_cast<std::size_t>(j)];
        if (!c.is_zero()) return c == CycloNum(1L);
    }
    return false;
}

}  // namespace

CPoly chebyshev(unsigned d) {
    CPoly prev = CPoly::constant(CycloNum(2L));
    CPoly cur = CPoly::x();
    if (d == 0) return prev;
    for (unsigned k = 1; k < d; ++k) {
        CPoly next = CPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LinearMap LinearMap::inverse() const {
    const CycloNum ui = u.inverse();
    return {canonicalize_conductor(ui), canonicalize_conductor(-v * ui)};
}

LinearMap LinearMap::after(const LinearMap& other) const {
    return {canonicalize_conductor(u * other.u), canonicalize_conductor(u * other.v + v)};
}

CPoly conjugate(const LinearMap& l, const CPoly& f) { return l.poly().compose(f.compose(l.inverse().poly())); }

NormalForm conjugate_normal_form(const CPoly& f, unsigned conductor_cap) {
    const int d = f.degree();
    if (d < 2) throw PreconditionViolated("normal form needs degree >= 2");
    const CycloNum v = canonicalize_conductor(center(f));
    const auto u0 = cyclo_root(f.leading().inverse(), static_cast<unsigned>(d - 1), conductor_cap);
    if (!u0) throw ScalingOutsideSearchSpace("no (d-1)-th root of 1/a_d up to conductor " + std::to_string(conductor_cap));
    std::optional<NormalForm> best;
    bool best_one = false;
    for (int j = 0; j < d - 1; ++j) {
        LinearMap l{canonicalize_conductor(*u0 * CycloNum::zeta(static_cast<unsigned>(d - 1), j)), v};
        CPoly g = l.inverse().poly().compose(f.compose(l.poly()));
        const bool one = top_is_one(g);
        if (!best || (one && !best_one) || (one == best_one && normal_less(g, best->g))) {
            best = NormalForm{std::move(g), l};
            best_one = one;
        }
    }
    return *best;
}

bool power_normal_form_matches(const CPoly& f) {
    const int d = f.degree();
    if (d < 2) return false;
    const CycloNum v = center(f);
    return shift(f, v) - CPoly::constant(v) == CPoly::monomial(f.leading(), static_cast<std::size_t>(d));
}

bool cheb_normal_form_matches(const CPoly& f) { return cheb_data(f).has_value(); }

std::optional<LinearMap> is_conjugate_to_power(const CPoly& f, unsigned conductor_cap) {
    if (!power_normal_form_matches(f)) return std::nullopt;
    const int d = f.degree();
    const auto u = cyclo_root(f.leading().inverse(), static_cast<unsigned>(d - 1), conductor_cap);
    if (!u) throw ScalingOutsideSearchSpace("f is conjugate to X^d but u^(d-1) = 1/a_d has no root up to conductor " + std::to_string(conductor_cap));
    const LinearMap l{canonicalize_conductor(*u), canonicalize_conductor(center(f))};
    if (!(conjugate(l, power_poly(static_cast<unsigned>(d))) == f)) throw Error("power conjugacy witness failed to verify");
    return l;
}

std::optional<ChebConjugacy> is_conjugate_to_cheb(const CPoly& f, unsigned conductor_cap) {
    const auto data = cheb_data(f);
    if (!data) return std::nullopt;
    const int d = f.degree();
    CycloNum u;
    if (d % 2 == 0) {
        u = (f.leading() * ipow(data->w, (d - 2) / 2)).inverse();
    } else {
        const auto s = cyclo_root(data->w, 2, conductor_cap);
        if (!s) throw ScalingOutsideSearchSpace("f is conjugate to a Chebyshev polynomial but sqrt(u^2) was not found up to conductor " + std::to_string(conductor_cap));
        u = *s;
    }
    const LinearMap l{canonicalize_conductor(u), canonicalize_conductor(data->v)};
    const CPoly target = CycloNum(static_cast<long>(data->eps)) * chebyshev(static_cast<unsigned>(d));
    if (!(conjugate(l, target) == f)) throw Error("Chebyshev conjugacy witness failed to verify");
    return ChebConjugacy{l, data->eps};
}

std::optional<TwoSided> two_sided_equiv_power(const CPoly& f) {
    const int d = f.degree();
    if (d < 2) return std::nullopt;
    const CycloNum r = canonicalize_conductor(center(f));
    const CycloNum b = canonicalize_conductor(f(r));
    const TwoSided m{LinearMap{canonicalize_conductor(f.leading()), b}, LinearMap{CycloNum(1L), -r}};
    if (!(two_sided(m, power_poly(static_cast<unsigned>(d))) == f)) return std::nullopt;
    return m;
}

std::optional<TwoSided> two_sided_equiv_cheb(const CPoly& f, unsigned conductor_cap) {
    const auto data = two_sided_cheb_data(f);
    if (!data) return std::nullopt;
    const int d = f.degree();
    const CPoly t = chebyshev(static_cast<unsigned>(d));
    CycloNum u(1L);
    if (d != 2) {
        const auto s = cyclo_root(data->w, 2, conductor_cap);
        if (!s) throw ScalingOutsideSearchSpace("f = a T_d(u x + v) + b needs sqrt of u^2 beyond conductor " + std::to_string(conductor_cap));
        u = canonicalize_conductor(*s);
        if (!first_coord_positive(u)) u = -u;
    }
    const CycloNum a = canonicalize_conductor(f.leading() / u.pow(static_cast<unsigned long>(d)));
    const CycloNum b = canonicalize_conductor(data->g[0] - a * t[0]);
    const TwoSided m{LinearMap{a, b}, LinearMap{u, canonicalize_conductor(-u * data->r)}};
    if (!(two_sided(m, t) == f)) throw Error("two-sided Chebyshev witness failed to verify");
    return m;
}

const char* to_string(Form f) { return f == Form::power ? "power" : "cheb"; }

namespace {

void condition_one(const CPoly& f, unsigned index, unsigned cap, std::vector<SpecialFinding>& out) {
    const std::string cap_note = "scaling outside search space (conductor cap " + std::to_string(cap) + "); identity decided without extracting it";
    if (power_normal_form_matches(f)) {
        SpecialFinding fd{1, {index}, Form::power, 1, {}, {}};
        try {
            fd.witnesses.push_back(*is_conjugate_to_power(f, cap));
        } catch (const ScalingOutsideSearchSpace&) {
            fd.note = cap_note;
        }
        out.push_back(std::move(fd));
    }
    if (const auto data = cheb_data(f)) {
        SpecialFinding fd{1, {index}, Form::cheb, data->eps, {}, {}};
        try {
            fd.witnesses.push_back(is_conjugate_to_cheb(f, cap)->l);
        } catch (const ScalingOutsideSearchSpace&) {
            fd.note = cap_note;
        }
        out.push_back(std::move(fd));
    }
}

void condition_two(const CPoly& h, unsigned i, unsigned j, unsigned cap, std::vector<SpecialFinding>& out) {
    if (const auto m = two_sided_equiv_power(h)) out.push_back(SpecialFinding{2, {i, j}, Form::power, 1, {m->l1, m->l2}, {}});
    if (two_sided_cheb_data(h)) {
        SpecialFinding fd{2, {i, j}, Form::cheb, 1, {}, {}};
        try {
            const auto m = two_sided_equiv_cheb(h, cap);
            fd.witnesses = {m->l1, m->l2};
        } catch (const ScalingOutsideSearchSpace&) {
            fd.note = "scaling outside search space (conductor cap " + std::to_string(cap) + "); identity decided without extracting it";
        }
        out.push_back(std::move(fd));
    }
}

}  // namespace

SpecialityReport is_special_set(const PolySystem& sys, const SpecialOptions& opts) {
    const unsigned s = sys.size();
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 1; i <= s; ++i)
        for (unsigned j = 1; j <= s; ++j)
            if (i != j) pairs.emplace_back(i, j);

    // Slots: generators first, then ordered pairs.
    std::vector<std::vector<SpecialFinding>> slots(s + pairs.size());
    parallel_for(slots.size(), opts.threads, [&](std::size_t k) {
        if (k < s) {
            const auto idx = static_cast<unsigned>(k + 1);
            condition_one(sys.gen(idx), idx, opts.conductor_cap, slots[k]);
        } else {
            const auto [i, j] = pairs[k - s];
            condition_two(compose_word(sys, Word{i, j}), i, j, opts.conductor_cap, slots[k]);
        }
    });

    SpecialityReport rep;
    for (auto& slot : slots)
        for (auto& fd : slot) rep.findings.push_back(std::move(fd));
    rep.special = !rep.findings.empty();
    return rep;
}

bool verify_finding(const PolySystem& sys, const SpecialFinding& f) {
    for (unsigned idx : f.indices)
        if (idx < 1 || idx > sys.size()) return false;
    if (f.condition == 1) {
        if (f.indices.size() != 1) return false;
        const CPoly& g = sys.gen(f.indices[0]);
        const auto d = static_cast<unsigned>(g.degree());
        if (f.witnesses.empty()) {
            if (f.form == Form::power) return power_normal_form_matches(g);
            const auto data = cheb_data(g);
            return data && data->eps == f.sign;
        }
        if (f.witnesses.size() != 1) return false;
        const CPoly target = f.form == Form::power ? power_poly(d) : CycloNum(static_cast<long>(f.sign)) * chebyshev(d);
        return conjugate(f.witnesses[0], target) == g;
    }
    if (f.condition != 2 || f.indices.size() != 2 || f.indices[0] == f.indices[1]) return false;
    const CPoly h = compose_word(sys, Word{f.indices[0], f.indices[1]});
    const auto d = static_cast<unsigned>(h.degree());
    if (f.witnesses.empty()) {
        if (f.form == Form::power) return two_sided_equiv_power(h).has_value();
        return two_sided_cheb_data(h).has_value();
    }
    if (f.witnesses.size() != 2) return false;
    const CPoly target = f.form == Form::power ? power_poly(d) : chebyshev(d);
    return two_sided(TwoSided{f.witnesses[0], f.witnesses[1]}, target) == h;
}

}  // namespace cyclodyn
