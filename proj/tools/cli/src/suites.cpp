#include "cyclodyn_cli/suites.hpp"

#include <algorithm>
#include <random>
#include <numeric>
#include <set>

#include "cyclodyn/parallel.hpp"

namespace cyclodyn::cli {

namespace {

// Tags keep the three instance streams apart for the same (seed, index).
enum : std::uint32_t { tag_padic = 1, tag_arch = 2, tag_fz = 3 };

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index, std::uint32_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t(index) >> 32), tag};
    return std::mt19937_64(seq);
}

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational small_rational(std::mt19937_64& rng, bool nonzero) {
    long num = 0;
    do num = uniform(rng, -9, 9);
    while (nonzero && num == 0);
    return make_rational(num, uniform(rng, 1, 6));
}

Word random_word(std::mt19937_64& rng, unsigned s, unsigned max_len) {
    Word w(static_cast<std::size_t>(uniform(rng, 1, max_len)));
    for (auto& x : w) x = static_cast<unsigned>(uniform(rng, 1, s));
    return w;
}

// s generators of the given degree range; distinct by construction retry.
template <class Coeff>
std::vector<CPoly> random_generators(std::mt19937_64& rng, int dmin, int dmax, Coeff&& coeff) {
    const auto s = static_cast<unsigned>(uniform(rng, 1, 3));
    for (;;) {
        std::vector<CPoly> gens;
        for (unsigned i = 0; i < s; ++i) {
            const auto d = static_cast<std::size_t>(uniform(rng, dmin, dmax));
            std::vector<CycloNum> c(d + 1);
            for (std::size_t j = 0; j < d; ++j) c[j] = uniform(rng, 0, 1) ? coeff(false) : CycloNum(0L);
            c[d] = coeff(true);
            gens.emplace_back(std::move(c));
        }
        bool distinct = true;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) distinct = distinct && !(gens[i] == gens[j]);
        if (distinct) return gens;
    }
}

long val(const Rational& q, const Integer& p) { return *padic_val(q, p); }

}  // namespace

PadicInstance make_padic_instance(std::uint64_t seed, std::size_t index) {
    auto rng = instance_rng(seed, index, tag_padic);
    static const long primes[] = {2, 3, 5, 7};
    PadicInstance in;
    in.p = primes[uniform(rng, 0, 3)];
    in.generators = random_generators(rng, 2, 4, [&](bool nz) { return CycloNum(small_rational(rng, nz)); });
    // v(a) < min{0, -v(a_d), v(a_j) - v(a_d)}
    long t = 0;
    for (const auto& g : in.generators) {
        const long vd = val(g.leading().rational_value(), in.p);
        t = std::min(t, -vd);
        for (int j = 0; j < g.degree(); ++j) {
            const auto& c = g[static_cast<std::size_t>(j)];
            if (!c.is_zero()) t = std::min(t, val(c.rational_value(), in.p) - vd);
        }
    }
    const long va = t - 1 - uniform(rng, 0, 2);
    long u1 = 0, u2 = 0;
    do u1 = uniform(rng, 1, 20);
    while (u1 % in.p.get_si() == 0);
    do u2 = uniform(rng, 1, 20);
    while (u2 % in.p.get_si() == 0);
    Rational a = make_rational(uniform(rng, 0, 1) ? u1 : -u1, u2);
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), in.p.get_mpz_t(), static_cast<unsigned long>(-va));
    in.a = a / Rational(pk);
    in.word = random_word(rng, static_cast<unsigned>(in.generators.size()), 6);
    return in;
}

ArchInstance make_arch_instance(std::uint64_t seed, std::size_t index) {
    auto rng = instance_rng(seed, index, tag_arch);
    static const unsigned conductors[] = {3, 4, 5, 8};
    const bool cyclo_coeffs = uniform(rng, 0, 2) == 0;
    const unsigned m = conductors[uniform(rng, 0, 3)];
    auto coeff = [&](bool nz) {
        for (;;) {
            CycloNum c = small_rational(rng, nz);
            if (cyclo_coeffs && uniform(rng, 0, 1))
                c = c + CycloNum(small_rational(rng, true)) * CycloNum::zeta(m, uniform(rng, 1, m - 1));
            if (!nz || !c.is_zero()) return canonicalize_conductor(c);
        }
    };
    ArchInstance in;
    in.generators = random_generators(rng, 2, 3, coeff);
    const PolySystem sys(in.generators);
    // |sigma(a)| >= floor(L) + 1 > L for every embedding.
    const Rational L = bound_L(sys, 1, 64);
    CycloNum a = Rational(floor(L) + 2 + uniform(rng, 0, 3));
    if (uniform(rng, 0, 1)) a = a + CycloNum::zeta(conductors[uniform(rng, 0, 3)], uniform(rng, 0, 7));
    if (uniform(rng, 0, 1)) a = -a;
    in.a = canonicalize_conductor(a);
    const unsigned N = std::lcm(sys.conductor(), in.a.conductor());
    const auto units = units_mod(N);
    in.embedding = units[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(units.size()) - 1))];
    if (in.embedding == 0) in.embedding = 1;
    in.word = random_word(rng, sys.size(), 6);
    return in;
}

GrowthSuite run_growth_suite(std::uint64_t seed, std::size_t padic_count, std::size_t arch_count, unsigned threads) {
    GrowthSuite s;
    s.padic.resize(padic_count);
    s.arch.resize(arch_count);
    parallel_for(padic_count + arch_count, threads, [&](std::size_t i) {
        if (i < padic_count) {
            auto& in = s.padic[i];
            in = make_padic_instance(seed, i);
            try {
                in.report = growth_check_padic(PolySystem(in.generators), in.a, in.p, in.word);
            } catch (const Error& e) {
                in.error = e.what();
            }
        } else {
            auto& in = s.arch[i - padic_count];
            in = make_arch_instance(seed, i - padic_count);
            try {
                in.report = growth_check_arch(PolySystem(in.generators), in.a, in.word, in.embedding);
            } catch (const Error& e) {
                in.error = e.what();
            }
        }
    });
    for (const auto& in : s.padic)
        if (!in.report || !in.report->increasing || !in.report->recurrence_holds) ++s.padic_violations;
    for (const auto& in : s.arch)
        if (!in.report || !in.report->increasing) ++s.arch_violations;
    return s;
}

json to_json(const GrowthSuite& s) {
    json padic = json::array();
    for (const auto& in : s.padic) {
        json j = {{"system", json::array()}, {"a", to_json(in.a)}, {"p", in.p.get_str()}, {"word", to_json(in.word)}};
        for (const auto& g : in.generators) j["system"].push_back(to_json(g));
        if (in.report) {
            j["valuations"] = in.report->valuations;
            j["increasing"] = in.report->increasing;
            j["recurrence_holds"] = in.report->recurrence_holds;
        } else {
            j["error"] = in.error;
        }
        padic.push_back(std::move(j));
    }
    json arch = json::array();
    for (const auto& in : s.arch) {
        json j = {{"system", json::array()}, {"a", to_json(in.a)}, {"embedding", in.embedding}, {"word", to_json(in.word)}};
        for (const auto& g : in.generators) j["system"].push_back(to_json(g));
        if (in.report) {
            j["threshold_upper"] = to_json(in.report->threshold_upper);
            j["increasing"] = in.report->increasing;
            j["exact"] = in.report->exact;
        } else {
            j["error"] = in.error;
        }
        arch.push_back(std::move(j));
    }
    return {{"padic", {{"instances", std::move(padic)}, {"count", s.padic.size()}, {"violations", s.padic_violations}}},
            {"arch", {{"instances", std::move(arch)}, {"count", s.arch.size()}, {"violations", s.arch_violations}}}};
}

FZInstance make_fz_instance(std::uint64_t seed, std::size_t index) {
    auto rng = instance_rng(seed, index, tag_fz);
    FZInstance in;
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 10));
    std::vector<CycloNum> g(d + 1);
    for (std::size_t j = 0; j < d; ++j) g[j] = CycloNum(uniform(rng, -5, 5));
    long lead = 0;
    do lead = uniform(rng, -5, 5);
    while (lead == 0);
    g[d] = CycloNum(lead);
    in.g = CPoly(std::move(g));
    for (;;) {
        const auto terms = static_cast<std::size_t>(uniform(rng, 1, 5));
        std::map<long, CycloNum> q;
        while (q.size() < terms) {
            long c = 0;
            do c = uniform(rng, -5, 5);
            while (c == 0);
            q.emplace(uniform(rng, -6, 6), CycloNum(c));
        }
        in.q = LaurentPoly(q);
        if (!is_trinomial_symmetric(in.q)) break;
    }
    return in;
}

FZSuite run_fz_suite(std::uint64_t seed, std::size_t count, unsigned threads) {
    FZSuite s;
    s.instances.resize(count);
    parallel_for(count, threads, [&](std::size_t i) {
        auto& in = s.instances[i];
        in = make_fz_instance(seed, i);
        try {
            in.report = fz_bound_check(in.g, in.q);
        } catch (const Error& e) {
            in.error = e.what();
        }
    });
    for (const auto& in : s.instances)
        if (!in.report || !in.report->pass) ++s.violations;
    return s;
}

json to_json(const FZSuite& s) {
    json inst = json::array();
    for (const auto& in : s.instances) {
        json j = {{"g", to_json(in.g)}, {"q", to_json(in.q)}};
        if (in.report) {
            j["ell"] = in.report->ell;
            j["deg_g"] = in.report->deg_g;
            j["bound"] = in.report->bound;
            j["pass"] = in.report->pass;
        } else {
            j["error"] = in.error;
        }
        inst.push_back(std::move(j));
    }
    return {{"instances", std::move(inst)}, {"count", s.instances.size()}, {"violations", s.violations}};
}

}  // namespace cyclodyn::cli
