#include <cstdint>
#include <unordered_map>

#include "cyclodyn/bounds.hpp"
#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/errors.hpp"
#include "cyclodyn/parallel.hpp"

namespace cyclodyn {

namespace {

using Vec = std::vector<std::int64_t>;

struct VecHash {
    std::size_t operator()(const Vec& v) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }
};

struct Space {
    unsigned N = 1;
    unsigned phi = 1;
    std::vector<Vec> roots;                         // zeta_N^e
    std::unordered_map<Vec, unsigned, VecHash> index;  // vector -> e
};

Space make_space(unsigned N) {
    Space sp;
    const auto& f = detail::field(N);
    sp.N = N;
    sp.phi = f.phi;
    for (unsigned e = 0; e < N; ++e) {
        const auto* row = f.power(e);
        Vec v(row, row + f.phi);
        sp.index.emplace(v, e);
        sp.roots.push_back(std::move(v));
    }
    return sp;
}

// Lexicographically least nondecreasing tuple (first, e_2, ..., e_b) summing
// to target.
std::optional<std::vector<unsigned>> search_from(const Space& sp, const Vec& target, unsigned b, unsigned first) {
    std::vector<unsigned> tuple{first};
    Vec rest = target;
    for (unsigned i = 0; i < sp.phi; ++i) rest[i] -= sp.roots[first][i];
    std::optional<std::vector<unsigned>> found;
    auto dfs = [&](auto&& self, unsigned lo) -> bool {
        if (tuple.size() + 1 == b) {
            auto it = sp.index.find(rest);
            if (it == sp.index.end() || it->second < lo) return false;
            tuple.push_back(it->second);
            found = tuple;
            return true;
        }
        for (unsigned e = lo; e < sp.N; ++e) {
            for (unsigned i = 0; i < sp.phi; ++i) rest[i] -= sp.roots[e][i];
            tuple.push_back(e);
            if (self(self, e)) return true;
            tuple.pop_back();
            for (unsigned i = 0; i < sp.phi; ++i) rest[i] += sp.roots[e][i];
        }
        return false;
    };
    if (b == 1) {
        if (rest == Vec(sp.phi, 0)) return tuple;
        return std::nullopt;
    }
    dfs(dfs, first);
    return found;
}

}  // namespace

LoxtonSearch loxton_decompose(const CycloNum& a_in, unsigned max_b, unsigned order_bound, unsigned threads) {
    const CycloNum a = canonicalize_conductor(a_in);
    if (!is_algebraic_integer(a)) throw PreconditionViolated("Loxton decomposition needs an algebraic integer");
    if (order_bound == 0 || order_bound % a.conductor() != 0)
        throw PreconditionViolated("order bound must be a multiple of the conductor " +
                                   std::to_string(a.conductor()));
    LoxtonSearch out;
    auto certificate = [&](std::vector<unsigned> exps) {
        LoxtonCertificate c;
        c.target = a;
        c.order = order_bound;
        for (unsigned e : exps) c.terms.push_back(canonicalize_conductor(CycloNum::zeta(order_bound, e)));
        c.exponents = std::move(exps);
        return c;
    };
    if (a.is_zero()) {
        out.certificate = certificate({});
        return out;
    }
    out.exhausted_below = 1;

    const Space sp = make_space(order_bound);
    const CycloNum lifted = a.lift(order_bound);
    Vec target(sp.phi);
    for (unsigned i = 0; i < sp.phi; ++i) {
        const Integer& c = lifted.coords()[i].get_num();
        if (!c.fits_slong_p()) throw PreconditionViolated("coordinates too large for the Loxton search");
        target[i] = c.get_si();
    }

    for (unsigned b = 1; b <= max_b; ++b) {
        std::vector<std::optional<std::vector<unsigned>>> per_first(sp.N);
        parallel_for(sp.N, threads, [&](std::size_t first) {
            per_first[first] = search_from(sp, target, b, static_cast<unsigned>(first));
        });
        for (auto& r : per_first)
            if (r) {
                out.certificate = certificate(std::move(*r));
                return out;
            }
        out.exhausted_below = b + 1;
    }
    return out;
}

bool verify_loxton_certificate(const LoxtonCertificate& c) {
    if (c.order == 0) return false;
    CycloNum sum(0L);
    for (unsigned e : c.exponents) sum += CycloNum::zeta(c.order, e);
    if (!(sum == c.target)) return false;
    if (c.terms.size() != c.exponents.size()) return false;
    for (std::size_t i = 0; i < c.terms.size(); ++i)
        if (!(c.terms[i] == CycloNum::zeta(c.order, c.exponents[i]))) return false;
    return true;
}

LoxtonBoundReport verify_loxton_bound(const CycloNum& a, const LoxtonParams& params, unsigned max_b,
                                      unsigned order_bound, unsigned threads) {
    LoxtonSearch s = loxton_decompose(a, max_b, order_bound, threads);
    if (!s.certificate) throw PreconditionViolated("no decomposition found within the search bounds");
    LoxtonBoundReport rep;
    rep.certificate = std::move(*s.certificate);
    rep.house = house(a, 64);
    if (rep.house.hi > 0) {
        rep.bound = loxton_LK(rep.house.hi, params);
        rep.pass = Rational(rep.certificate.b()) <= rep.bound.value;
    } else {
        rep.bound = {Rational(0), true};
        rep.pass = rep.certificate.b() == 0;
    }
    return rep;
}

}  // namespace cyclodyn
