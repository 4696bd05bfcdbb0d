#include "cyclodyn/laurent.hpp"

#include "cyclodyn/errors.hpp"

namespace cyclodyn {

LaurentPoly::LaurentPoly(const std::map<long, CycloNum>& terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::from_poly(const CPoly& p) {
    LaurentPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_term(static_cast<long>(i), p.coeffs()[i]);
    return out;
}

LaurentPoly LaurentPoly::monomial(const CycloNum& c, long e) {
    LaurentPoly out;
    out.add_term(e, c);
    return out;
}

CycloNum LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloNum(0L) : it->second;
}

std::size_t LaurentPoly::nonconstant_terms() const { return terms_.size() - terms_.count(0); }

void LaurentPoly::add_term(long e, const CycloNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, canonicalize_conductor(c));
        return;
    }
    CycloNum sum = canonicalize_conductor(it->second + c);
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = std::move(sum);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
}

LaurentPoly laurent_compose(const CPoly& g, const LaurentPoly& q) {
    LaurentPoly acc;
    for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = acc * q + LaurentPoly::monomial(g.coeffs()[i], 0);
    return acc;
}

std::optional<TrinomialForm> is_trinomial_symmetric(const LaurentPoly& q) {
    long n = 0;
    for (const auto& [e, c] : q.terms()) {
        if (e == 0) continue;
        const long m = e < 0 ? -e : e;
        if (n == 0)
            n = m;
        else if (m != n)
            return std::nullopt;
    }
    if (n == 0) n = 1;
    return TrinomialForm{q.coeff(n), q.coeff(-n), q.coeff(0), n};
}

FZReport fz_bound_check(const CPoly& g, const LaurentPoly& q) {
    if (g.degree() < 1) throw PreconditionViolated("g must be nonconstant");
    if (is_trinomial_symmetric(q)) throw HypothesisNotMet("q has the form a X^n + b X^-n + c");
    const LaurentPoly h = laurent_compose(g, q);
    FZReport rep;
    rep.ell = h.nonconstant_terms();
    rep.deg_g = g.degree();
    const long ell = static_cast<long>(rep.ell);
    rep.bound = 2 * (2 * ell - 1) * (ell - 1);
    rep.pass = rep.deg_g <= rep.bound;
    return rep;
}

}  // namespace cyclodyn
