#include <algorithm>

#include "cyclodyn/bounds.hpp"
#include "cyclodyn/dynamics.hpp"
#include "cyclodyn/errors.hpp"
#include "cyclodyn/parallel.hpp"
#include "cyclodyn/parse.hpp"

namespace cyclodyn {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<Word> shorter_words(unsigned s, unsigned n) {
    std::vector<Word> out;
    for (unsigned len = 0; len < n; ++len) {
        auto ws = words_of_length(s, len);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

SigmaResult sigma_members(const PolySystem& sys, const Rational& A, unsigned n, const std::vector<CycloNum>& pool,
                          const Word& word, const SigmaOptions& opts) {
    const auto d = sys.common_degree();
    if (!d || *d < 3) throw PreconditionViolated("Sigma_A needs generators of one common degree d >= 3");
    if (n < 1 || word.size() != n) throw PreconditionViolated("the target word must have length n >= 1");
    for (unsigned i : word)
        if (i < 1 || i > sys.size()) throw PreconditionViolated("word letter out of range");
    Integer dn = 1;
    for (unsigned t = 1; t < n; ++t) dn *= *d;
    if (!dn.fits_slong_p()) throw PreconditionViolated("A^(d^(n-1)) is too large");
    const Rational coeff_house = pow(A, dn.get_si());
    for (const auto& g : pool) {
        if (!is_algebraic_integer(canonicalize_conductor(g)))
            throw PreconditionViolated("pool element " + to_string(g) + " is not an algebraic integer");
        if (house_leq(g, coeff_house) != Tri::yes)
            throw PreconditionViolated("pool element " + to_string(g) + " exceeds the house bound A^(d^(n-1))");
    }

    SigmaResult result;
    if (pool.empty()) return result;
    const std::vector<Word> shorter = shorter_words(sys.size(), n);
    std::vector<CPoly> parts;
    parts.reserve(shorter.size());
    for (const auto& w : shorter) parts.push_back(compose_word(sys, w));
    const CPoly target = compose_word(sys, word);

    // Total count of assignments, capped.
    std::size_t total = 1;
    bool capped = false;
    for (std::size_t i = 0; i < shorter.size(); ++i) {
        if (total > opts.max_assignments / pool.size() + 1) {
            capped = true;
            break;
        }
        total *= pool.size();
    }
    if (capped || total > opts.max_assignments) {
        total = opts.max_assignments;
        result.cap_reached = true;
    }

    auto digits_of = [&](std::size_t index) {
        std::vector<std::size_t> dg(shorter.size());
        for (std::size_t j = shorter.size(); j-- > 0;) {
            dg[j] = index % pool.size();
            index /= pool.size();
        }
        return dg;
    };

    struct Slot {
        std::optional<SigmaCandidate> cand;
        std::vector<std::pair<Word, CycloNum>> degenerate;
        bool is_degenerate = false;
    };
    std::vector<Slot> slots(total);
    parallel_for(total, opts.threads, [&](std::size_t idx) {
        const auto dg = digits_of(idx);
        CPoly diff = target;
        std::vector<std::pair<Word, CycloNum>> combo;
        for (std::size_t j = 0; j < shorter.size(); ++j) {
            const CycloNum& g = pool[dg[j]];
            combo.emplace_back(shorter[j], g);
            if (!g.is_zero()) diff -= g * parts[j];
        }
        if (diff.is_zero()) {
            slots[idx].is_degenerate = true;
            slots[idx].degenerate = std::move(combo);
            return;
        }
        SigmaCandidate c;
        std::vector<CycloNum> canon;
        for (const auto& x : diff.coeffs()) canon.push_back(canonicalize_conductor(x));
        c.defining_poly = CPoly(std::move(canon));
        c.word = word;
        c.combination = std::move(combo);
        RootIsolation iso = isolate_roots(c.defining_poly, 1, opts.root_max_bits);
        c.roots = std::move(iso.boxes);
        c.roots_certified = iso.certified;
        slots[idx].cand = std::move(c);
    });
    for (auto& s : slots) {
        if (s.is_degenerate)
            result.degenerate.push_back(std::move(s.degenerate));
        else
            result.candidates.push_back(std::move(*s.cand));
    }
    result.assignments_examined = total;
    return result;
}

SigmaBoundsReport verify_sigma_bounds(const SigmaCandidate& c, const PolySystem& sys, const Rational& A) {
    SigmaBoundsReport rep;
    rep.K = bound_K(sys, A);
    rep.D = bound_D_sigma(sys);
    const QPoly N = norm_polynomial(c.defining_poly);
    if (N.degree() < 1) {
        rep.house_check = Verdict::pass;
        rep.integrality_check = Verdict::pass;
        rep.reason = "defining polynomial has no roots";
        return rep;
    }

    // Every conjugate of every root is a root of the norm polynomial.
    RootIsolation iso = isolate_roots(to_cyclo(N));
    if (!iso.certified) {
        rep.house_check = Verdict::inconclusive;
        rep.reason = "root isolation did not certify up to " + std::to_string(iso.precision_bits) + " bits";
    } else {
        rep.max_root_modulus_upper = iso.max_modulus_upper;
        if (iso.max_modulus_upper <= rep.K) {
            rep.house_check = Verdict::pass;
        } else {
            bool beyond = false;
            for (const auto& b : iso.boxes) {
                // lower bound on |z| from the box
                Rational re = b.re_lo > 0 ? b.re_lo : (b.re_hi < 0 ? -b.re_hi : Rational(0));
                Rational im = b.im_lo > 0 ? b.im_lo : (b.im_hi < 0 ? -b.im_hi : Rational(0));
                if (re * re + im * im > rep.K * rep.K) beyond = true;
            }
            rep.house_check = beyond ? Verdict::fail : Verdict::inconclusive;
            if (!beyond) rep.reason = "root moduli straddle K";
        }
    }

    // D * root is integral for every root iff D^deg N(X / D) / lead has
    // integer coefficients.
    const int deg = N.degree();
    bool integral = true;
    Integer Dp = 1;
    for (int j = deg; j >= 0; --j) {
        Rational q = N.coeffs()[j] * Dp / N.leading();
        if (q.get_den() != 1) integral = false;
        Dp *= rep.D;
    }
    rep.integrality_check = integral ? Verdict::pass : Verdict::fail;
    return rep;
}

}  // namespace cyclodyn
