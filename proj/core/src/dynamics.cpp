#include "cyclodyn/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/errors.hpp"
#include "cyclodyn/parallel.hpp"

namespace cyclodyn {

std::string to_string(const Word& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

std::vector<Word> words_of_length(unsigned s, unsigned len) {
    std::vector<Word> out{Word{}};
    for (unsigned l = 0; l < len; ++l) {
        std::vector<Word> next;
        next.reserve(out.size() * s);
        for (const auto& w : out)
            for (unsigned i = 1; i <= s; ++i) {
                Word x = w;
                x.push_back(i);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

PolySystem::PolySystem(std::vector<CPoly> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw PreconditionViolated("a system needs at least one generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree() < 2)
            throw PreconditionViolated("generator " + std::to_string(i + 1) + " has degree below 2");
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[i] == gens_[j])
                throw PreconditionViolated("generators " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                           " coincide");
    }
}

std::optional<int> PolySystem::common_degree() const {
    const int d = gens_.front().degree();
    for (const auto& g : gens_)
        if (g.degree() != d) return std::nullopt;
    return d;
}

bool PolySystem::rational_coefficients() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const CPoly& g) { return has_rational_coeffs(g); });
}

unsigned PolySystem::conductor() const {
    unsigned n = 1;
    for (const auto& g : gens_)
        for (const auto& c : g.coeffs()) n = lcm(n, canonicalize_conductor(c).conductor());
    return n;
}

CPoly compose_word(const PolySystem& sys, const Word& w) {
    CPoly acc = CPoly::x();
    for (unsigned i : w) acc = sys.gen(i).compose(acc);
    return acc;
}

CycloNum evaluate_word(const PolySystem& sys, const Word& w, const CycloNum& a) {
    CycloNum v = a;
    for (unsigned i : w) v = sys.gen(i)(v);
    return canonicalize_conductor(v);
}

OrbitTree build_tree(const PolySystem& sys, const CycloNum& a, unsigned depth, const TreeOptions& opts) {
    const unsigned s = sys.size();
    OrbitTree tree;
    tree.root = canonicalize_conductor(a);
    tree.levels.resize(1);
    tree.levels[0][tree.root] = {Word{}};
    std::size_t total = 1;
    std::size_t level_words = 1;
    for (unsigned k = 1; k <= depth; ++k) {
        if (total + level_words * s > opts.max_words)
            throw TreeBudgetExceeded("orbit tree would exceed " + std::to_string(opts.max_words) + " words at level " +
                                     std::to_string(k));
        const auto& prev = tree.levels[k - 1];
        std::vector<const std::pair<const CycloNum, std::vector<Word>>*> parents;
        parents.reserve(prev.size());
        for (const auto& entry : prev) parents.push_back(&entry);

        std::vector<std::vector<CycloNum>> children(parents.size());
        parallel_for(parents.size(), opts.threads, [&](std::size_t p) {
            children[p].reserve(s);
            for (unsigned i = 1; i <= s; ++i)
                children[p].push_back(canonicalize_conductor(sys.gen(i)(parents[p]->first)));
        });

        std::map<CycloNum, std::vector<Word>, CanonicalLess> level;
        for (std::size_t p = 0; p < parents.size(); ++p)
            for (unsigned i = 1; i <= s; ++i) {
                auto& slot = level[children[p][i - 1]];
                for (const auto& w : parents[p]->second) {
                    Word x = w;
                    x.push_back(i);
                    slot.push_back(std::move(x));
                }
            }
        for (auto& [value, words] : level) std::sort(words.begin(), words.end());
        level_words *= s;
        total += level_words;
        tree.levels.push_back(std::move(level));
    }
    return tree;
}

bool verify_certificate(const PolySystem& sys, const CycloNum& a, const CollisionCertificate& c) {
    auto valid = [&](const Word& w) {
        return std::all_of(w.begin(), w.end(), [&](unsigned i) { return i >= 1 && i <= sys.size(); });
    };
    if (c.kind == CollisionKind::pi) {
        if (c.loop_word.empty() || !valid(c.base_word) || !valid(c.loop_word)) return false;
        const CycloNum b = evaluate_word(sys, c.base_word, a);
        Word full = c.base_word;
        full.insert(full.end(), c.loop_word.begin(), c.loop_word.end());
        return evaluate_word(sys, full, a) == b && b == c.witness_value;
    }
    if (c.level_k < 1 || c.level_k >= c.level_n) return false;
    if (c.word_k.size() != c.level_k || c.word_n.size() != c.level_n) return false;
    if (!valid(c.word_k) || !valid(c.word_n)) return false;
    const CycloNum x = evaluate_word(sys, c.word_k, a);
    return x == evaluate_word(sys, c.word_n, a) && x == c.witness_value;
}

namespace {

// First loop v (lex) of length len with f_v(b) = b, by depth-first search.
std::optional<Word> find_loop(const PolySystem& sys, const CycloNum& b, unsigned len) {
    Word v;
    std::vector<CycloNum> stack{b};
    const unsigned s = sys.size();
    std::optional<Word> found;
    auto dfs = [&](auto&& self) -> bool {
        if (v.size() == len) return stack.back() == b;
        for (unsigned i = 1; i <= s; ++i) {
            v.push_back(i);
            stack.push_back(canonicalize_conductor(sys.gen(i)(stack.back())));
            if (self(self)) return true;
            v.pop_back();
            stack.pop_back();
        }
        return false;
    };
    if (dfs(dfs)) found = v;
    return found;
}

}  // namespace

std::optional<CollisionCertificate> detect_pi(const PolySystem& sys, const CycloNum& a, unsigned base_depth,
                                              unsigned loop_depth) {
    const unsigned s = sys.size();
    std::map<CycloNum, std::map<unsigned, std::optional<Word>>, CanonicalLess> memo;
    // Words of the current base length with their values, in lex order.
    std::vector<std::pair<Word, CycloNum>> level{{Word{}, canonicalize_conductor(a)}};
    for (unsigned lu = 0; lu <= base_depth; ++lu) {
        if (lu > 0) {
            std::vector<std::pair<Word, CycloNum>> next;
            next.reserve(level.size() * s);
            for (const auto& [w, val] : level)
                for (unsigned i = 1; i <= s; ++i) {
                    Word x = w;
                    x.push_back(i);
                    next.emplace_back(std::move(x), canonicalize_conductor(sys.gen(i)(val)));
                }
            level = std::move(next);
        }
        for (unsigned lv = 1; lv <= loop_depth; ++lv) {
            for (const auto& [u, b] : level) {
                auto& slot = memo[b];
                auto it = slot.find(lv);
                if (it == slot.end()) it = slot.emplace(lv, find_loop(sys, b, lv)).first;
                if (it->second) {
                    CollisionCertificate c;
                    c.kind = CollisionKind::pi;
                    c.base_word = u;
                    c.loop_word = *it->second;
                    c.witness_value = b;
                    return c;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<CollisionCertificate> detect_pibar(const PolySystem& sys, const CycloNum& a, unsigned depth,
                                                 const TreeOptions& opts) {
    if (depth < 2) throw PreconditionViolated("detect_pibar needs depth >= 2");
    const OrbitTree tree = build_tree(sys, a, depth, opts);
    for (unsigned n = 2; n <= depth; ++n)
        for (unsigned k = 1; k < n; ++k)
            for (const auto& [value, words] : tree.levels[k]) {
                auto hit = tree.levels[n].find(value);
                if (hit == tree.levels[n].end()) continue;
                CollisionCertificate c;
                c.kind = CollisionKind::pibar;
                c.level_k = k;
                c.level_n = n;
                c.word_k = words.front();
                c.word_n = hit->second.front();
                c.witness_value = value;
                return c;
            }
    return std::nullopt;
}

std::vector<Rational> height_bounded_rationals(unsigned h) {
    std::set<Rational> values;
    for (long q = 1; q <= static_cast<long>(h); ++q)
        for (long p = -static_cast<long>(h); p <= static_cast<long>(h); ++p) values.insert(make_rational(p, q));
    return {values.begin(), values.end()};
}

ScanResult scan_SA(const PolySystem& sys, const Rational& A, unsigned conductor_max, unsigned coord_height_max,
                   unsigned depth, const ScanOptions& opts) {
    ScanResult result;
    const std::vector<Rational> values = height_bounded_rationals(coord_height_max);
    std::vector<CycloNum> alphas;
    std::set<CycloNum, CanonicalLess> seen;
    bool stop = false;
    for (unsigned n = 1; n <= conductor_max && !stop && !values.empty(); ++n) {
        const unsigned phi = euler_phi(n);
        std::vector<std::size_t> digit(phi, 0);
        for (;;) {
            std::vector<Rational> coords(phi);
            for (unsigned j = 0; j < phi; ++j) coords[j] = values[digit[j]];
            CycloNum alpha = canonicalize_conductor(CycloNum::from_coords(n, std::move(coords)));
            if (seen.insert(alpha).second) {
                if (opts.max_alphas && alphas.size() == opts.max_alphas) {
                    result.alpha_cap_reached = true;
                    stop = true;
                    break;
                }
                alphas.push_back(std::move(alpha));
            }
            // odometer, first coordinate most significant
            unsigned j = phi;
            while (j > 0) {
                --j;
                if (++digit[j] < values.size()) break;
                digit[j] = 0;
                if (j == 0) {
                    j = phi + 1;
                    break;
                }
            }
            if (j == phi + 1) break;
        }
    }
    result.alphas_examined = alphas.size();

    struct Slot {
        std::vector<ScanHit> hits;
        bool over_budget = false;
    };
    std::vector<Slot> slots(alphas.size());
    TreeOptions tree_opts = opts.tree;
    tree_opts.threads = 1;
    parallel_for(alphas.size(), opts.threads, [&](std::size_t idx) {
        const CycloNum& alpha = alphas[idx];
        OrbitTree tree;
        try {
            tree = build_tree(sys, alpha, depth, tree_opts);
        } catch (const TreeBudgetExceeded&) {
            slots[idx].over_budget = true;
            return;
        }
        for (unsigned k = 1; k <= tree.depth(); ++k)
            for (const auto& [value, words] : tree.levels[k])
                if (is_algebraic_integer(value) && house_leq(value, A) == Tri::yes)
                    slots[idx].hits.push_back({alpha, k, words.front(), value});
    });
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].over_budget) result.budget_exceeded.push_back(alphas[i]);
        for (auto& h : slots[i].hits) result.hits.push_back(std::move(h));
    }
    return result;
}

}  // namespace cyclodyn
