#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclodyn/embedding.hpp"
#include "cyclodyn/roots.hpp"
#include "cyclodyn/system.hpp"

namespace cyclodyn {

// f_{i_k} o ... o f_{i_1}; the empty word gives X.
CPoly compose_word(const PolySystem& sys, const Word& w);

// f_w(a) by successive evaluation.
CycloNum evaluate_word(const PolySystem& sys, const Word& w, const CycloNum& a);

// ---------------------------------------------------------------- orbit trees

struct OrbitTree {
    CycloNum root;
    // levels[k] maps each distinct canonical value of F_k(root) to all words
    // of length k producing it, in lexicographic order.
    std::vector<std::map<CycloNum, std::vector<Word>, CanonicalLess>> levels;

    unsigned depth() const { return static_cast<unsigned>(levels.size()) - 1; }
};

struct TreeOptions {
    // Total recorded words over all levels.
    std::size_t max_words = std::size_t(1) << 20;
    unsigned threads = 1;
};

// Throws TreeBudgetExceeded once the word count passes opts.max_words.
OrbitTree build_tree(const PolySystem& sys, const CycloNum& a, unsigned depth, const TreeOptions& opts = {});

// ---------------------------------------------------------- preperiodicity

enum class CollisionKind { pi, pibar };

struct CollisionCertificate {
    CollisionKind kind = CollisionKind::pi;
    // pi: f_{base . loop}(a) = f_base(a)
    Word base_word;
    Word loop_word;
    // pibar: f_{word_k}(a) = f_{word_n}(a), |word_k| = k < n = |word_n|
    unsigned level_k = 0;
    unsigned level_n = 0;
    Word word_k;
    Word word_n;
    CycloNum witness_value;
};

// Re-evaluates the recorded identity exactly.
bool verify_certificate(const PolySystem& sys, const CycloNum& a, const CollisionCertificate& c);

// Smallest |u| <= base_depth, then smallest 1 <= |v| <= loop_depth, then
// lexicographic (u, v) with f_{u.v}(a) = f_u(a).
std::optional<CollisionCertificate> detect_pi(const PolySystem& sys, const CycloNum& a, unsigned base_depth,
                                              unsigned loop_depth);

// Levels 1 <= k < n <= depth sharing a value, minimizing n then k. The
// witness is the least shared value, with the first word of each level.
std::optional<CollisionCertificate> detect_pibar(const PolySystem& sys, const CycloNum& a, unsigned depth,
                                                 const TreeOptions& opts = {});

// ------------------------------------------------------------------- Sigma_A

struct SigmaCandidate {
    CPoly defining_poly;
    Word word;
    // gamma_w for each word of length < n, ordered by (length, lex).
    std::vector<std::pair<Word, CycloNum>> combination;
    std::vector<ComplexBox> roots;
    bool roots_certified = false;
};

struct SigmaOptions {
    // Coefficient assignments examined before stopping.
    std::size_t max_assignments = 1000000;
    unsigned threads = 1;
    unsigned root_max_bits = 2048;
};

struct SigmaResult {
    std::vector<SigmaCandidate> candidates;
    // Assignments whose difference polynomial vanishes identically.
    std::vector<std::vector<std::pair<Word, CycloNum>>> degenerate;
    std::size_t assignments_examined = 0;
    bool cap_reached = false;
};

// All words of length < n ordered by (length, lex); this is the coefficient
// order used by sigma_members.
std::vector<Word> shorter_words(unsigned s, unsigned n);

// Enumerates gamma assignments from `pool` onto shorter_words(s, n) as an
// odometer whose first word is the most significant digit, pool order as
// given. Requires equal degrees d >= 3, |word| = n, and every pool element
// an algebraic integer of house at most A^(d^(n-1)).
SigmaResult sigma_members(const PolySystem& sys, const Rational& A, unsigned n, const std::vector<CycloNum>& pool,
                          const Word& word, const SigmaOptions& opts = {});

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

struct SigmaBoundsReport {
    Rational K;
    Integer D;
    Verdict house_check = Verdict::inconclusive;
    Rational max_root_modulus_upper;
    Verdict integrality_check = Verdict::inconclusive;
    std::string reason;
};

// House of every root (all conjugates, via the norm polynomial) against
// bound_K, and integrality of D * root via the monicized norm polynomial
// after X -> X / D, with D from bound_D_sigma.
SigmaBoundsReport verify_sigma_bounds(const SigmaCandidate& c, const PolySystem& sys, const Rational& A);

// -------------------------------------------------------------------- S_A

struct ScanHit {
    CycloNum alpha;
    unsigned level = 0;
    Word word;
    CycloNum value;
};

struct ScanOptions {
    TreeOptions tree;
    unsigned threads = 1;
    // Stop enumerating alphas after this many (0: no limit).
    std::size_t max_alphas = 0;
};

struct ScanResult {
    std::vector<ScanHit> hits;
    std::size_t alphas_examined = 0;
    std::vector<CycloNum> budget_exceeded;  // alphas skipped for TreeBudgetExceeded
    bool alpha_cap_reached = false;
};

// All alpha in Q(zeta_n), n = 1..conductor_max, whose coordinates are p/q
// with |p| <= h, 1 <= q <= h; distinct canonical alphas only, first
// occurrence kept. Records every orbit value at levels 1..depth that is an
// algebraic integer of house at most A, with its least word.
ScanResult scan_SA(const PolySystem& sys, const Rational& A, unsigned conductor_max, unsigned coord_height_max,
                   unsigned depth, const ScanOptions& opts = {});

// Distinct rationals p/q with |p| <= h, 1 <= q <= h, increasing.
std::vector<Rational> height_bounded_rationals(unsigned h);

// ------------------------------------------------------------------ growth

struct ArchGrowthReport {
    unsigned embedding = 1;
    // Certified moduli |sigma(f_prefix(a))| for prefixes of length 0..|w|.
    std::vector<std::pair<Rational, Rational>> moduli;
    Rational threshold_upper;
    bool increasing = false;
    bool exact = false;  // everything rational, decided without intervals
};

// Embedding sigma_k: zeta_N -> exp(2*pi*i*k/N) with N the lcm of the
// conductors of a and the coefficients, gcd(k, N) = 1. Throws
// HypothesisNotMet when |sigma(a)| above the growth threshold cannot be
// certified within max_bits.
ArchGrowthReport growth_check_arch(const PolySystem& sys, const CycloNum& a, const Word& w, unsigned k = 1,
                                   unsigned max_bits = 1024);

struct PadicGrowthReport {
    Integer p;
    // v_p(f_prefix(a)) for prefixes of length 0..|w|; |x|_p = p^(-v).
    std::vector<long> valuations;
    bool increasing = false;
    bool recurrence_holds = false;
};

// Exact check of |a|_p > max{1, |a_ij|_p / |a_id|_p, 1 / |a_id|_p} (throws
// HypothesisNotMet otherwise), then of strict growth of |f_prefix(a)|_p and
// of |f_i(b)|_p = |a_id|_p |b|_p^d at each step.
PadicGrowthReport growth_check_padic(const PolySystem& sys, const Rational& a, const Integer& p, const Word& w);

struct PrefixHouseReport {
    Rational L;
    std::vector<HouseInterval> prefix_houses;  // lengths 0..|w|-1
    bool pass = false;
};

// Requires house_leq(f_w(a), A) = yes.
PrefixHouseReport prefix_house_bound(const PolySystem& sys, const CycloNum& a, const Word& w, const Rational& A,
                                     unsigned precision_bits = 64);

struct PrefixIntegralityReport {
    Integer D;
    std::vector<bool> integral;  // D * f_prefix(a), lengths 0..|w|-1
    bool pass = false;
};

// Requires f_w(a) to be an algebraic integer.
PrefixIntegralityReport prefix_integrality(const PolySystem& sys, const CycloNum& a, const Word& w);

}  // namespace cyclodyn
