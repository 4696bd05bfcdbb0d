#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cyclodyn/cyclodyn.hpp"
#include "oracles.hpp"

using namespace cyclodyn;

namespace {

CycloNum z(unsigned n, long k = 1) { return CycloNum::zeta(n, k); }

CPoly P(std::initializer_list<CycloNum> c) { return CPoly(std::vector<CycloNum>(c)); }

CPoly Pq(const std::vector<Rational>& c) {
    std::vector<CycloNum> v;
    for (const auto& x : c) v.emplace_back(x);
    return CPoly(v);
}

oracle::QVec to_q(const CPoly& p) {
    oracle::QVec v;
    for (const auto& c : p.coeffs()) v.push_back(c.rational_value());
    return v;
}

PolySystem sys(std::initializer_list<CPoly> g) { return PolySystem(std::vector<CPoly>(g)); }

const CPoly X2 = P({0, 0, 1});
const CPoly X2m1 = P({-1, 0, 1});
const CPoly X2p1 = P({1, 0, 1});
const CPoly TwoX2m1 = P({-1, 0, 2});

Word random_word(std::mt19937_64& rng, unsigned s, unsigned max_len) {
    std::uniform_int_distribution<unsigned> len(0, max_len), letter(1, s);
    Word w(len(rng));
    for (auto& x : w) x = letter(rng);
    return w;
}

}  // namespace

// -------------------------------------------------------------- PolySystem

TEST(PolySystem, Validation) {
    EXPECT_THROW(PolySystem(std::vector<CPoly>{}), PreconditionViolated);
    EXPECT_THROW(sys({P({1, 1})}), PreconditionViolated);
    EXPECT_THROW(sys({X2, X2}), PreconditionViolated);
    EXPECT_EQ(sys({X2, P({0, 0, 0, 1})}).common_degree(), std::nullopt);
}

// ----------------------------------------------------------------- words

TEST(Words, ComposeSpecExamples) {
    EXPECT_EQ(compose_word(sys({X2m1}), {1, 1}), P({0, 0, -2, 0, 1}));
    EXPECT_EQ(compose_word(sys({X2m1}), {}), CPoly::x());
    const auto s = sys({X2, P({0, 0, 0, 1})});
    EXPECT_EQ(compose_word(s, {1, 2}), CPoly::monomial(CycloNum(1L), 6));
}

TEST(Words, EvaluateSpecExamples) {
    EXPECT_EQ(evaluate_word(sys({X2m1}), {1, 1}, 0), CycloNum(0L));
    EXPECT_EQ(evaluate_word(sys({X2m1}), {}, z(7)), z(7));
    EXPECT_EQ(evaluate_word(sys({X2, TwoX2m1}), {2}, z(3)), CycloNum(2L) * z(3, 2) - CycloNum(1L));
}

TEST(Words, OrderConvention) {
    // (1, 2) applies f_1 first.
    const auto s = sys({X2p1, P({0, 2, 0, 1})});
    EXPECT_EQ(evaluate_word(s, {1, 2}, 1), CycloNum(2L * 2 + 8));
    EXPECT_EQ(evaluate_word(s, {2, 1}, 1), CycloNum(10L));
}

TEST(Words, ConcatenationAndExpansionAgree) {
    std::mt19937_64 rng(21);
    const auto s = sys({X2p1, P({z(3), 0, 1}), P({0, 1, 0, z(4)})});
    for (int t = 0; t < 60; ++t) {
        const Word u = random_word(rng, 3, 3), v = random_word(rng, 3, 3);
        const CycloNum a = CycloNum(make_rational(static_cast<long>(rng() % 7) - 3, 2)) + z(5, static_cast<long>(rng() % 5));
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        EXPECT_EQ(evaluate_word(s, uv, a), evaluate_word(s, v, evaluate_word(s, u, a)));
        if (u.size() <= 4) EXPECT_EQ(compose_word(s, u)(a), evaluate_word(s, u, a));
    }
}

TEST(Words, ExpansionMatchesNaiveOracle) {
    std::mt19937_64 rng(22);
    const auto g1 = Pq({Rational(1, 2), 0, 3}), g2 = Pq({-1, 2, 0, Rational(1, 3)});
    const auto s = sys({g1, g2});
    for (int t = 0; t < 20; ++t) {
        const Word w = random_word(rng, 2, 3);
        oracle::QVec ref{0, 1};
        for (unsigned i : w) ref = oracle::compose(to_q(s.gen(i)), ref);
        EXPECT_EQ(to_q(compose_word(s, w)), ref);
    }
}

// ------------------------------------------------------------ orbit trees

TEST(OrbitTree, SpecExamples) {
    const OrbitTree t = build_tree(sys({X2}), z(3), 3);
    ASSERT_EQ(t.levels.size(), 4u);
    const CycloNum expect[] = {z(3), z(3, 2), z(3), z(3, 2)};
    for (unsigned k = 0; k <= 3; ++k) {
        ASSERT_EQ(t.levels[k].size(), 1u);
        EXPECT_EQ(t.levels[k].begin()->first, expect[k]);
    }
    const OrbitTree u = build_tree(sys({X2, X2m1}), 1, 1);
    std::set<std::string> values;
    for (const auto& [v, w] : u.levels[1]) values.insert(to_string(v));
    EXPECT_EQ(values, (std::set<std::string>{"0", "1"}));
}

TEST(OrbitTree, LevelInvariants) {
    const auto s = sys({X2m1, P({0, 1, 1}), P({z(4), 0, 1})});
    const OrbitTree t = build_tree(s, z(3), 4, {1u << 16, 3});
    std::size_t power = 1;
    for (unsigned k = 0; k <= 4; ++k, power *= 3) {
        std::size_t words = 0;
        for (const auto& [v, ws] : t.levels[k]) {
            words += ws.size();
            for (const auto& w : ws) {
                EXPECT_EQ(w.size(), k);
                EXPECT_EQ(evaluate_word(s, w, z(3)), v);
            }
        }
        EXPECT_EQ(words, power);
        EXPECT_LE(t.levels[k].size(), power);
    }
}

TEST(OrbitTree, SingleGeneratorIsClassicalIteration) {
    const auto s = sys({X2p1});
    const OrbitTree t = build_tree(s, 0, 5);
    CycloNum v = 0;
    for (unsigned k = 0; k <= 5; ++k) {
        ASSERT_EQ(t.levels[k].size(), 1u);
        EXPECT_EQ(t.levels[k].begin()->first, v);
        v = v * v + CycloNum(1L);
    }
}

TEST(OrbitTree, ThreadCountDoesNotChangeResult) {
    const auto s = sys({X2m1, P({z(3), 0, 1})});
    const OrbitTree a = build_tree(s, z(5), 6, {1u << 16, 1});
    const OrbitTree b = build_tree(s, z(5), 6, {1u << 16, 4});
    ASSERT_EQ(a.levels.size(), b.levels.size());
    for (std::size_t k = 0; k < a.levels.size(); ++k) {
        ASSERT_EQ(a.levels[k].size(), b.levels[k].size());
        auto i = a.levels[k].begin();
        auto j = b.levels[k].begin();
        for (; i != a.levels[k].end(); ++i, ++j) {
            EXPECT_EQ(i->first, j->first);
            EXPECT_EQ(i->second, j->second);
        }
    }
}

TEST(OrbitTree, BudgetExceeded) {
    EXPECT_THROW(build_tree(sys({X2m1, X2p1}), z(7), 10, {100, 1}), TreeBudgetExceeded);
}

// -------------------------------------------------------- preperiodicity

TEST(Preperiodic, PiSpecExamples) {
    const auto c = detect_pi(sys({X2m1}), 0, 3, 3);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->base_word, Word{});
    EXPECT_EQ(c->loop_word, (Word{1, 1}));
    EXPECT_TRUE(verify_certificate(sys({X2m1}), 0, *c));

    const auto c5 = detect_pi(sys({X2}), z(5), 2, 6);
    ASSERT_TRUE(c5.has_value());
    EXPECT_EQ(c5->base_word, Word{});
    EXPECT_EQ(c5->loop_word.size(), 4u);

    EXPECT_FALSE(detect_pi(sys({X2p1}), 0, 4, 4).has_value());
}

TEST(Preperiodic, PibarSpecExamples) {
    const auto s = sys({X2, TwoX2m1});
    const auto c = detect_pibar(s, 1, 3);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->level_k, 1u);
    EXPECT_EQ(c->level_n, 2u);
    EXPECT_EQ(c->witness_value, CycloNum(1L));
    EXPECT_TRUE(verify_certificate(s, 1, *c));

    EXPECT_FALSE(detect_pibar(sys({X2p1}), z(4), 3).has_value());
}

TEST(Preperiodic, PiImpliesPibar) {
    const auto s = sys({X2m1, X2});
    for (const CycloNum& a : {CycloNum(0L), CycloNum(-1L), z(3), z(5), z(7)}) {
        const auto pi = detect_pi(s, a, 2, 4);
        if (!pi) continue;
        const auto pibar = detect_pibar(s, a, 8);
        ASSERT_TRUE(pibar.has_value()) << to_string(a);
        EXPECT_TRUE(verify_certificate(s, a, *pibar));
    }
}

TEST(Preperiodic, RootsOfUnityUnderSquaring) {
    for (unsigned n = 1; n <= 30; ++n) {
        const auto c = detect_pi(sys({X2}), z(n), 6, 30);
        ASSERT_TRUE(c.has_value()) << n;
        EXPECT_TRUE(verify_certificate(sys({X2}), z(n), *c));
    }
}

TEST(Preperiodic, TamperedCertificateFails) {
    auto c = *detect_pi(sys({X2m1}), 0, 3, 3);
    c.loop_word = {1};
    EXPECT_FALSE(verify_certificate(sys({X2m1}), 0, c));
}

// ----------------------------------------------------------------- Sigma

TEST(Sigma, SpecExamples) {
    const auto s = sys({P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
    const std::vector<CycloNum> pool{0, 1, -1};
    const SigmaResult r = sigma_members(s, 1, 1, pool, {1});
    ASSERT_EQ(r.candidates.size(), 3u);
    // gamma_() = 1 -> X^3 - X with roots 0, 1, -1.
    const auto& c = r.candidates[1];
    EXPECT_EQ(c.combination.front().second, CycloNum(1L));
    EXPECT_EQ(c.defining_poly, P({0, -1, 0, 1}));
    EXPECT_TRUE(c.roots_certified);
    EXPECT_EQ(c.roots.size(), 3u);
    // All gamma zero -> f_word itself.
    EXPECT_EQ(r.candidates[0].defining_poly, P({0, 0, 0, 1}));

    const SigmaResult r2 = sigma_members(s, 1, 1, {0}, {2});
    ASSERT_EQ(r2.candidates.size(), 1u);
    EXPECT_EQ(r2.candidates[0].roots.size(), 3u);  // cube roots of unity

    const SigmaBoundsReport b = verify_sigma_bounds(c, s, 1);
    EXPECT_EQ(b.K, 20);
    EXPECT_EQ(b.D, 1);
    EXPECT_EQ(b.house_check, Verdict::pass);
    EXPECT_EQ(b.integrality_check, Verdict::pass);
}

TEST(Sigma, NonIntegralRootsAreReported) {
    // 2X^3 - 1 has root 2^(-1/3); D * root is not integral for D = 1.
    const auto s = sys({P({0, 0, 0, 2}), P({-1, 0, 0, 2})});
    SigmaCandidate c;
    c.defining_poly = P({-1, 0, 0, 2});
    c.word = {1};
    EXPECT_EQ(verify_sigma_bounds(c, s, 1).integrality_check, Verdict::pass);  // D_sigma = 2 here
    const auto monic = sys({P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
    EXPECT_EQ(verify_sigma_bounds(c, monic, 1).integrality_check, Verdict::fail);
}

TEST(Sigma, DegenerateCombinations) {
    // word (1) with gamma = 1 and f_1 = X^3 + ... never vanishes identically
    // at n = 1, but X - gamma X does: use a pool containing the identity.
    const auto s = sys({P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
    const SigmaResult r = sigma_members(s, 1, 2, {0, 1}, {1, 1});
    EXPECT_EQ(r.assignments_examined, 8u);  // three shorter words, two pool values
    EXPECT_EQ(r.candidates.size() + r.degenerate.size(), 8u);
}

TEST(Sigma, PoolValidation) {
    const auto s = sys({P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
    EXPECT_THROW(sigma_members(s, 1, 1, {CycloNum(Rational(1, 2))}, {1}), PreconditionViolated);
    EXPECT_THROW(sigma_members(s, 1, 1, {CycloNum(2L)}, {1}), PreconditionViolated);
    EXPECT_THROW(sigma_members(sys({X2, X2m1}), 1, 1, {0}, {1}), PreconditionViolated);
}

// ------------------------------------------------------------------ S_A

TEST(ScanSA, SpecialMapHitsEveryRootOfUnity) {
    const ScanResult r = scan_SA(sys({X2}), 1, 8, 1, 1);
    std::set<unsigned> orders;
    for (const auto& h : r.hits)
        if (auto o = root_of_unity_order(h.alpha)) orders.insert(*o);
    for (unsigned n = 1; n <= 8; ++n)
        if (n % 4 != 2) EXPECT_TRUE(orders.count(n)) << n;
}

TEST(ScanSA, RationalExample) {
    const ScanResult r = scan_SA(sys({X2p1}), 1, 1, 2, 1);
    bool zero_hit = false;
    for (const auto& h : r.hits) {
        EXPECT_EQ(house_leq(h.value, 1), Tri::yes);
        if (h.alpha.is_zero()) zero_hit = h.value == CycloNum(1L);
    }
    EXPECT_TRUE(zero_hit);
    EXPECT_TRUE(scan_SA(sys({X2p1}), 1, 0, 2, 1).hits.empty());
}

TEST(ScanSA, GeneratorPermutationInvariance) {
    const auto a = scan_SA(sys({X2m1, X2}), 1, 4, 1, 2);
    const auto b = scan_SA(sys({X2, X2m1}), 1, 4, 1, 2);
    auto key = [](const ScanResult& r) {
        std::set<std::pair<std::string, std::string>> s;
        for (const auto& h : r.hits) s.emplace(to_string(h.alpha), to_string(h.value) + "@" + std::to_string(h.level));
        return s;
    };
    EXPECT_EQ(key(a), key(b));
}

TEST(ScanSA, HeightBoundedRationals) {
    const auto q = height_bounded_rationals(2);
    const std::vector<Rational> expect{-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1, 2};
    EXPECT_EQ(q, expect);
}

// ---------------------------------------------------------------- growth

TEST(Growth, ArchSpecExamples) {
    const auto r = growth_check_arch(sys({X2p1}), 4, {1, 1});
    EXPECT_TRUE(r.increasing);
    ASSERT_EQ(r.moduli.size(), 3u);
    EXPECT_EQ(r.moduli[1].first, 17);
    EXPECT_EQ(r.moduli[2].first, 290);
    EXPECT_EQ(r.threshold_upper, 3);
    EXPECT_THROW(growth_check_arch(sys({X2p1}), 3, {1}), HypothesisNotMet);

    const auto r2 = growth_check_arch(sys({P({0, 0, 2})}), 2, {1, 1});
    EXPECT_TRUE(r2.increasing);
    EXPECT_EQ(r2.moduli[2].first, 128);
}

TEST(Growth, ArchCyclotomic) {
    const auto s = sys({P({z(3), 0, 1}), P({1, z(4), 0, 1})});
    const CycloNum a = CycloNum(5L) + z(5);
    for (unsigned k : {1u, 7u, 11u}) {
        const auto r = growth_check_arch(s, a, {1, 2, 1}, k);
        EXPECT_TRUE(r.increasing);
        EXPECT_FALSE(r.exact);
    }
}

TEST(Growth, PadicSpecExamples) {
    const auto r = growth_check_padic(sys({X2p1}), Rational(1, 2), 2, {1, 1});
    EXPECT_EQ(r.valuations, (std::vector<long>{-1, -2, -4}));
    EXPECT_TRUE(r.increasing);
    EXPECT_TRUE(r.recurrence_holds);

    const auto c = growth_check_padic(sys({P({0, 0, 0, 1})}), Rational(1, 5), 5, {1, 1});
    EXPECT_EQ(c.valuations, (std::vector<long>{-1, -3, -9}));

    // Equality |a|_3 = |a_d|_3^-1 = 3 violates the strict hypothesis.
    EXPECT_THROW(growth_check_padic(sys({P({0, 0, 3})}), Rational(1, 3), 3, {1}), HypothesisNotMet);
    EXPECT_THROW(growth_check_padic(sys({X2p1}), 2, 2, {1}), HypothesisNotMet);
}

TEST(Growth, PadicRecurrenceAgainstOracle) {
    std::mt19937_64 rng(23);
    const auto s = sys({Pq({Rational(1, 3), 2, Rational(3, 2)}), Pq({1, 0, 0, Rational(2, 9)})});
    for (int t = 0; t < 50; ++t) {
        const Rational a = make_rational(static_cast<long>(rng() % 7) + 1, 27 * 8);
        for (long p : {2L, 3L}) {
            const Word w = random_word(rng, 2, 5);
            try {
                const auto r = growth_check_padic(s, a, p, w);
                Rational v = a;
                ASSERT_EQ(r.valuations.size(), w.size() + 1);
                EXPECT_EQ(r.valuations[0], oracle::valuation(v, p));
                for (std::size_t i = 0; i < w.size(); ++i) {
                    v = to_q(s.gen(w[i]))[0];
                    v = compose_word(s, Word(w.begin(), w.begin() + static_cast<long>(i) + 1))(a).rational_value();
                    EXPECT_EQ(r.valuations[i + 1], oracle::valuation(v, p));
                }
                EXPECT_TRUE(r.increasing);
                EXPECT_TRUE(r.recurrence_holds);
            } catch (const HypothesisNotMet&) {
            }
        }
    }
}

// ---------------------------------------------------------------- prefix

TEST(Prefix, HouseBoundSpecExamples) {
    const auto r = prefix_house_bound(sys({X2p1}), 0, {1}, 1);
    EXPECT_EQ(r.L, 3);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(prefix_house_bound(sys({X2p1}), z(7), {}, 1).pass);
    const auto r2 = prefix_house_bound(sys({X2p1}), z(4), {1, 1}, 1);
    EXPECT_TRUE(r2.pass);
    ASSERT_EQ(r2.prefix_houses.size(), 2u);
    EXPECT_EQ(r2.prefix_houses[1].hi, 0);
}

TEST(Prefix, IntegralitySpecExamples) {
    EXPECT_TRUE(prefix_integrality(sys({X2p1}), z(4), {1}).pass);
    const auto r = prefix_integrality(sys({Pq({Rational(1, 2), 0, Rational(1, 2)})}), 1, {1});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.D, 1);
    EXPECT_TRUE(prefix_integrality(sys({X2p1}), z(3), {}).pass);
}
