// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cyclodyn_cli/json_io.hpp"

#include "cyclodyn/cyclodyn.hpp"
#include "cyclodyn_cli/suites.hpp"
#include "oracles.hpp"

using namespace cyclodyn;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

CycloNum z(unsigned n, long k = 1) { return CycloNum::zeta(n, k); }
CPoly P(std::initializer_list<CycloNum> c) { return CPoly(std::vector<CycloNum>(c)); }

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

unsigned env_threads() {
    const char* t = std::getenv("CYCLODYN_THREADS");
    return t ? static_cast<unsigned>(std::max(1L, std::atol(t))) : 1u;
}

oracle::Cx cx(const CycloNum& a, unsigned k = 1) { return oracle::embed(a.coords(), a.conductor(), k % a.conductor()); }

CycloNum random_small(std::mt19937_64& rng, bool nonzero) {
    static const unsigned conductors[] = {1, 3, 4, 5, 8};
    for (;;) {
        const unsigned n = conductors[rng() % 5];
        const CycloNum c = CycloNum(make_rational(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3))) +
                           CycloNum(static_cast<long>(rng() % 3) - 1) * z(n, static_cast<long>(rng() % n));
        if (!nonzero || !c.is_zero()) return c;
    }
}

std::vector<Word> all_words(unsigned s, unsigned n) {
    std::vector<Word> out{Word{}};
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (unsigned i = 1; i <= s; ++i) {
                next.push_back(w);
                next.back().push_back(i);
            }
        out = std::move(next);
    }
    return out;
}

// ------------------------------------------------------------------ 1

Outcome chebyshev_suite() {
    Outcome o;
    for (unsigned d = 1; d <= 32; ++d) {
        const auto lhs = laurent_compose(chebyshev(d), LaurentPoly({{1, 1}, {-1, 1}}));
        if (!(lhs == LaurentPoly({{static_cast<long>(d), 1}, {-static_cast<long>(d), 1}}))) fail(o, "identity d=" + std::to_string(d));
        const oracle::QVec ref = oracle::chebyshev(d);
        const CPoly t = chebyshev(d);
        oracle::QVec got;
        for (const auto& c : t.coeffs()) got.push_back(c.rational_value());
        if (got != ref) fail(o, "closed form d=" + std::to_string(d));
    }
    for (unsigned a = 1; a <= 32; ++a)
        for (unsigned b = 1; a * b <= 32; ++b)
            if (!(chebyshev(a * b) == chebyshev(a).compose(chebyshev(b))))
                fail(o, "semigroup " + std::to_string(a) + "," + std::to_string(b));
    return o;
}

// ------------------------------------------------------------------ 2

Outcome kronecker_suite() {
    Outcome o;
    std::size_t units = 0;
    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            const CycloNum u = z(n, k);
            if (house_leq(u, 1) != Tri::yes) fail(o, "zeta_" + std::to_string(n) + "^" + std::to_string(k));
            const auto h = house(u, 128);
            if (!(h.lo <= 1 && 1 <= h.hi)) fail(o, "house interval of a root of unity");
            ++units;
        }
    std::mt19937_64 rng(2024);
    std::size_t others = 0;
    while (others < 200) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 30);
        CycloNum a = 0;
        for (unsigned j = 0; j < n; ++j) a += CycloNum(static_cast<long>(rng() % 5) - 2) * z(n, j);
        if (a.is_zero() || root_of_unity_order(a)) continue;
        if (house_leq(a, 1) != Tri::no) fail(o, "non-unit " + to_string(a));
        // Independent check: some conjugate has modulus above 1.
        long double best = 0;
        for (unsigned k = 1; k <= a.conductor(); ++k)
            if (std::gcd(k, a.conductor()) == 1) best = std::max(best, std::abs(cx(a, k)));
        if (!(best > 1 + 1e-12L)) fail(o, "oracle house of " + to_string(a));
        ++others;
    }
    o.detail = o.pass ? std::to_string(units) + " roots of unity, " + std::to_string(others) + " others" : o.detail;
    return o;
}

// ------------------------------------------------------------------ 3

Outcome growth_suite(unsigned threads) {
    Outcome o;
    const auto s = cli::run_growth_suite(1, 1000, 1000, threads);
    if (s.padic.size() != 1000 || s.arch.size() != 1000) fail(o, "suite size");
    for (const auto& in : s.padic) {
        if (!in.report || !in.error.empty()) {
            fail(o, "p-adic instance error: " + in.error);
            continue;
        }
        if (in.word.size() > 6) fail(o, "word longer than 6");
        const PolySystem sys(in.generators);
        const long p = in.p.get_si();
        const auto& v = in.report->valuations;
        Rational x = in.a;
        if (v[0] != oracle::valuation(x, p)) fail(o, "valuation of a");
        for (std::size_t i = 0; i < in.word.size(); ++i) {
            const CPoly& g = sys.gen(in.word[i]);
            const Rational lead = g.coeffs().back().rational_value();
            // Exact recurrence v(f(x)) = v(a_d) + d v(x), against the oracle valuation.
            const long expect = oracle::valuation(lead, p) + g.degree() * oracle::valuation(x, p);
            x = g(CycloNum(x)).rational_value();
            const long actual = oracle::valuation(x, p);
            if (actual != expect || v[i + 1] != actual) fail(o, "p-adic recurrence");
            if (!(v[i + 1] < v[i])) fail(o, "p-adic growth not strict");
        }
        if (!in.report->increasing || !in.report->recurrence_holds) fail(o, "p-adic report flags");
    }
    for (const auto& in : s.arch) {
        if (!in.report || !in.error.empty()) {
            fail(o, "archimedean instance error: " + in.error);
            continue;
        }
        const auto& m = in.report->moduli;
        for (std::size_t i = 0; i + 1 < m.size(); ++i)
            if (!(m[i + 1].first > m[i].second)) fail(o, "modulus growth not certified");
        if (!in.report->increasing) fail(o, "archimedean report flag");
        // The starting modulus agrees with an independent embedding.
        unsigned N = in.a.conductor();
        for (const auto& g : in.generators)
            for (const auto& c : g.coeffs()) N = std::lcm(N, c.conductor());
        const long double r = std::abs(oracle::embed(in.a.coords(), in.a.conductor(), (in.embedding % N) % in.a.conductor()));
        if (r < m[0].first.get_d() - 1e-9 || r > m[0].second.get_d() + 1e-9) fail(o, "starting modulus vs oracle");
    }
    if (s.padic_violations || s.arch_violations) fail(o, "suite reported violations");
    if (o.pass) o.detail = "1000 p-adic + 1000 archimedean, 0 violations";
    return o;
}

// ------------------------------------------------------------------ 4

Outcome prefix_suite() {
    Outcome o;
    const std::vector<std::vector<CPoly>> systems{
        {P({1, 0, 1}), P({-1, 0, 1})},
        {P({0, 1, 1}), P({0, 0, 0, 1})},
        {P({0, Rational(1, 2), Rational(1, 2)}), P({-2, 0, 1})},
        {P({z(3), 0, 1}), P({0, z(4), 1})},
        {P({0, 0, 1}), P({1, 1, 0, 1})},
    };
    std::mt19937_64 rng(44);
    std::size_t done = 0, tries = 0;
    while (done < 300 && tries < 20000) {
        ++tries;
        const PolySystem sys(systems[rng() % systems.size()]);
        CycloNum a;
        switch (rng() % 3) {
            case 0: a = static_cast<long>(rng() % 5) - 2; break;
            case 1: {
                const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
                a = z(n, static_cast<long>(rng() % n));
                break;
            }
            default: a = z(4) + CycloNum(static_cast<long>(rng() % 3) - 1); break;
        }
        Word w(rng() % 4);
        for (auto& x : w) x = 1 + static_cast<unsigned>(rng() % sys.size());
        const CycloNum end = evaluate_word(sys, w, a);
        if (!is_algebraic_integer(end)) continue;
        const auto h = house(end, 128);
        const Integer fl = h.hi.get_num() / h.hi.get_den();  // hi >= 0
        const Rational A = Rational(std::max<long>(1, fl.get_si() + 1));
        if (house_leq(end, A) != Tri::yes) continue;
        const auto hb = prefix_house_bound(sys, a, w, A);
        const auto in = prefix_integrality(sys, a, w);
        if (!hb.pass) fail(o, "house bound on a prefix, alpha " + to_string(a));
        if (!in.pass) fail(o, "integrality on a prefix, alpha " + to_string(a));
        // Independent re-check of each prefix against L.
        CycloNum x = a;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (house(x, 128).hi > hb.L) fail(o, "prefix house above L");
            if (!is_algebraic_integer(CycloNum(Rational(in.D)) * x)) fail(o, "D * prefix not integral");
            x = sys.gen(w[i])(x);
        }
        ++done;
    }
    if (done < 300) fail(o, "only " + std::to_string(done) + " orbits generated");
    if (o.pass) o.detail = std::to_string(done) + " orbits, 0 violations";
    return o;
}

// ------------------------------------------------------------------ 5

Outcome bounds_reproduction() {
    Outcome o;
    const PolySystem a({P({1, 0, 1})});
    const auto m = bound_M(a, 1, {});
    if (to_string(m.L) != "3" || to_string(bound_L(a, 1)) != "3") fail(o, "L");
    if (m.D.get_str() != "1") fail(o, "D");
    if (m.M != 15) fail(o, "M");
    const PolySystem b({P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
    if (choose_m(b) != 2) fail(o, "m");
    if (to_string(bound_K(b, 1)) != "20") fail(o, "K");
    if (o.pass) o.detail = "L=3 D=1 M=15 m=2 K=20";
    return o;
}

// ------------------------------------------------------------------ 6

Outcome special_classifier() {
    Outcome o;
    std::vector<std::string> failures;
    const CPoly f = P({1, 4, 2});
    const auto r = is_special_set(PolySystem({f}));
    const auto w = is_conjugate_to_power(f);
    if (!r.special || !w || !(conjugate(*w, CPoly::monomial(1, 2)) == f)) failures.push_back("2X^2+4X+1 not detected");

    const PolySystem pair({P({1, 0, 1}), P({1, -1, 1})});
    const auto np = is_special_set(pair);
    if (np.special) {
        std::string why = "{X^2+1, X^2-X+1} classified special:";
        for (const auto& fd : np.findings) {
            why += " cond" + std::to_string(fd.condition) + " " + to_string(fd.form) + " (" + std::to_string(fd.indices[0]) +
                   "," + std::to_string(fd.indices.size() > 1 ? fd.indices[1] : 0) + ")";
            why += verify_finding(pair, fd) ? " verified" : " UNVERIFIED";
        }
        why += "; f2(f1(x)) = x^4+x^2+1 = T4(2i x)/16 + 7/8";
        failures.push_back(why);
    }

    std::mt19937_64 rng(66);
    std::size_t misses = 0;
    for (int t = 0; t < 200; ++t) {
        const unsigned d = 2 + static_cast<unsigned>(rng() % 4);
        const bool cheb = rng() % 2;
        const int sign = rng() % 2 ? 1 : -1;
        const CPoly g = cheb ? chebyshev(d) * CPoly::constant(CycloNum(static_cast<long>(sign))) : CPoly::monomial(1, d);
        const LinearMap l1{random_small(rng, true), random_small(rng, false)};
        if (t % 2 == 0) {
            const CPoly h = conjugate(l1, g);
            bool ok = false;
            try {
                if (cheb) {
                    const auto c = is_conjugate_to_cheb(h);
                    ok = c && conjugate(c->l, chebyshev(d) * CPoly::constant(CycloNum(static_cast<long>(c->sign)))) == h;
                } else {
                    const auto c = is_conjugate_to_power(h);
                    ok = c && conjugate(*c, g) == h;
                }
            } catch (const ScalingOutsideSearchSpace&) {
            }
            ok = ok && is_special_set(PolySystem({h})).special;
            misses += !ok;
        } else {
            const LinearMap l2{random_small(rng, true), random_small(rng, false)};
            const CPoly h = l1.poly().compose(g).compose(l2.poly());
            bool ok = false;
            try {
                if (cheb) {
                    const auto c = two_sided_equiv_cheb(h);
                    ok = c && c->l1.poly().compose(chebyshev(d)).compose(c->l2.poly()) == h;
                } else {
                    const auto c = two_sided_equiv_power(h);
                    ok = c && c->l1.poly().compose(g).compose(c->l2.poly()) == h;
                }
            } catch (const ScalingOutsideSearchSpace&) {
            }
            misses += !ok;
        }
    }
    if (misses) failures.push_back(std::to_string(misses) + " of 200 dressings missed");
    if (!failures.empty()) {
        o.pass = false;
        for (const auto& s : failures) o.detail += (o.detail.empty() ? "" : "; ") + s;
    } else {
        o.detail = "200 dressings detected";
    }
    return o;
}

// ------------------------------------------------------------------ 7

Outcome preperiodic_detectors() {
    Outcome o;
    const PolySystem a({P({-1, 0, 1})});
    const auto c = detect_pi(a, 0, 3, 3);
    if (!c || c->loop_word != Word{1, 1} || !verify_certificate(a, 0, *c)) fail(o, "{X^2-1} at 0");
    const PolySystem sq({P({0, 0, 1})});
    for (unsigned n = 1; n <= 30; ++n) {
        const auto r = detect_pi(sq, z(n), 6, 30);
        if (!r || !verify_certificate(sq, z(n), *r)) fail(o, "{X^2} at zeta_" + std::to_string(n));
    }
    const PolySystem b({P({0, 0, 1}), P({-1, 0, 2})});
    const auto ov = detect_pibar(b, 1, 3);
    if (!ov || ov->level_k != 1 || ov->level_n != 2 || !verify_certificate(b, 1, *ov)) fail(o, "{X^2, 2X^2-1} at 1");
    if (o.pass) o.detail = "all certificates re-verified";
    return o;
}

// ------------------------------------------------------------------ 8

Outcome sigma_desk(unsigned threads) {
    Outcome o;
    const PolySystem s({P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
    const std::vector<CycloNum> pool{0, 1, -1, z(4), -z(4)};
    std::size_t candidates = 0, inconclusive = 0;
    const Rational K = bound_K(s, 1);
    if (K != 20) fail(o, "K != 20");
    for (unsigned n = 1; n <= 2; ++n)
        for (const Word& w : all_words(2, n)) {
            SigmaOptions opts;
            opts.threads = threads;
            const auto r = sigma_members(s, 1, n, pool, w, opts);
            if (r.cap_reached) fail(o, "assignment cap reached");
            for (const auto& c : r.candidates) {
                ++candidates;
                const auto b = verify_sigma_bounds(c, s, 1);
                if (b.house_check == Verdict::fail || b.integrality_check == Verdict::fail) fail(o, "bound violation");
                if (b.house_check == Verdict::inconclusive || b.integrality_check == Verdict::inconclusive) {
                    ++inconclusive;
                    if (b.reason.empty()) fail(o, "inconclusive without reason");
                }
                if (b.house_check == Verdict::pass && b.max_root_modulus_upper > K) fail(o, "root modulus above K");
            }
        }
    if (o.pass) o.detail = std::to_string(candidates) + " candidates, " + std::to_string(inconclusive) + " inconclusive";
    return o;
}

// ------------------------------------------------------------------ 9

Outcome fz_suite(unsigned threads) {
    Outcome o;
    const auto s = cli::run_fz_suite(9, 500, threads);
    for (const auto& in : s.instances) {
        if (!in.report || !in.error.empty()) {
            fail(o, "instance error: " + in.error);
            continue;
        }
        if (in.g.degree() > 10 || in.q.size() > 5 || is_trinomial_symmetric(in.q)) fail(o, "instance outside the suite's space");
        oracle::QVec g;
        for (const auto& c : in.g.coeffs()) g.push_back(c.rational_value());
        oracle::Laurent q;
        for (const auto& [e, c] : in.q.terms()) q[e] = c.rational_value();
        long ell = 0;
        for (const auto& [e, c] : oracle::lcompose(g, q)) ell += e != 0;
        if (static_cast<long>(in.report->ell) != ell) fail(o, "term count vs oracle");
        if (in.g.degree() > 2 * (2 * ell - 1) * (ell - 1)) fail(o, "deg g above the bound");
    }
    if (s.violations) fail(o, "suite reported violations");
    if (o.pass) o.detail = "500 instances, 0 violations";
    return o;
}

// ----------------------------------------------------------------- 10

Outcome loxton_suite(unsigned threads) {
    Outcome o;
    std::mt19937_64 rng(10);
    for (int t = 0; t < 50; ++t) {
        const int k = 1 + static_cast<int>(rng() % 3);
        CycloNum a = 0;
        for (int i = 0; i < k; ++i) a += z(60, static_cast<long>(rng() % 60));
        LoxtonBoundReport r;
        try {
            r = verify_loxton_bound(a, {}, 3, 60, threads);
        } catch (const Error& e) {
            fail(o, "no decomposition for " + to_string(a));
            continue;
        }
        if (r.certificate.b() > 3 || !verify_loxton_certificate(r.certificate) || !r.pass) fail(o, "certificate for " + to_string(a));
        const int ref = oracle::min_roots_of_unity_sum(cx(a), 60, 2);
        if (ref >= 0 && static_cast<int>(r.certificate.b()) != ref) fail(o, "not minimal: " + to_string(a));
        if (ref < 0 && r.certificate.b() != 3) fail(o, "oracle finds no b <= 2 but b != 3");
    }
    if (o.pass) o.detail = "50 sums, minimality checked for b <= 2";
    return o;
}

// ----------------------------------------------------------------- 11

std::string run_cli_hash(const fs::path& dir, const std::string& args, unsigned threads, int& status) {
    const fs::path log = dir / "stdout.txt";
    const std::string cmd = "cd '" + dir.string() + "' && CYCLODYN_THREADS=" + std::to_string(threads) + " '" CYCLODYN_CLI_PATH "' " +
                            args + " > '" + log.string() + "' 2>/dev/null";
    const int st = std::system(cmd.c_str());
    status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream in(log);
    try {
        return cli::json::parse(in).at("report_sha256").get<std::string>();
    } catch (...) {
        return {};
    }
}

Outcome determinism() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("cyclodyn_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "sigma.json") << "[[0, 0, 0, 1], [-1, 0, 0, 1]]";
    const std::vector<std::pair<std::string, std::string>> runs{
        {"growth", "growth --random 1000 --seed 3"},
        {"sigma", "sigma --system sigma.json --A 1 --n 2 --pool '0,1,-1,z(4),-z(4)'"},
        {"fz", "fz-check --random 500 --seed 9"},
    };
    for (const auto& [name, args] : runs) {
        int s1 = 0, s2 = 0;
        const auto h1 = run_cli_hash(dir, args + " --out " + name + "_1", 1, s1);
        const auto h2 = run_cli_hash(dir, args + " --out " + name + "_3", 3, s2);
        if (s1 != 0 || s2 != 0 || h1.empty()) fail(o, name + " run failed");
        else if (h1 != h2) fail(o, name + " hashes differ");
        else o.detail += (o.detail.empty() ? "" : ", ") + name + " " + h1.substr(0, 12);
    }
    fs::remove_all(dir);
    return o;
}

}  // namespace

int main() {
    const unsigned threads = env_threads();
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0: none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "chebyshev identities", 5, chebyshev_suite},
        {2, "kronecker / house", 30, kronecker_suite},
        {3, "growth checks", 60, [&] { return growth_suite(threads); }},
        {4, "prefix house and integrality", 0, prefix_suite},
        {5, "bounds reproduction", 0, bounds_reproduction},
        {6, "special-set classifier", 0, special_classifier},
        {7, "preperiodicity detectors", 0, preperiodic_detectors},
        {8, "sigma desk scale", 120, [&] { return sigma_desk(threads); }},
        {9, "fuchs-zannier suite", 0, [&] { return fz_suite(threads); }},
        {10, "loxton suite", 0, [&] { return loxton_suite(threads); }},
        {11, "determinism across thread counts", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s && o.pass) {
            o.pass = false;
            o.detail = "runtime above " + std::to_string(static_cast<int>(c.limit_s)) + " s";
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") [" << buf << "]"
                  << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
