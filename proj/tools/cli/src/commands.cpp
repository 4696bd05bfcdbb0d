#include "cyclodyn_cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "cyclodyn/parallel.hpp"
#include "cyclodyn_cli/report.hpp"
#include "cyclodyn_cli/suites.hpp"

namespace cyclodyn::cli {

unsigned precision_bits_from_env() {
    const char* env = std::getenv("CYCLODYN_PRECISION_BITS");
    if (!env) return 128;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 16 || v > 65536)
        throw ConfigError("CYCLODYN_PRECISION_BITS", "expected an integer in [16, 65536]");
    return static_cast<unsigned>(v);
}

namespace {

struct Outcome {
    json result;
    std::string status = "complete";  // complete | budget_exhausted | hypothesis_not_met
};

struct Context {
    unsigned threads = 1;
    unsigned precision = 128;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<CycloNum> element_list(const std::string& text, const std::string& field) {
    std::vector<CycloNum> out;
    const auto items = split_list(text);
    for (std::size_t i = 0; i < items.size(); ++i)
        out.push_back(element_from_string(items[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

Rational rational_option(const std::string& text, const std::string& field) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw ConfigError(field, e.what());
    }
}

void require_positive(long v, const std::string& field) {
    if (v < 1) throw ConfigError(field, "must be positive");
}

json tree_levels(const OrbitTree& t) {
    json levels = json::array();
    for (const auto& lvl : t.levels) {
        json l = json::array();
        for (const auto& [value, words] : lvl) {
            json ws = json::array();
            for (const auto& w : words) ws.push_back(to_json(w));
            l.push_back({{"value", to_json(value)}, {"words", std::move(ws)}});
        }
        levels.push_back(std::move(l));
    }
    return levels;
}

// ----------------------------------------------------------------- orbit

struct OrbitArgs {
    std::string system, alpha;
    unsigned depth = 0;
    std::size_t max_words = std::size_t(1) << 20;
};

Outcome cmd_orbit(const OrbitArgs& a, const Context& ctx, json& config) {
    const PolySystem sys = load_system(a.system);
    const CycloNum alpha = element_from_string(a.alpha, "alpha");
    require_positive(a.depth, "depth");
    config = {{"system", to_json(sys)}, {"alpha", to_json(alpha)}, {"depth", a.depth}, {"max_words", a.max_words}};
    Outcome out;
    try {
        const OrbitTree t = build_tree(sys, alpha, a.depth, {a.max_words, ctx.threads});
        out.result = {{"levels", tree_levels(t)}, {"depth", t.depth()}};
    } catch (const TreeBudgetExceeded& e) {
        out.status = "budget_exhausted";
        out.result = {{"error", e.what()}};
    }
    return out;
}

// ------------------------------------------------------------ preperiodic

struct PreperiodicArgs {
    std::string kind = "pi", system, alpha_set;
    unsigned base_depth = 3, loop_depth = 3, depth = 4;
    std::size_t max_words = std::size_t(1) << 20;
};

Outcome cmd_preperiodic(const PreperiodicArgs& a, const Context& ctx, json& config) {
    if (a.kind != "pi" && a.kind != "pibar") throw ConfigError("kind", "expected pi or pibar");
    const PolySystem sys = load_system(a.system);
    const auto alphas = element_list(a.alpha_set, "alpha_set");
    if (alphas.empty()) throw ConfigError("alpha_set", "no elements given");
    config = {{"kind", a.kind}, {"system", to_json(sys)}, {"alpha_set", json::array()}};
    for (const auto& x : alphas) config["alpha_set"].push_back(to_json(x));
    if (a.kind == "pi") {
        require_positive(a.loop_depth, "loop_depth");
        config["base_depth"] = a.base_depth;
        config["loop_depth"] = a.loop_depth;
    } else {
        if (a.depth < 2) throw ConfigError("depth", "must be at least 2");
        config["depth"] = a.depth;
        config["max_words"] = a.max_words;
    }

    Outcome out;
    std::vector<json> slots(alphas.size());
    std::vector<char> exhausted(alphas.size(), 0);
    parallel_for(alphas.size(), ctx.threads, [&](std::size_t i) {
        json r = {{"alpha", to_json(alphas[i])}};
        try {
            const auto c = a.kind == "pi" ? detect_pi(sys, alphas[i], a.base_depth, a.loop_depth)
                                          : detect_pibar(sys, alphas[i], a.depth, {a.max_words, 1});
            r["certificate"] = c ? to_json(*c) : json(nullptr);
        } catch (const TreeBudgetExceeded& e) {
            r["certificate"] = nullptr;
            r["error"] = e.what();
            exhausted[i] = 1;
        }
        slots[i] = std::move(r);
    });
    json list = json::array();
    std::size_t found = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]["certificate"].is_null()) ++found;
        if (exhausted[i]) out.status = "budget_exhausted";
        list.push_back(std::move(slots[i]));
    }
    out.result = {{"alphas", std::move(list)}, {"certificates_found", found}};
    return out;
}

// ---------------------------------------------------------------- scan-sa

struct ScanArgs {
    std::string system, A = "1";
    unsigned conductor_max = 0, height_max = 1, depth = 1;
    std::size_t max_words = std::size_t(1) << 16;
    std::size_t max_alphas = 0;
};

Outcome cmd_scan(const ScanArgs& a, const Context& ctx, json& config) {
    const PolySystem sys = load_system(a.system);
    const Rational A = rational_option(a.A, "A");
    if (A < 1) throw ConfigError("A", "must be at least 1");
    require_positive(a.depth, "depth");
    require_positive(a.height_max, "height_max");
    config = {{"system", to_json(sys)}, {"A", to_json(A)},
              {"conductor_max", a.conductor_max}, {"height_max", a.height_max},
              {"depth", a.depth}, {"max_words", a.max_words}, {"max_alphas", a.max_alphas}};
    ScanOptions opts;
    opts.tree = {a.max_words, 1};
    opts.threads = ctx.threads;
    opts.max_alphas = a.max_alphas;
    const ScanResult r = scan_SA(sys, A, a.conductor_max, a.height_max, a.depth, opts);
    json hits = json::array();
    for (const auto& h : r.hits)
        hits.push_back({{"alpha", to_json(h.alpha)}, {"level", h.level}, {"word", to_json(h.word)}, {"value", to_json(h.value)}});
    json skipped = json::array();
    for (const auto& x : r.budget_exceeded) skipped.push_back(to_json(x));
    Outcome out;
    out.result = {{"hits", std::move(hits)}, {"alphas_examined", r.alphas_examined},
                  {"budget_exceeded", std::move(skipped)}, {"alpha_cap_reached", r.alpha_cap_reached}};
    if (!r.budget_exceeded.empty() || r.alpha_cap_reached) out.status = "budget_exhausted";
    return out;
}

// ------------------------------------------------------------------ sigma

struct SigmaArgs {
    std::string system, A = "1", pool, word;
    unsigned n = 1;
    std::size_t max_assignments = 1000000;
};

Outcome cmd_sigma(const SigmaArgs& a, const Context& ctx, json& config) {
    const PolySystem sys = load_system(a.system);
    const Rational A = rational_option(a.A, "A");
    if (A <= 0) throw ConfigError("A", "must be positive");
    require_positive(a.n, "n");
    const auto pool = element_list(a.pool, "pool");
    if (pool.empty()) throw ConfigError("pool", "no elements given");
    std::vector<Word> words;
    if (!a.word.empty()) {
        words.push_back(parse_word(a.word, "word"));
        for (unsigned x : words.back())
            if (x > sys.size()) throw ConfigError("word", "generator index out of range");
    } else {
        for (unsigned len = 1; len <= a.n; ++len)
            for (auto& w : words_of_length(sys.size(), len)) words.push_back(std::move(w));
    }
    config = {{"system", to_json(sys)}, {"A", to_json(A)}, {"n", a.n}, {"pool", json::array()},
              {"word", a.word.empty() ? json("all words of length 1..n") : to_json(words.front())},
              {"max_assignments", a.max_assignments}};
    for (const auto& g : pool) config["pool"].push_back(to_json(g));

    SigmaOptions opts;
    opts.max_assignments = a.max_assignments;
    opts.threads = ctx.threads;
    Outcome out;
    json per_word = json::array();
    std::size_t total = 0, pass = 0, fail = 0, inconclusive = 0;
    std::optional<SigmaBoundsReport> first;
    try {
        for (const Word& w : words) {
            const auto n = static_cast<unsigned>(w.size());
            try {
                const SigmaResult r = sigma_members(sys, A, n, pool, w, opts);
                std::vector<json> cands(r.candidates.size());
                std::vector<Verdict> verdicts(r.candidates.size());
                parallel_for(r.candidates.size(), ctx.threads, [&](std::size_t i) {
                    const auto& c = r.candidates[i];
                    const SigmaBoundsReport b = verify_sigma_bounds(c, sys, A);
                    json comb = json::array();
                    for (const auto& [cw, g] : c.combination) comb.push_back({{"word", to_json(cw)}, {"gamma", to_json(g)}});
                    json roots = json::array();
                    for (const auto& box : c.roots) roots.push_back(to_json(box));
                    cands[i] = {{"defining_poly", to_json(c.defining_poly)},
                                {"combination", std::move(comb)},
                                {"roots", std::move(roots)},
                                {"roots_certified", c.roots_certified},
                                {"house_check", to_string(b.house_check)},
                                {"max_root_modulus_upper", to_json(b.max_root_modulus_upper)},
                                {"integrality_check", to_string(b.integrality_check)},
                                {"reason", b.reason}};
                    const bool bad = b.house_check == Verdict::fail || b.integrality_check == Verdict::fail;
                    const bool good = b.house_check == Verdict::pass && b.integrality_check == Verdict::pass;
                    verdicts[i] = bad ? Verdict::fail : good ? Verdict::pass : Verdict::inconclusive;
                });
                if (!r.candidates.empty() && !first) first = verify_sigma_bounds(r.candidates.front(), sys, A);
                for (Verdict v : verdicts) {
                    ++total;
                    if (v == Verdict::pass) ++pass;
                    else if (v == Verdict::fail) ++fail;
                    else ++inconclusive;
                }
                json degenerate = json::array();
                for (const auto& comb : r.degenerate) {
                    json cj = json::array();
                    for (const auto& [cw, g] : comb) cj.push_back({{"word", to_json(cw)}, {"gamma", to_json(g)}});
                    degenerate.push_back(std::move(cj));
                }
                per_word.push_back({{"word", to_json(w)}, {"candidates", std::move(cands)},
                                    {"degenerate", std::move(degenerate)},
                                    {"assignments_examined", r.assignments_examined},
                                    {"cap_reached", r.cap_reached}});
                if (r.cap_reached) out.status = "budget_exhausted";
            } catch (const PreconditionViolated& e) {
                throw ConfigError("sigma", e.what());
            }
        }
    } catch (const PrecisionExhausted& e) {
        out.status = "budget_exhausted";
        out.result = {{"error", e.what()}};
        return out;
    }
    out.result = {{"words", std::move(per_word)},
                  {"summary", {{"candidates", total}, {"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}}}};
    if (first) {
        out.result["K"] = to_json(first->K);
        out.result["D"] = first->D.get_str();
    }
    return out;
}

// ---------------------------------------------------------------- special

struct SpecialArgs {
    std::string system;
    unsigned conductor_cap = 24;
};

Outcome cmd_special(const SpecialArgs& a, const Context& ctx, json& config) {
    const PolySystem sys = load_system(a.system);
    require_positive(a.conductor_cap, "conductor_cap");
    config = {{"system", to_json(sys)}, {"conductor_cap", a.conductor_cap}};
    const SpecialityReport rep = is_special_set(sys, {a.conductor_cap, ctx.threads});
    json findings = json::array();
    for (const auto& f : rep.findings) findings.push_back(to_json(f));
    Outcome out;
    out.result = {{"verdict", rep.special ? "special" : "non_special"}, {"findings", std::move(findings)}};
    return out;
}

// ----------------------------------------------------------------- bounds

struct LoxtonParamArgs {
    std::string r_scale = "1", r_exp = "3", e_size = "1", b = "1";

    LoxtonParams parse() const {
        LoxtonParams p;
        p.R_scale = rational_option(r_scale, "r_scale");
        p.R_exponent = rational_option(r_exp, "r_exp");
        p.B = rational_option(b, "b");
        const Rational e = rational_option(e_size, "e_size");
        if (p.R_scale <= 0) throw ConfigError("r_scale", "must be positive");
        if (p.R_exponent <= 2) throw ConfigError("r_exp", "must exceed 2");
        if (p.B <= 0) throw ConfigError("b", "must be positive");
        if (!is_integer(e) || e < 1) throw ConfigError("e_size", "must be a positive integer");
        p.E_size = e.get_num();
        return p;
    }
};

json params_json(const LoxtonParams& p) {
    return {{"E_size", p.E_size.get_str()}, {"B", to_json(p.B)}, {"R_scale", to_json(p.R_scale)},
            {"R_exponent", to_json(p.R_exponent)},
            {"R_is_stand_in", p.R_scale == 1 && p.R_exponent == 3}};
}

json lk_json(const LKValue& v) { return {{"value", to_json(v.value)}, {"exact", v.exact}}; }

struct BoundsArgs {
    std::string system, A = "1";
    LoxtonParamArgs lox;
};

Outcome cmd_bounds(const BoundsArgs& a, const Context& ctx, json& config) {
    const PolySystem sys = load_system(a.system);
    const Rational A = rational_option(a.A, "A");
    if (A <= 0) throw ConfigError("A", "must be positive");
    const LoxtonParams params = a.lox.parse();
    config = {{"system", to_json(sys)}, {"A", to_json(A)}, {"loxton", params_json(params)}, {"precision_bits", ctx.precision}};
    Outcome out;
    json r;
    try {
        const MBound mb = bound_M(sys, A, params, ctx.precision);
        r["L"] = to_json(mb.L);
        r["L_exact"] = sys.rational_coefficients();
        r["M"] = mb.M;
        r["LK_of_DL"] = lk_json(mb.LK_of_DL);
        if (sys.rational_coefficients()) {
            r["D"] = bound_D(sys).get_str();
            r["D_sigma"] = bound_D_sigma(sys).get_str();
        }
        const auto d = sys.common_degree();
        if (d) {
            r["m"] = choose_m(sys);
            if (*d >= 3) r["K"] = to_json(bound_K(sys, A, ctx.precision));
        }
    } catch (const PrecisionExhausted& e) {
        out.status = "budget_exhausted";
        r["error"] = e.what();
    }
    out.result = std::move(r);
    return out;
}

// ----------------------------------------------------------------- loxton

struct LoxtonArgs {
    std::string alpha;
    unsigned max_b = 4, order_bound = 60;
    LoxtonParamArgs lox;
};

Outcome cmd_loxton(const LoxtonArgs& a, const Context& ctx, json& config) {
    const CycloNum alpha = element_from_string(a.alpha, "alpha");
    require_positive(a.max_b, "max_b");
    require_positive(a.order_bound, "order_bound");
    if (!is_algebraic_integer(alpha)) throw ConfigError("alpha", "must be an algebraic integer");
    if (a.order_bound % alpha.conductor()) throw ConfigError("order_bound", "must be a multiple of the conductor of alpha");
    const LoxtonParams params = a.lox.parse();
    config = {{"alpha", to_json(alpha)}, {"max_b", a.max_b}, {"order_bound", a.order_bound},
              {"loxton", params_json(params)}, {"precision_bits", ctx.precision}};
    const LoxtonSearch s = loxton_decompose(alpha, a.max_b, a.order_bound, ctx.threads);
    Outcome out;
    const HouseInterval h = house(alpha, ctx.precision);
    const LKValue lk = loxton_LK(h.hi, params, ctx.precision);
    out.result = {{"certificate", s.certificate ? to_json(*s.certificate) : json(nullptr)},
                  {"exhausted_below", s.exhausted_below},
                  {"house", to_json(h)},
                  {"bound", lk_json(lk)}};
    out.result["pass"] = s.certificate ? json(Rational(s.certificate->b()) <= lk.value) : json(nullptr);
    return out;
}

// --------------------------------------------------------------- fz-check

struct FZArgs {
    std::string g, q;
    std::size_t random = 0;
    std::uint64_t seed = 1;
};

Outcome cmd_fz(const FZArgs& a, const Context& ctx, json& config) {
    Outcome out;
    if (a.random > 0) {
        config = {{"random", a.random}, {"seed", a.seed}};
        const FZSuite s = run_fz_suite(a.seed, a.random, ctx.threads);
        out.result = to_json(s);
        return out;
    }
    if (a.g.empty() || a.q.empty()) throw ConfigError("g/q", "give --g and --q, or --random");
    const CPoly g = poly_from_json(read_json_file(a.g, "g"), "g");
    const LaurentPoly q = laurent_from_json(read_json_file(a.q, "q"), "q");
    config = {{"g", to_json(g)}, {"q", to_json(q)}};
    try {
        const FZReport r = fz_bound_check(g, q);
        out.result = {{"h", to_json(laurent_compose(g, q))}, {"ell", r.ell}, {"deg_g", r.deg_g}, {"bound", r.bound}, {"pass", r.pass}};
    } catch (const HypothesisNotMet& e) {
        out.status = "hypothesis_not_met";
        out.result = {{"error", e.what()}};
    } catch (const PreconditionViolated& e) {
        throw ConfigError("g", e.what());
    }
    return out;
}

// ----------------------------------------------------------------- growth

struct GrowthArgs {
    std::string system, alpha, word, p;
    unsigned embedding = 1;
    std::size_t random = 0;
    std::uint64_t seed = 1;
};

Outcome cmd_growth(const GrowthArgs& a, const Context& ctx, json& config) {
    Outcome out;
    if (a.random > 0) {
        config = {{"random", a.random}, {"seed", a.seed}};
        const GrowthSuite s = run_growth_suite(a.seed, a.random, a.random, ctx.threads);
        out.result = to_json(s);
        return out;
    }
    if (a.system.empty() || a.alpha.empty()) throw ConfigError("system/alpha", "give --system and --alpha, or --random");
    const PolySystem sys = load_system(a.system);
    const CycloNum alpha = element_from_string(a.alpha, "alpha");
    const Word w = parse_word(a.word, "word");
    for (unsigned x : w)
        if (x > sys.size()) throw ConfigError("word", "generator index out of range");
    config = {{"system", to_json(sys)}, {"alpha", to_json(alpha)}, {"word", to_json(w)}};
    try {
        if (!a.p.empty()) {
            const Rational p = rational_option(a.p, "p");
            if (!is_integer(p) || !is_prime(p.get_num())) throw ConfigError("p", "must be a prime");
            if (!alpha.is_rational()) throw ConfigError("alpha", "the p-adic check needs a rational alpha");
            if (!sys.rational_coefficients()) throw ConfigError("system", "the p-adic check needs rational coefficients");
            config["p"] = p.get_num().get_str();
            const PadicGrowthReport r = growth_check_padic(sys, alpha.rational_value(), p.get_num(), w);
            out.result = {{"valuations", r.valuations}, {"increasing", r.increasing}, {"recurrence_holds", r.recurrence_holds}};
        } else {
            config["embedding"] = a.embedding;
            const ArchGrowthReport r = growth_check_arch(sys, alpha, w, a.embedding);
            json moduli = json::array();
            for (const auto& [lo, hi] : r.moduli) moduli.push_back({to_json(lo), to_json(hi)});
            out.result = {{"moduli", std::move(moduli)}, {"threshold_upper", to_json(r.threshold_upper)},
                          {"increasing", r.increasing}, {"exact", r.exact}};
        }
    } catch (const HypothesisNotMet& e) {
        out.status = "hypothesis_not_met";
        out.result = {{"error", e.what()}};
    } catch (const InvalidPlace& e) {
        throw ConfigError("embedding", e.what());
    }
    return out;
}

// ------------------------------------------------------------------ driver

int finish(const std::string& command, const std::string& out_dir, const Context& ctx,
           const std::chrono::system_clock::time_point started, const json& config, const Outcome& out) {
    const json report = {{"tool", "cyclodyn"}, {"version", tool_version()}, {"command", command},
                         {"config", config}, {"status", out.status}, {"result", out.result}};
    ManifestEntry entry{command, config, ctx.threads, utc_timestamp(started),
                        utc_timestamp(std::chrono::system_clock::now()), out.status};
    const std::string hash = write_run(out_dir, report, entry);
    std::cout << json{{"command", command}, {"status", out.status},
                      {"report", (std::filesystem::path(out_dir) / "report.json").string()}, {"report_sha256", hash}}
                     .dump()
              << "\n";
    return out.status == "budget_exhausted" ? exit_budget : exit_ok;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Exact arithmetic dynamics over cyclotomic fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());
    std::string out_dir = "cyclodyn-out";

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_dir, "Directory for report.json and manifest.json"); };
    auto add_loxton = [](CLI::App* sub, LoxtonParamArgs& p) {
        sub->add_option("--r-scale", p.r_scale, "R(x) = r_scale * x^r_exp");
        sub->add_option("--r-exp", p.r_exp, "Exponent of R, above 2");
        sub->add_option("--e-size", p.e_size, "#E");
        sub->add_option("--b", p.b, "B");
    };

    OrbitArgs orbit;
    auto* s_orbit = app.add_subcommand("orbit", "Orbit tree levels F_1 .. F_depth");
    s_orbit->add_option("--system", orbit.system, "System file")->required();
    s_orbit->add_option("--alpha", orbit.alpha, "Starting point")->required();
    s_orbit->add_option("--depth", orbit.depth, "Levels to build")->required();
    s_orbit->add_option("--max-words", orbit.max_words, "Word budget");
    add_out(s_orbit);

    PreperiodicArgs pre;
    auto* s_pre = app.add_subcommand("preperiodic", "Pi / ov-Pi collision search");
    s_pre->add_option("--kind", pre.kind, "pi or pibar");
    s_pre->add_option("--system", pre.system, "System file")->required();
    s_pre->add_option("--alpha-set", pre.alpha_set, "Comma-separated starting points")->required();
    s_pre->add_option("--base-depth", pre.base_depth, "Max |u| (pi)");
    s_pre->add_option("--loop-depth", pre.loop_depth, "Max |v| (pi)");
    s_pre->add_option("--depth", pre.depth, "Max level (pibar)");
    s_pre->add_option("--max-words", pre.max_words, "Word budget (pibar)");
    add_out(s_pre);

    ScanArgs scan;
    auto* s_scan = app.add_subcommand("scan-sa", "Search for orbit points in H_A");
    s_scan->add_option("--system", scan.system, "System file")->required();
    s_scan->add_option("--A", scan.A, "House bound");
    s_scan->add_option("--conductor-max", scan.conductor_max, "Largest conductor")->required();
    s_scan->add_option("--height-max", scan.height_max, "Coordinate height bound")->required();
    s_scan->add_option("--depth", scan.depth, "Orbit depth")->required();
    s_scan->add_option("--max-words", scan.max_words, "Word budget per alpha");
    s_scan->add_option("--max-alphas", scan.max_alphas, "Alpha budget (0: none)");
    add_out(s_scan);

    SigmaArgs sigma;
    auto* s_sigma = app.add_subcommand("sigma", "Sigma_A candidates and their bound checks");
    s_sigma->add_option("--system", sigma.system, "System file")->required();
    s_sigma->add_option("--A", sigma.A, "House bound");
    s_sigma->add_option("--n", sigma.n, "Word length (all lengths 1..n without --word)")->required();
    s_sigma->add_option("--pool", sigma.pool, "Comma-separated coefficient pool")->required();
    s_sigma->add_option("--word", sigma.word, "Single word, e.g. 1,2");
    s_sigma->add_option("--max-assignments", sigma.max_assignments, "Assignment budget per word");
    add_out(s_sigma);

    SpecialArgs special;
    auto* s_special = app.add_subcommand("special", "Classify a system as special or not");
    s_special->add_option("--system", special.system, "System file")->required();
    s_special->add_option("--conductor-cap", special.conductor_cap, "Root search conductor cap");
    add_out(s_special);

    BoundsArgs bounds;
    auto* s_bounds = app.add_subcommand("bounds", "Constants L, D, m, K, M");
    s_bounds->add_option("--system", bounds.system, "System file")->required();
    s_bounds->add_option("--A", bounds.A, "House bound");
    add_loxton(s_bounds, bounds.lox);
    add_out(s_bounds);

    LoxtonArgs lox;
    auto* s_lox = app.add_subcommand("loxton", "Shortest sum of roots of unity");
    s_lox->add_option("--alpha", lox.alpha, "Algebraic integer")->required();
    s_lox->add_option("--max-b", lox.max_b, "Largest number of terms");
    s_lox->add_option("--order-bound", lox.order_bound, "Roots of unity of order dividing this");
    add_loxton(s_lox, lox.lox);
    add_out(s_lox);

    FZArgs fz;
    auto* s_fz = app.add_subcommand("fz-check", "deg g <= 2(2l-1)(l-1) for h = g(q)");
    s_fz->add_option("--g", fz.g, "Polynomial file");
    s_fz->add_option("--q", fz.q, "Laurent polynomial file");
    s_fz->add_option("--random", fz.random, "Random instances instead of files");
    s_fz->add_option("--seed", fz.seed, "Seed for --random");
    add_out(s_fz);

    GrowthArgs growth;
    auto* s_growth = app.add_subcommand("growth", "Growth along a word, p-adic or archimedean");
    s_growth->add_option("--system", growth.system, "System file");
    s_growth->add_option("--alpha", growth.alpha, "Starting point");
    s_growth->add_option("--word", growth.word, "Word, e.g. 1,2,1");
    s_growth->add_option("--p", growth.p, "Prime for the p-adic check");
    s_growth->add_option("--embedding", growth.embedding, "Embedding index k");
    s_growth->add_option("--random", growth.random, "Random p-adic and archimedean instances, each");
    s_growth->add_option("--seed", growth.seed, "Seed for --random");
    add_out(s_growth);

    std::string verify_path;
    auto* s_verify = app.add_subcommand("verify", "Re-check a report");
    s_verify->add_option("report", verify_path, "Path to report.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    const auto started = std::chrono::system_clock::now();
    try {
        Context ctx;
        ctx.threads = default_threads();
        ctx.precision = precision_bits_from_env();
        if (s_verify->parsed()) {
            const VerifyResult r = verify_report(verify_path);
            std::cout << to_json(r).dump(2) << "\n";
            return r.ok ? exit_ok : exit_verify_failed;
        }
        json config;
        if (s_orbit->parsed()) return finish("orbit", out_dir, ctx, started, config, cmd_orbit(orbit, ctx, config));
        if (s_pre->parsed()) return finish("preperiodic", out_dir, ctx, started, config, cmd_preperiodic(pre, ctx, config));
        if (s_scan->parsed()) return finish("scan-sa", out_dir, ctx, started, config, cmd_scan(scan, ctx, config));
        if (s_sigma->parsed()) return finish("sigma", out_dir, ctx, started, config, cmd_sigma(sigma, ctx, config));
        if (s_special->parsed()) return finish("special", out_dir, ctx, started, config, cmd_special(special, ctx, config));
        if (s_bounds->parsed()) return finish("bounds", out_dir, ctx, started, config, cmd_bounds(bounds, ctx, config));
        if (s_lox->parsed()) return finish("loxton", out_dir, ctx, started, config, cmd_loxton(lox, ctx, config));
        if (s_fz->parsed()) return finish("fz-check", out_dir, ctx, started, config, cmd_fz(fz, ctx, config));
        if (s_growth->parsed()) return finish("growth", out_dir, ctx, started, config, cmd_growth(growth, ctx, config));
    } catch (const ConfigError& e) {
        std::cerr << "cyclodyn: " << e.what() << "\n";
        return exit_config;
    } catch (const PreconditionViolated& e) {
        std::cerr << "cyclodyn: precondition: " << e.what() << "\n";
        return exit_config;
    } catch (const ParseError& e) {
        std::cerr << "cyclodyn: " << e.what() << "\n";
        return exit_config;
    } catch (const TreeBudgetExceeded& e) {
        std::cerr << "cyclodyn: budget exhausted: " << e.what() << "\n";
        return exit_budget;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "cyclodyn: budget exhausted: " << e.what() << "\n";
        return exit_budget;
    }
    return exit_config;
}

}  // namespace cyclodyn::cli
