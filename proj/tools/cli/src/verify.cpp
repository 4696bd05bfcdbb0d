#include <fstream>
#include <sstream>

#include "cyclodyn_cli/commands.hpp"
#include "cyclodyn_cli/report.hpp"

namespace cyclodyn::cli {

namespace {

std::string read_bytes(const std::filesystem::path& p, const std::string& field) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw NotFound(field, "cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Checker {
  public:
    explicit Checker(VerifyResult& r) : r_(r) {}

    void check(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok) r_.failures.push_back(what);
    }

    // Runs fn; a thrown exception counts as a failed check.
    template <class Fn>
    void guarded(const std::string& what, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }

  private:
    VerifyResult& r_;
};

CycloNum elem(const json& j, const std::string& field) { return element_from_json(j, field); }

void verify_orbit(const json& cfg, const json& res, Checker& ck) {
    if (!res.contains("levels")) return;
    const PolySystem sys = system_from_json(cfg.at("system"));
    const CycloNum alpha = elem(cfg.at("alpha"), "config.alpha");
    const json& levels = res.at("levels");
    for (std::size_t k = 0; k < levels.size(); ++k)
        for (const auto& node : levels[k]) {
            const CycloNum v = elem(node.at("value"), "value");
            for (const auto& wj : node.at("words")) {
                const Word w = word_from_json(wj, "word");
                ck.check(w.size() == k && evaluate_word(sys, w, alpha) == v, "orbit level " + std::to_string(k) + " word " + to_string(w));
            }
        }
}

void verify_preperiodic(const json& cfg, const json& res, Checker& ck) {
    const PolySystem sys = system_from_json(cfg.at("system"));
    for (const auto& item : res.at("alphas")) {
        if (item.at("certificate").is_null()) continue;
        const CycloNum alpha = elem(item.at("alpha"), "alpha");
        const CollisionCertificate c = certificate_from_json(item.at("certificate"), "certificate");
        ck.check(verify_certificate(sys, alpha, c), "collision certificate for " + to_string(alpha));
    }
}

void verify_special(const json& cfg, const json& res, Checker& ck) {
    const PolySystem sys = system_from_json(cfg.at("system"));
    const json& findings = res.at("findings");
    for (std::size_t i = 0; i < findings.size(); ++i) {
        const SpecialFinding f = finding_from_json(findings[i], "findings[" + std::to_string(i) + "]");
        ck.check(verify_finding(sys, f), "finding " + std::to_string(i));
    }
    ck.check((res.at("verdict") == "special") == !findings.empty(), "verdict agrees with findings");
}

void verify_loxton(const json& cfg, const json& res, Checker& ck) {
    if (res.at("certificate").is_null()) return;
    const LoxtonCertificate c = loxton_from_json(res.at("certificate"), "certificate");
    ck.check(c.target == elem(cfg.at("alpha"), "config.alpha"), "Loxton target matches alpha");
    ck.check(verify_loxton_certificate(c), "Loxton sum");
}

void verify_sigma(const json& cfg, const json& res, Checker& ck) {
    if (!res.contains("words")) return;
    const PolySystem sys = system_from_json(cfg.at("system"));
    for (const auto& per : res.at("words")) {
        const Word w = word_from_json(per.at("word"), "word");
        const CPoly fw = compose_word(sys, w);
        for (const auto& c : per.at("candidates")) {
            CPoly expect = fw;
            for (const auto& term : c.at("combination"))
                expect = expect - elem(term.at("gamma"), "gamma") * compose_word(sys, word_from_json(term.at("word"), "word"));
            ck.check(expect == poly_from_json(c.at("defining_poly"), "defining_poly"),
                     "defining polynomial for word " + to_string(w));
        }
    }
}

void verify_bounds(const json& cfg, const json& res, Checker& ck) {
    if (res.contains("error")) return;
    const PolySystem sys = system_from_json(cfg.at("system"));
    const Rational A = rational_from_json(cfg.at("A"), "A");
    const json& lp = cfg.at("loxton");
    LoxtonParams p;
    p.E_size = Integer(lp.at("E_size").get<std::string>());
    p.B = rational_from_json(lp.at("B"), "B");
    p.R_scale = rational_from_json(lp.at("R_scale"), "R_scale");
    p.R_exponent = rational_from_json(lp.at("R_exponent"), "R_exponent");
    const unsigned prec = cfg.at("precision_bits").get<unsigned>();
    const MBound mb = bound_M(sys, A, p, prec);
    ck.check(res.at("L") == to_json(mb.L), "L");
    ck.check(res.at("M") == mb.M, "M");
    if (res.contains("D")) ck.check(res.at("D") == bound_D(sys).get_str(), "D");
    if (res.contains("m")) ck.check(res.at("m") == choose_m(sys), "m");
    if (res.contains("K")) ck.check(res.at("K") == to_json(bound_K(sys, A, prec)), "K");
}

void verify_scan(const json& cfg, const json& res, Checker& ck) {
    const PolySystem sys = system_from_json(cfg.at("system"));
    const Rational A = rational_from_json(cfg.at("A"), "A");
    for (const auto& h : res.at("hits")) {
        const CycloNum alpha = elem(h.at("alpha"), "alpha");
        const CycloNum v = elem(h.at("value"), "value");
        const Word w = word_from_json(h.at("word"), "word");
        ck.check(evaluate_word(sys, w, alpha) == v && is_algebraic_integer(v) && house_leq(v, A) == Tri::yes,
                 "scan hit " + to_string(alpha) + " " + to_string(w));
    }
}

void verify_fz(const json& cfg, const json& res, Checker& ck) {
    auto one = [&](const json& gj, const json& qj, const json& r, const std::string& what) {
        if (r.contains("error")) return;
        const FZReport rep = fz_bound_check(poly_from_json(gj, "g"), laurent_from_json(qj, "q"));
        ck.check(r.at("ell") == rep.ell && r.at("deg_g") == rep.deg_g && r.at("pass") == rep.pass, what);
    };
    if (cfg.contains("random")) {
        const json& inst = res.at("instances");
        for (std::size_t i = 0; i < inst.size(); ++i)
            one(inst[i].at("g"), inst[i].at("q"), inst[i], "fz instance " + std::to_string(i));
    } else {
        one(cfg.at("g"), cfg.at("q"), res, "fz check");
    }
}

void verify_growth(const json& cfg, const json& res, Checker& ck) {
    auto padic = [&](const json& sys_j, const json& a, const json& p, const json& w, const json& r, const std::string& what) {
        if (r.contains("error")) return;
        const PadicGrowthReport rep = growth_check_padic(system_from_json(sys_j), elem(a, "a").rational_value(),
                                                         Integer(p.get<std::string>()), word_from_json(w, "word"));
        ck.check(r.at("valuations") == rep.valuations && r.at("recurrence_holds") == rep.recurrence_holds, what);
    };
    if (cfg.contains("random")) {
        const json& inst = res.at("padic").at("instances");
        for (std::size_t i = 0; i < inst.size(); ++i)
            padic(inst[i].at("system"), inst[i].at("a"), inst[i].at("p"), inst[i].at("word"), inst[i],
                  "p-adic instance " + std::to_string(i));
    } else if (cfg.contains("p")) {
        padic(cfg.at("system"), cfg.at("alpha"), cfg.at("p"), cfg.at("word"), res, "p-adic growth");
    }
}

}  // namespace

VerifyResult verify_report(const std::filesystem::path& report_path) {
    VerifyResult r;
    const std::string body = read_bytes(report_path, "report");
    const std::string manifest_text = read_bytes(report_path.parent_path() / "manifest.json", "manifest");
    Checker ck(r);

    const json manifest = json::parse(manifest_text, nullptr, false);
    if (manifest.is_discarded() || !manifest.contains("runs") || manifest["runs"].empty()) {
        ck.check(false, "manifest has no runs");
        return r;
    }
    const json& last = manifest["runs"].back();
    r.hash_ok = last.contains("report_sha256") && last["report_sha256"] == sha256_hex(body);
    ck.check(r.hash_ok, "report hash matches the latest manifest run");

    const json report = json::parse(body, nullptr, false);
    if (report.is_discarded()) {
        ck.check(false, "report is not valid JSON");
        return r;
    }
    ck.guarded("certificates", [&] {
        const std::string cmd = report.at("command").get<std::string>();
        const json& cfg = report.at("config");
        const json& res = report.at("result");
        if (cmd == "orbit") verify_orbit(cfg, res, ck);
        else if (cmd == "preperiodic") verify_preperiodic(cfg, res, ck);
        else if (cmd == "special") verify_special(cfg, res, ck);
        else if (cmd == "loxton") verify_loxton(cfg, res, ck);
        else if (cmd == "sigma") verify_sigma(cfg, res, ck);
        else if (cmd == "bounds") verify_bounds(cfg, res, ck);
        else if (cmd == "scan-sa") verify_scan(cfg, res, ck);
        else if (cmd == "fz-check") verify_fz(cfg, res, ck);
        else if (cmd == "growth") verify_growth(cfg, res, ck);
        else ck.check(false, "unknown command " + cmd);
    });
    r.ok = r.failures.empty();
    return r;
}

json to_json(const VerifyResult& r) {
    return {{"ok", r.ok}, {"hash_ok", r.hash_ok}, {"checks", r.checks}, {"failures", r.failures}};
}

}  // namespace cyclodyn::cli
