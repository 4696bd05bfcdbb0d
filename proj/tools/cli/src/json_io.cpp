#include "cyclodyn_cli/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cyclodyn::cli {

namespace {

const std::string& as_string(const json& j, const std::string& field) {
    if (!j.is_string()) throw ConfigError(field, "expected a string");
    return j.get_ref<const std::string&>();
}

}  // namespace

CycloNum element_from_string(const std::string& text, const std::string& field) {
    try {
        return canonicalize_conductor(parse_element(text));
    } catch (const Error& e) {
        throw ConfigError(field, std::string("cannot parse element \"") + text + "\": " + e.what());
    }
}

json to_json(const CycloNum& a_in) {
    const CycloNum a = canonicalize_conductor(a_in);
    json coords = json::array();
    for (const auto& c : a.coords()) coords.push_back(to_string(c));
    return {{"conductor", a.conductor()}, {"coords", std::move(coords)}};
}

CycloNum element_from_json(const json& j, const std::string& field) {
    if (j.is_string()) return element_from_string(j.get<std::string>(), field);
    if (j.is_number_integer()) return CycloNum(j.get<long>());
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coords"))
        throw ConfigError(field, "expected an element string or {\"conductor\", \"coords\"}");
    const json& n = j["conductor"];
    const json& c = j["coords"];
    if (!n.is_number_unsigned() || n.get<unsigned>() == 0) throw ConfigError(field + ".conductor", "expected a positive integer");
    const unsigned cond = n.get<unsigned>();
    if (!c.is_array() || c.size() != euler_phi(cond))
        throw ConfigError(field + ".coords", "expected phi(conductor) = " + std::to_string(euler_phi(cond)) + " coordinates");
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < c.size(); ++i) coords.push_back(rational_from_json(c[i], field + ".coords[" + std::to_string(i) + "]"));
    return canonicalize_conductor(CycloNum::from_coords(cond, std::move(coords)));
}
json to_json(const Rational& q) { return to_string(q); }

json to_json(const Word& w) {
    json out = json::array();
    for (unsigned i : w) out.push_back(i);
    return out;
}

json to_json(const CPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

json to_json(const ComplexBox& b) {
    return {{"re", {to_string(b.re_lo), to_string(b.re_hi)}}, {"im", {to_string(b.im_lo), to_string(b.im_hi)}}};
}

json to_json(const HouseInterval& h) { return {{"lo", to_string(h.lo)}, {"hi", to_string(h.hi)}}; }

json to_json(const LinearMap& l) { return {{"u", to_json(l.u)}, {"v", to_json(l.v)}}; }

json to_json(const LaurentPoly& q) {
    json out = json::object();
    for (const auto& [e, c] : q.terms()) out[std::to_string(e)] = to_json(c);
    return out;
}

Rational rational_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    try {
        return parse_rational(as_string(j, field));
    } catch (const Error& e) {
        throw ConfigError(field, e.what());
    }
}

Word word_from_json(const json& j, const std::string& field) {
    if (!j.is_array()) throw ConfigError(field, "expected an array of generator indices");
    Word w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned() || j[i].get<unsigned>() == 0)
            throw ConfigError(field + "[" + std::to_string(i) + "]", "expected a positive integer");
        w.push_back(j[i].get<unsigned>());
    }
    return w;
}

CPoly poly_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw ConfigError(field, "expected a non-empty array of coefficient strings");
    std::vector<CycloNum> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        c.push_back(element_from_json(j[i], f));
    }
    return CPoly(std::move(c));
}

LinearMap linear_map_from_json(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("u") || !j.contains("v")) throw ConfigError(field, "expected {\"u\", \"v\"}");
    LinearMap l{element_from_json(j["u"], field + ".u"), element_from_json(j["v"], field + ".v")};
    if (l.u.is_zero()) throw ConfigError(field + ".u", "must be nonzero");
    return l;
}

LaurentPoly laurent_from_json(const json& j, const std::string& field) {
    if (!j.is_object()) throw ConfigError(field, "expected an object mapping exponents to coefficients");
    std::map<long, CycloNum> terms;
    for (const auto& [key, val] : j.items()) {
        const std::string f = field + "[\"" + key + "\"]";
        long e = 0;
        std::size_t used = 0;
        try {
            e = std::stol(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != key.size()) throw ConfigError(f, "exponent must be an integer");
        if (terms.count(e)) throw ConfigError(f, "duplicate exponent");
        terms.emplace(e, element_from_json(val, f));
    }
    return LaurentPoly(terms);
}

PolySystem system_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw ConfigError(field, "expected a non-empty array of polynomials");
    std::vector<CPoly> gens;
    for (std::size_t i = 0; i < j.size(); ++i) gens.push_back(poly_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    try {
        return PolySystem(std::move(gens));
    } catch (const PreconditionViolated& e) {
        throw ConfigError(field, e.what());
    }
}

json to_json(const PolySystem& sys) {
    json out = json::array();
    for (const auto& g : sys.generators()) out.push_back(to_json(g));
    return out;
}

json read_json_file(const std::filesystem::path& path, const std::string& field) {
    std::ifstream in(path);
    if (!in) throw ConfigError(field, "cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ConfigError(field, path.string() + " is not valid JSON: " + e.what());
    }
}

PolySystem load_system(const std::filesystem::path& path) { return system_from_json(read_json_file(path, "system"), "system"); }

Word parse_word(const std::string& text, const std::string& field) {
    Word w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 1) throw ConfigError(field, "bad generator index \"" + item + "\"");
        w.push_back(static_cast<unsigned>(v));
    }
    return w;
}

}  // namespace cyclodyn::cli

namespace cyclodyn::cli {

namespace {

const json& member(const json& j, const char* key, const std::string& field) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(field, std::string("missing \"") + key + "\"");
    return j[key];
}

unsigned uint_member(const json& j, const char* key, const std::string& field) {
    const json& v = member(j, key, field);
    if (!v.is_number_unsigned()) throw ConfigError(field + "." + key, "expected a non-negative integer");
    return v.get<unsigned>();
}

std::string string_member(const json& j, const char* key, const std::string& field) {
    const json& v = member(j, key, field);
    if (!v.is_string()) throw ConfigError(field + "." + key, "expected a string");
    return v.get<std::string>();
}

}  // namespace

json to_json(const CollisionCertificate& c) {
    json j = {{"kind", c.kind == CollisionKind::pi ? "pi" : "pibar"}, {"witness_value", to_json(c.witness_value)}};
    if (c.kind == CollisionKind::pi) {
        j["base_word"] = to_json(c.base_word);
        j["loop_word"] = to_json(c.loop_word);
    } else {
        j["level_k"] = c.level_k;
        j["level_n"] = c.level_n;
        j["word_k"] = to_json(c.word_k);
        j["word_n"] = to_json(c.word_n);
    }
    return j;
}

CollisionCertificate certificate_from_json(const json& j, const std::string& field) {
    CollisionCertificate c;
    const std::string kind = string_member(j, "kind", field);
    if (kind != "pi" && kind != "pibar") throw ConfigError(field + ".kind", "expected pi or pibar");
    c.kind = kind == "pi" ? CollisionKind::pi : CollisionKind::pibar;
    c.witness_value = element_from_json(member(j, "witness_value", field), field + ".witness_value");
    if (c.kind == CollisionKind::pi) {
        c.base_word = word_from_json(member(j, "base_word", field), field + ".base_word");
        c.loop_word = word_from_json(member(j, "loop_word", field), field + ".loop_word");
    } else {
        c.level_k = uint_member(j, "level_k", field);
        c.level_n = uint_member(j, "level_n", field);
        c.word_k = word_from_json(member(j, "word_k", field), field + ".word_k");
        c.word_n = word_from_json(member(j, "word_n", field), field + ".word_n");
    }
    return c;
}

json to_json(const SpecialFinding& f) {
    json w = json::array();
    for (const auto& l : f.witnesses) w.push_back(to_json(l));
    json j = {{"condition", f.condition},
              {"indices", f.indices},
              {"form", to_string(f.form)},
              {"sign", f.sign},
              {"witnesses", std::move(w)}};
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

SpecialFinding finding_from_json(const json& j, const std::string& field) {
    SpecialFinding f;
    f.condition = static_cast<int>(uint_member(j, "condition", field));
    f.indices = word_from_json(member(j, "indices", field), field + ".indices");
    const std::string form = string_member(j, "form", field);
    if (form != "power" && form != "cheb") throw ConfigError(field + ".form", "expected power or cheb");
    f.form = form == "power" ? Form::power : Form::cheb;
    const json& sign = member(j, "sign", field);
    if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1))
        throw ConfigError(field + ".sign", "expected 1 or -1");
    f.sign = sign.get<int>();
    const json& w = member(j, "witnesses", field);
    if (!w.is_array()) throw ConfigError(field + ".witnesses", "expected an array");
    for (std::size_t i = 0; i < w.size(); ++i)
        f.witnesses.push_back(linear_map_from_json(w[i], field + ".witnesses[" + std::to_string(i) + "]"));
    if (j.contains("note") && j["note"].is_string()) f.note = j["note"].get<std::string>();
    return f;
}

json to_json(const LoxtonCertificate& c) {
    json terms = json::array();
    for (const auto& t : c.terms) terms.push_back(to_json(t));
    return {{"target", to_json(c.target)},
            {"order", c.order},
            {"exponents", c.exponents},
            {"terms", std::move(terms)},
            {"b", c.b()}};
}

LoxtonCertificate loxton_from_json(const json& j, const std::string& field) {
    LoxtonCertificate c;
    c.target = element_from_json(member(j, "target", field), field + ".target");
    c.order = uint_member(j, "order", field);
    if (c.order == 0) throw ConfigError(field + ".order", "must be positive");
    const json& e = member(j, "exponents", field);
    const json& t = member(j, "terms", field);
    if (!e.is_array() || !t.is_array() || e.size() != t.size())
        throw ConfigError(field, "exponents and terms must be arrays of equal length");
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string f = field + ".exponents[" + std::to_string(i) + "]";
        if (!e[i].is_number_unsigned()) throw ConfigError(f, "expected a non-negative integer");
        c.exponents.push_back(e[i].get<unsigned>());
        c.terms.push_back(element_from_json(t[i], field + ".terms[" + std::to_string(i) + "]"));
    }
    return c;
}

}  // namespace cyclodyn::cli
