#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cyclodyn/cyclodyn.hpp"

namespace cyclodyn::cli {

using json = nlohmann::json;

// Bad input; `field` names the offending item, e.g. "generators[1][0]".
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

// Element syntax: integers, z(n), + - * / ^, parentheses.
CycloNum element_from_string(const std::string& text, const std::string& field);
// Reports write {"conductor": n, "coords": ["p/q", ...]} at the canonical
// conductor; readers also accept the text syntax.
json to_json(const CycloNum& a);
CycloNum element_from_json(const json& j, const std::string& field);
json to_json(const Rational& q);
json to_json(const Word& w);
json to_json(const CPoly& p);  // coefficient strings, low to high
json to_json(const ComplexBox& b);
json to_json(const HouseInterval& h);
json to_json(const LinearMap& l);
json to_json(const LaurentPoly& q);

Rational rational_from_json(const json& j, const std::string& field);
Word word_from_json(const json& j, const std::string& field);
CPoly poly_from_json(const json& j, const std::string& field);
LinearMap linear_map_from_json(const json& j, const std::string& field);
LaurentPoly laurent_from_json(const json& j, const std::string& field);

// A system file is a JSON array of polynomials, each an array of
// coefficient strings from degree 0 upward.
PolySystem system_from_json(const json& j, const std::string& field = "system");
json to_json(const PolySystem& sys);

json read_json_file(const std::filesystem::path& path, const std::string& field);
PolySystem load_system(const std::filesystem::path& path);

json to_json(const CollisionCertificate& c);
CollisionCertificate certificate_from_json(const json& j, const std::string& field);
json to_json(const SpecialFinding& f);
SpecialFinding finding_from_json(const json& j, const std::string& field);
json to_json(const LoxtonCertificate& c);
LoxtonCertificate loxton_from_json(const json& j, const std::string& field);

// "1,2,1" -> {1, 2, 1}; empty string -> empty word.
Word parse_word(const std::string& text, const std::string& field);

}  // namespace cyclodyn::cli
