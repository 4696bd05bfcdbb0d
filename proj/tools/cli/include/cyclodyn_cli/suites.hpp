#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclodyn_cli/json_io.hpp"

namespace cyclodyn::cli {

// Randomized instance suites. Instance i is drawn from its own generator
// seeded by (seed, i), so results do not depend on the thread count.

struct PadicInstance {
    std::vector<CPoly> generators;  // rational coefficients
    Rational a;
    Integer p;
    Word word;
    std::optional<PadicGrowthReport> report;
    std::string error;  // set when the check threw
};

struct ArchInstance {
    std::vector<CPoly> generators;
    CycloNum a;
    unsigned embedding = 1;
    Word word;
    std::optional<ArchGrowthReport> report;
    std::string error;
};

struct GrowthSuite {
    std::vector<PadicInstance> padic;
    std::vector<ArchInstance> arch;
    std::size_t padic_violations = 0;
    std::size_t arch_violations = 0;
};

PadicInstance make_padic_instance(std::uint64_t seed, std::size_t index);
ArchInstance make_arch_instance(std::uint64_t seed, std::size_t index);
GrowthSuite run_growth_suite(std::uint64_t seed, std::size_t padic_count, std::size_t arch_count, unsigned threads);
json to_json(const GrowthSuite& s);

struct FZInstance {
    CPoly g;
    LaurentPoly q;
    std::optional<FZReport> report;
    std::string error;
};

struct FZSuite {
    std::vector<FZInstance> instances;
    std::size_t violations = 0;
};

// deg g in 1..10; q with 1..5 terms, exponents in [-6, 6], never of the
// excluded trinomial form.
FZInstance make_fz_instance(std::uint64_t seed, std::size_t index);
FZSuite run_fz_suite(std::uint64_t seed, std::size_t count, unsigned threads);
json to_json(const FZSuite& s);

}  // namespace cyclodyn::cli
