#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cyclodyn_cli/json_io.hpp"

namespace cyclodyn::cli {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_config = 2, exit_budget = 3 };

// Missing report or manifest.
class NotFound : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

struct VerifyResult {
    bool ok = false;
    bool hash_ok = false;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

// Recomputes the report hash against the latest manifest run and re-runs
// every exact certificate embedded in the report.
VerifyResult verify_report(const std::filesystem::path& report_path);
json to_json(const VerifyResult& r);

// Reads CYCLODYN_PRECISION_BITS (default 128); throws ConfigError when set
// to anything but a positive integer.
unsigned precision_bits_from_env();

int run_cli(int argc, char** argv);

}  // namespace cyclodyn::cli
