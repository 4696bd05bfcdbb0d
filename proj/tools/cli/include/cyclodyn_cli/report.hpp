#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>

#include "cyclodyn_cli/json_io.hpp"

namespace cyclodyn::cli {

const char* tool_version();

std::string sha256_hex(std::string_view bytes);

// Canonical byte form of a report: keys sorted, two-space indent, trailing
// newline. The manifest hash is taken over exactly these bytes.
std::string serialize_report(const json& report);

std::string utc_timestamp(std::chrono::system_clock::time_point t);

struct ManifestEntry {
    std::string command;
    json config;
    unsigned threads = 1;
    std::string started;
    std::string finished;
    std::string outcome;
};

// Writes <dir>/report.json and appends a run to <dir>/manifest.json.
// Returns the report hash.
std::string write_run(const std::filesystem::path& dir, const json& report, const ManifestEntry& entry);

}  // namespace cyclodyn::cli
