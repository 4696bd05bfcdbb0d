#include "cyclodyn_cli/report.hpp"

#include <openssl/evp.h>

#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cyclodyn::cli {

const char* tool_version() { return CYCLODYN_VERSION; }

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

std::string serialize_report(const json& report) { return report.dump(2) + "\n"; }

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
    const std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::string write_run(const std::filesystem::path& dir, const json& report, const ManifestEntry& entry) {
    std::filesystem::create_directories(dir);
    const std::string body = serialize_report(report);
    const std::string hash = sha256_hex(body);
    {
        std::ofstream out(dir / "report.json", std::ios::binary | std::ios::trunc);
        out << body;
        if (!out) throw std::runtime_error("cannot write " + (dir / "report.json").string());
    }

    json manifest = {{"runs", json::array()}};
    const auto mpath = dir / "manifest.json";
    if (std::filesystem::exists(mpath)) {
        std::ifstream in(mpath);
        json old = json::parse(in, nullptr, false);
        if (!old.is_discarded() && old.contains("runs") && old["runs"].is_array()) manifest = std::move(old);
    }
    manifest["runs"].push_back({{"tool_version", tool_version()},
                                {"command", entry.command},
                                {"config", entry.config},
                                {"threads", entry.threads},
                                {"started", entry.started},
                                {"finished", entry.finished},
                                {"outcome", entry.outcome},
                                {"report_sha256", hash}});
    std::ofstream out(mpath, std::ios::trunc);
    out << manifest.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write " + mpath.string());
    return hash;
}

}  // namespace cyclodyn::cli
