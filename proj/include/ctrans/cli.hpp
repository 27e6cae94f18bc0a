#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ctrans::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitMath = 4;
inline constexpr int kExitVerification = 5;

struct CliConfig {
    int order = 24;
    std::string output_format = "json";  // json | csv | text
    std::string oeis_mode = "offline";   // offline | online
    std::string cache_dir;
    bool strict = false;
    bool timestamp = true;
};

// Default configuration with CTRANS_ORDER and CTRANS_CACHE_DIR applied.
CliConfig config_from_environment();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, const CliConfig& defaults, std::ostream& out, std::ostream& err);

}  // namespace ctrans::cli
