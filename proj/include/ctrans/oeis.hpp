#pragma once

#include "ctrans/int_sequence.hpp"

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ctrans {

struct OeisMatch {
    std::string id;  // A-number, e.g. A000108
    std::string name;
};

enum class OeisSource { Cache, Network, None };

struct OeisResult {
    IntSequence query;
    std::vector<OeisMatch> matches;
    OeisSource source = OeisSource::None;
    std::string message;  // why the result is unidentified, or a short-prefix warning

    bool identified() const { return !matches.empty(); }
    nlohmann::json to_json() const;
};

std::string to_string(OeisSource s);

// GET path on the search host; returns the body or nullopt on failure.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual std::optional<std::string> get(const std::string& path) = 0;
};

// HTTPS transport to oeis.org.
std::unique_ptr<HttpTransport> make_oeis_transport();

enum class OeisMode { Offline, Online };

// Comma separated terms, the query string sent to the search endpoint.
std::string oeis_query(const IntSequence& prefix);
// Hex SHA-256 of the query; names the cache file.
std::string oeis_cache_key(const std::string& query);
// Accepts both the bare array and the {"results": [...]} response shapes.
std::vector<OeisMatch> parse_oeis_response(const std::string& body);

class OeisClient {
public:
    OeisClient(OeisMode mode, std::filesystem::path cache_dir, std::unique_ptr<HttpTransport> transport = nullptr);

    OeisResult lookup(const IntSequence& prefix);

private:
    OeisMode mode_;
    std::filesystem::path cache_dir_;
    std::unique_ptr<HttpTransport> transport_;
    std::optional<std::chrono::steady_clock::time_point> last_request_;
};

}  // namespace ctrans
