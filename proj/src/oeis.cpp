#include "ctrans/oeis.hpp"

#include <httplib.h>
#include <openssl/sha.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace ctrans {

namespace {

constexpr auto kMinInterval = std::chrono::seconds(1);
constexpr std::size_t kRecommendedTerms = 6;

class HttplibTransport : public HttpTransport {
public:
    std::optional<std::string> get(const std::string& path) override {
        httplib::SSLClient cli("oeis.org", 443);
        cli.set_connection_timeout(10);
        cli.set_read_timeout(20);
        auto res = cli.Get(path);
        if (!res || res->status != 200) return std::nullopt;
        return res->body;
    }
};

std::string format_id(long number) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "A%06ld", number);
    return buf;
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

std::string to_string(OeisSource s) {
    switch (s) {
        case OeisSource::Cache: return "cache";
        case OeisSource::Network: return "network";
        case OeisSource::None: return "none";
    }
    return "none";
}

nlohmann::json OeisResult::to_json() const {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& x : matches) m.push_back({{"id", x.id}, {"name", x.name}});
    nlohmann::json j = {{"query_terms", query.to_json()},
                        {"matches", m},
                        {"source", to_string(source)},
                        {"status", identified() ? "identified" : "unidentified"}};
    if (!message.empty()) j["message"] = message;
    return j;
}

std::unique_ptr<HttpTransport> make_oeis_transport() { return std::make_unique<HttplibTransport>(); }

std::string oeis_query(const IntSequence& prefix) {
    std::string q;
    for (std::size_t i = 0; i < prefix.size(); ++i) q += (i ? "," : "") + prefix[i].get_str();
    return q;
}

std::string oeis_cache_key(const std::string& query) {
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(query.data()), query.size(), digest);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned char c : digest) {
        out += hex[c >> 4];
        out += hex[c & 15];
    }
    return out;
}

std::vector<OeisMatch> parse_oeis_response(const std::string& body) {
    nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("OEIS response is not valid JSON");
    const nlohmann::json* results = &j;
    if (j.is_object()) {
        auto it = j.find("results");
        if (it == j.end() || it->is_null()) return {};
        results = &*it;
    }
    if (!results->is_array()) return {};
    std::vector<OeisMatch> out;
    for (const auto& r : *results) {
        if (!r.is_object() || !r.contains("number")) continue;
        out.push_back({format_id(r["number"].get<long>()), r.value("name", std::string())});
    }
    return out;
}

OeisClient::OeisClient(OeisMode mode, std::filesystem::path cache_dir, std::unique_ptr<HttpTransport> transport)
    : mode_(mode), cache_dir_(std::move(cache_dir)), transport_(std::move(transport)) {
    if (mode_ == OeisMode::Online && !transport_) transport_ = make_oeis_transport();
}

OeisResult OeisClient::lookup(const IntSequence& prefix) {
    OeisResult result;
    result.query = prefix;
    std::string query = oeis_query(prefix);
    std::filesystem::path file = cache_dir_ / (oeis_cache_key(query) + ".json");
    std::string warn = prefix.size() < kRecommendedTerms ? "fewer than 6 terms; matches may be spurious" : "";

    std::optional<std::string> body = read_file(file);
    if (body) {
        result.source = OeisSource::Cache;
    } else if (mode_ == OeisMode::Offline) {
        result.message = "cache miss in offline mode";
        return result;
    } else {
        if (last_request_) {
            auto wait = *last_request_ + kMinInterval - std::chrono::steady_clock::now();
            if (wait > std::chrono::steady_clock::duration::zero()) std::this_thread::sleep_for(wait);
        }
        last_request_ = std::chrono::steady_clock::now();
        body = transport_->get("/search?q=" + query + "&fmt=json");
        if (!body) {
            result.message = "network request failed";
            return result;
        }
        result.source = OeisSource::Network;
        std::error_code ec;
        std::filesystem::create_directories(cache_dir_, ec);
        std::ofstream out(file, std::ios::binary);
        out << *body;
    }
    try {
        result.matches = parse_oeis_response(*body);
    } catch (const std::exception& e) {
        result.message = e.what();
        return result;
    }
    result.message = result.matches.empty() ? "no matches" : warn;
    return result;
}

}  // namespace ctrans
