#include "ctrans/report.hpp"

#include <algorithm>
#include <sstream>

namespace ctrans {

namespace {

std::string join(const std::vector<Rational>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << to_string(v[i]);
    return os.str();
}

std::string params_text(const Params& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i].first << "=" << p[i].second;
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    auto arr = [](const std::vector<Rational>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : v) a.push_back(to_string(r));
        return a;
    };
    nlohmann::json j = {{"claim_id", claim_id},
                        {"parameters", params},
                        {"computed_prefix", arr(computed)},
                        {"expected_prefix", arr(expected)},
                        {"status", pass ? "pass" : "fail"},
                        {"prefix_length", prefix_length},
                        {"note", note}};
    if (!computed_form.empty() || !expected_form.empty()) {
        j["computed_form"] = computed_form;
        j["expected_form"] = expected_form;
    }
    return j;
}

VerificationReport make_report(std::string claim_id, Params params, std::vector<Rational> computed,
                               std::vector<Rational> expected, std::string note, std::string computed_form,
                               std::string expected_form) {
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    r.parameters = std::move(params);
    r.prefix_length = static_cast<int>(expected.size());
    r.pass = computed == expected && computed_form == expected_form;
    r.computed = std::move(computed);
    r.expected = std::move(expected);
    r.note = std::move(note);
    r.computed_form = std::move(computed_form);
    r.expected_form = std::move(expected_form);
    return r;
}

std::vector<Rational> first_terms(const PowerSeries& s, int count) {
    if (count > s.order() + 1) throw InsufficientTerms("series of order " + std::to_string(s.order()) +
                                                       " has fewer than " + std::to_string(count) + " terms");
    return std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + count);
}

std::vector<Rational> first_terms(const IntSequence& s, int count) {
    if (static_cast<std::size_t>(count) > s.size())
        throw InsufficientTerms("sequence has fewer than " + std::to_string(count) + " terms");
    return std::vector<Rational>(s.terms.begin(), s.terms.begin() + count);
}

std::vector<Rational> rationals(std::initializer_list<long> values) {
    return std::vector<Rational>(values.begin(), values.end());
}

std::vector<Rational> rationals(const std::vector<BigInt>& values) {
    return std::vector<Rational>(values.begin(), values.end());
}

std::size_t count_failures(const Reports& reports) {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
}

std::string reports_to_jsonl(const Reports& reports) {
    std::ostringstream os;
    for (const auto& r : reports) os << r.to_json().dump() << '\n';
    return os.str();
}

std::string reports_to_text(const Reports& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass ? "PASS " : "FAIL ") << r.claim_id;
        if (!r.parameters.empty()) os << " [" << params_text(r.parameters) << "]";
        os << '\n';
        if (!r.expected.empty() || !r.computed.empty()) {
            os << "    computed: " << join(r.computed, ", ") << '\n';
            os << "    expected: " << join(r.expected, ", ") << '\n';
        }
        if (!r.computed_form.empty() || !r.expected_form.empty()) {
            os << "    computed form: " << r.computed_form << '\n';
            os << "    expected form: " << r.expected_form << '\n';
        }
        if (!r.note.empty()) os << "    note: " << r.note << '\n';
    }
    os << reports.size() - count_failures(reports) << " passed, " << count_failures(reports) << " failed\n";
    return os.str();
}

std::string reports_to_csv(const Reports& reports) {
    std::ostringstream os;
    os << "claim_id,parameters,status,prefix_length,computed_prefix,expected_prefix,computed_form,expected_form,note\n";
    for (const auto& r : reports) {
        os << csv_field(r.claim_id) << ',' << csv_field(params_text(r.parameters)) << ','
           << (r.pass ? "pass" : "fail") << ',' << r.prefix_length << ',' << csv_field(join(r.computed, " ")) << ','
           << csv_field(join(r.expected, " ")) << ',' << csv_field(r.computed_form) << ','
           << csv_field(r.expected_form) << ',' << csv_field(r.note) << '\n';
    }
    return os.str();
}

nlohmann::json Table::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = nlohmann::json::object();
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) r[columns[i]] = row[i];
        rows_json.push_back(r);
    }
    return {{"title", title}, {"columns", columns}, {"rows", rows_json}};
}

std::string Table::to_text() const {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    os << title << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < width.size(); ++i) {
            std::string c = i < cells.size() ? cells[i] : "";
            os << (i ? " | " : "") << c << std::string(width[i] - c.size(), ' ');
        }
        os << '\n';
    };
    line(columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : rows) line(row);
    return os.str();
}

std::string Table::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_field(columns[i]);
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
    }
    return os.str();
}

}  // namespace ctrans
