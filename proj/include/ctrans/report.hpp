#pragma once

#include "ctrans/int_sequence.hpp"
#include "ctrans/power_series.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ctrans {

using Params = std::vector<std::pair<std::string, long>>;

struct VerificationReport {
    std::string claim_id;
    Params parameters;
    std::vector<Rational> computed;
    std::vector<Rational> expected;
    // Canonical texts compared alongside the prefixes (fit route); empty otherwise.
    std::string computed_form;
    std::string expected_form;
    bool pass = false;
    int prefix_length = 0;
    std::string note;

    nlohmann::json to_json() const;
};

using Reports = std::vector<VerificationReport>;

// pass iff the prefixes are equal (and the forms, when given).
VerificationReport make_report(std::string claim_id, Params params, std::vector<Rational> computed,
                               std::vector<Rational> expected, std::string note = "",
                               std::string computed_form = "", std::string expected_form = "");

std::vector<Rational> first_terms(const PowerSeries& s, int count);
std::vector<Rational> first_terms(const IntSequence& s, int count);
std::vector<Rational> rationals(std::initializer_list<long> values);
std::vector<Rational> rationals(const std::vector<BigInt>& values);

std::size_t count_failures(const Reports& reports);
std::string reports_to_jsonl(const Reports& reports);
std::string reports_to_text(const Reports& reports);
std::string reports_to_csv(const Reports& reports);

// Plain table used by the `table` command.
struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    nlohmann::json to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

}  // namespace ctrans
