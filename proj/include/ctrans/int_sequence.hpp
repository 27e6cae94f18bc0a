#pragma once

#include "ctrans/power_series.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ctrans {

struct IntSequence {
    std::vector<BigInt> terms;

    IntSequence() = default;
    explicit IntSequence(std::vector<BigInt> t) : terms(std::move(t)) {}
    IntSequence(std::initializer_list<long> t);

    std::size_t size() const { return terms.size(); }
    const BigInt& operator[](std::size_t i) const { return terms[i]; }
    IntSequence prefix(std::size_t n) const;

    // Throws MathError if some coefficient is not an integer.
    static IntSequence from_series(const PowerSeries& s);
    PowerSeries to_series() const;

    nlohmann::json to_json() const;
    static IntSequence from_json(const nlohmann::json& j);
    std::string to_csv() const;
    std::string to_text() const;
    // Accepts a JSON array, one value per line, or a comma separated list.
    static IntSequence parse(const std::string& text);

    friend bool operator==(const IntSequence& a, const IntSequence& b) { return a.terms == b.terms; }
};

}  // namespace ctrans
