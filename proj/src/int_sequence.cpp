#include "ctrans/int_sequence.hpp"

#include <sstream>

namespace ctrans {

IntSequence::IntSequence(std::initializer_list<long> t) {
    for (long v : t) terms.emplace_back(v);
}

IntSequence IntSequence::prefix(std::size_t n) const {
    if (n > terms.size())
        throw InsufficientTerms("need " + std::to_string(n) + " terms, have " + std::to_string(terms.size()));
    return IntSequence(std::vector<BigInt>(terms.begin(), terms.begin() + static_cast<long>(n)));
}

IntSequence IntSequence::from_series(const PowerSeries& s) { return IntSequence(s.integer_coeffs()); }

PowerSeries IntSequence::to_series() const {
    if (terms.empty()) throw InsufficientTerms("empty sequence");
    return PowerSeries::from_integers(terms);
}

nlohmann::json IntSequence::to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : terms) a.push_back(t.get_str());
    return a;
}

IntSequence IntSequence::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("sequence JSON must be an array", 0);
    IntSequence s;
    for (const auto& v : j) {
        if (v.is_string()) s.terms.push_back(parse_bigint(v.get<std::string>()));
        else if (v.is_number_integer()) s.terms.push_back(parse_bigint(v.dump()));
        else throw ParseError("sequence entries must be integers or decimal strings", 0);
    }
    return s;
}

std::string IntSequence::to_csv() const {
    std::ostringstream os;
    for (const auto& t : terms) os << t.get_str() << '\n';
    return os.str();
}

std::string IntSequence::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? ", " : "") << terms[i].get_str();
    return os.str();
}

IntSequence IntSequence::parse(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return IntSequence();
    if (text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("malformed sequence JSON: ") + e.what(), e.byte);
        }
        return from_json(j);
    }
    IntSequence s;
    std::string item;
    for (char ch : text) {
        if (ch == ',' || ch == '\n') {
            if (item.find_first_not_of(" \t\r") != std::string::npos) s.terms.push_back(parse_bigint(item));
            item.clear();
        } else {
            item += ch;
        }
    }
    if (item.find_first_not_of(" \t\r") != std::string::npos) s.terms.push_back(parse_bigint(item));
    return s;
}

}  // namespace ctrans
