// One PASS/FAIL line per acceptance criterion. Usage: acceptance [--criterion N]

#include "../property_checks.hpp"
#include "ctrans/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace ctrans;

namespace {

struct Outcome {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failed;
};

bool has(const std::string& id, const std::string& part) { return id.find(part) != std::string::npos; }
bool starts(const std::string& id, const std::string& prefix) { return id.rfind(prefix, 0) == 0; }

// Corrected companions document misprints; they are never evidence for a criterion.
Outcome tally(const Reports& reports, const std::function<bool(const std::string&)>& include) {
    Outcome o;
    for (const auto& r : reports) {
        if (has(r.claim_id, ".corrected") || !include(r.claim_id)) continue;
        ++o.checks;
        if (!r.pass) {
            ++o.failures;
            if (std::find(o.failed.begin(), o.failed.end(), r.claim_id) == o.failed.end()) o.failed.push_back(r.claim_id);
        }
    }
    return o;
}

Reports section(const std::string& id) { return run_section(id, SectionOptions{}); }

bool any(const std::string&) { return true; }

Outcome construction_example() { return tally(section("3"), any); }

Outcome simple_tables() { return tally(section("4"), any); }

Outcome linear_ratio() { return tally(section("5"), any); }

Outcome quadratic_denominator() { return tally(section("6"), any); }

Outcome invert_and_cubic() {
    Reports all = section("6x2");
    Reports cubic = section("7");
    all.insert(all.end(), cubic.begin(), cubic.end());
    return tally(all, [](const std::string& id) {
        if (starts(id, "invert.")) return true;
        return id == "cubic.closed-form" || id == "cubic.closed-form-squared" || id == "cubic.ratio-to-invert-image" ||
               id == "cubic.identity" || starts(id, "cubic.example.image") || starts(id, "cubic.example.input") ||
               starts(id, "cubic.example.catalan");
    });
}

Outcome lucas() { return tally(section("8"), any); }

Outcome aerated() {
    return tally(section("9"), [](const std::string& id) { return !starts(id, "aerated.orthogonal-quotient"); });
}

Outcome narayana() { return tally(section("10"), any); }

Outcome trees() {
    return tally(section("trees"), [](const std::string& id) { return !has(id, "hankel") && !has(id, "binomial-source"); });
}

Outcome equal_hankel() {
    return tally(section("equal-hankel"), [](const std::string& id) { return id != "equal-hankel.doubled-image"; });
}

Outcome property_suites() {
    Outcome o;
    for (const auto& suite : properties::all_properties()) {
        properties::PropertyResult r = suite();
        ++o.checks;
        if (!r.passed()) {
            ++o.failures;
            o.failed.push_back(r.name + " (" + r.first_failure + ")");
        }
    }
    return o;
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

const std::vector<Criterion> kCriteria = {
    {"construction_example", construction_example},
    {"simple_transform_tables", simple_tables},
    {"linear_ratio_family_conjecture", linear_ratio},
    {"linear_over_quadratic_family_conjecture", quadratic_denominator},
    {"invert_and_cubic_family_identities", invert_and_cubic},
    {"lucas_type_family_conjecture", lucas},
    {"aerated_family", aerated},
    {"narayana_preimages", narayana},
    {"tree_mutation_table", trees},
    {"equal_hankel_transforms", equal_hankel},
    {"property_suites", property_suites},
};

bool report(std::size_t index) {
    const Criterion& c = kCriteria[index];
    Outcome o;
    std::string error;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        error = e.what();
    }
    bool pass = error.empty() && o.checks > 0 && o.failures == 0;
    std::cout << (pass ? "PASS" : "FAIL") << " " << index + 1 << " " << c.name << ": " << o.checks - o.failures << "/"
              << o.checks << " checks";
    if (!error.empty()) std::cout << "; error: " << error;
    for (std::size_t i = 0; i < o.failed.size(); ++i) std::cout << (i ? ", " : "; failed claims: ") << o.failed[i];
    std::cout << "\n";
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> selected;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            long n = std::strtol(argv[++i], nullptr, 10);
            if (n < 1 || n > static_cast<long>(kCriteria.size())) {
                std::cerr << "criterion must be in 1.." << kCriteria.size() << "\n";
                return 2;
            }
            selected.push_back(static_cast<std::size_t>(n - 1));
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (selected.empty())
        for (std::size_t i = 0; i < kCriteria.size(); ++i) selected.push_back(i);
    bool ok = true;
    for (std::size_t i : selected) ok = report(i) && ok;
    return ok ? 0 : 1;
}
