#pragma once

#include "ctrans/hankel.hpp"
#include "ctrans/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctrans {

// Hankel prefix length used for termwise conjecture checks.
inline constexpr int kHankelPrefix = 10;
// Hankel terms handed to the rational fit; the 25% holdout needs the extra room.
inline constexpr int kFitTerms = 20;
inline constexpr int kFitMaxDegree = 6;

// N(n,k) = binom(n,k) binom(n+1,k) / (k+1).
class NarayanaTriangle {
public:
    explicit NarayanaTriangle(int rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    const BigInt& at(int n, int k) const { return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }
    BigInt row_sum(int n) const;
    // sum_k N(n,k) r^k with 0^0 = 1.
    BigInt polynomial(int n, long r) const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

// Hankel transform of the first 2*count-1 coefficients of an integral series.
IntSequence hankel_of(const PowerSeries& s, int count);

// Termwise and fitted comparison of a Hankel sequence against a claimed GF.
void check_hankel_gf(Reports& out, const std::string& claim_id, const Params& params, const PowerSeries& image,
                     const RationalGF& claimed, int prefix, const std::string& note = "",
                     int max_degree = kFitMaxDegree);

// The triangle construction with g = 1/(1-x), its displayed matrices and halves.
Reports verify_construction_example();
// Images and Hankel transforms of the simple sequences.
Reports verify_simple_tables(int prefix);

// g = (1+ax)/(1+bx)
Reports verify_linear_ratio_family(long a, long b, int prefix);
Reports verify_linear_ratio_examples(int prefix);

// g = (1+ax)/(1-bx^2)
Reports verify_quadratic_denominator_family(long a, long b, int prefix);
Reports verify_quadratic_denominator_examples(int prefix);

// g = (1+ax)/(1-x^2)
Reports verify_invert_family(long a, int prefix);
Reports verify_invert_examples(int prefix);

// g = (1+ax)/(1-x^3)
Reports verify_cubic_family(long a, int prefix);
Reports verify_cubic_examples(int prefix);

// g = (1-(r-2)x+x^2)/(1-sx-x^2)
Reports verify_lucas_family(long r, long s, int prefix);
Reports verify_lucas_examples(int prefix);

// g = (1+x^r)/(1-x^r)
Reports verify_aerated_family(long r, int prefix);
Reports verify_aerated_examples();

// Pre-images of the Narayana polynomial sequences, series to the given order.
Reports verify_narayana_preimage(long r, int order);
Reports verify_little_schroeder_preimage();

Reports verify_tree_table(int prefix);
Reports verify_equal_hankel(int prefix);

struct SectionOptions {
    std::optional<long> a, b, r, s;
    int prefix = kHankelPrefix;
    long grid_lo = -3;
    long grid_hi = 3;
    bool parallel = true;
};

// Section ids: 3, 4, 5, 6, 6x2, 7, 8, 9, 10, trees, equal-hankel, all.
const std::vector<std::string>& section_ids();
Reports run_section(const std::string& id, const SectionOptions& opts);

// Grid sweeps; each cell is independent, results ordered by parameters.
Reports sweep_linear_ratio(long lo, long hi, int prefix, bool parallel);
Reports sweep_quadratic_denominator(long lo, long hi, int prefix, bool parallel);
Reports sweep_lucas(long lo, long hi, int prefix, bool parallel);

// Tables reproduced by the `table` command: 4, 9, 11.
Table simple_transform_table(int prefix);
Table aerated_table(int max_r, int prefix);
Table tree_table(int prefix);

}  // namespace ctrans
