#pragma once

// Minimum Lee and Euclidean weights of Z4 codes: exhaustive enumeration over
// the Howell basis in reflected Gray order, low-weight scans that test every
// light vector for membership through syndromes, and table-style verification
// of claimed parameters.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rcodes/code.hpp"
#include "rcodes/packed.hpp"

namespace rcodes {

enum class WeightMethod { Enumeration, LowWeightScan, UpperBoundOnly };

const char* to_string(Metric m);
const char* to_string(WeightMethod m);
/// "lee" / "euclidean" (case-insensitive, also "L"/"E").
Metric parse_metric(const std::string& text);

struct WeightOptions {
    /// Largest code size enumerated exhaustively.
    std::uint64_t enumeration_cap = std::uint64_t{1} << 26;
    /// Largest number of candidate vectors tested by a low-weight scan.
    std::uint64_t scan_budget = std::uint64_t{1} << 30;
    /// 0 selects the hardware concurrency.
    unsigned threads = 0;
};

struct WeightResult {
    Metric metric = Metric::Lee;
    unsigned min_weight = 0;
    bool exact = false;
    WeightMethod method = WeightMethod::Enumeration;
    /// Nonzero codeword of weight min_weight; lexicographically smallest among the
    /// lightest words whenever the result is exact.
    Z4Vector witness;
    /// Proven lower bound on the minimum weight (equals min_weight when exact).
    unsigned lower_bound = 0;
};

/// Enumerates all nonzero codewords when |C| <= cap (exact). Otherwise enumerates the
/// subcode spanned by the longest run of trailing Howell rows whose size fits the cap and
/// reports that minimum as an upper bound (exact = false, method UpperBoundOnly).
/// Throws Error(ZeroCode) for the zero code.
WeightResult min_weight_enumerate(const Z4Code& c, Metric metric, const WeightOptions& options = {});

/// Number of vectors of the given length with weight in [1, w_max].
std::uint64_t low_weight_candidates(Eigen::Index length, Metric metric, unsigned w_max);

/// A lightest nonzero codeword of weight <= w_max (lexicographically smallest among those),
/// or nothing, which proves the minimum weight exceeds w_max. Throws BudgetExceeded when
/// the candidate count exceeds options.scan_budget.
std::optional<Z4Vector> low_weight_scan(const Z4Code& c, Metric metric, unsigned w_max,
                                        const WeightOptions& options = {});

/// Best-effort minimum weight: enumeration within the cap, otherwise an upper bound from
/// a partial enumeration tightened by low-weight scans as far as the budget allows.
WeightResult min_weight(const Z4Code& c, Metric metric, const WeightOptions& options = {});

/// Histogram weight -> count over all codewords including zero. Throws BudgetExceeded.
std::map<unsigned, std::uint64_t> weight_distribution(const Z4Code& c, Metric metric, std::uint64_t budget);

/// True iff the binary Gray images of all codewords form a linear binary code.
/// Throws BudgetExceeded when |C| > budget.
bool binary_image_linear(const Z4Code& c, std::uint64_t budget = std::uint64_t{1} << 26);

/// (length, 4^k1 2^k2, d_metric) as printed in code tables.
struct CodeParams {
    unsigned length = 0;
    int k1 = 0;
    int k2 = 0;
    unsigned d = 0;
    Metric metric = Metric::Lee;

    CodeType type() const { return {k1, k2}; }
    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// "(14, 4^1 2^1, 14_L)".
std::string to_string(const CodeParams& p);

enum class VerdictKind { ExactMatch, LengthMismatch, TypeMismatch, WeightMismatch, NotDeskVerifiable, NotReproducible };

const char* to_string(VerdictKind k);
VerdictKind parse_verdict(const std::string& text);

struct Verdict {
    VerdictKind kind = VerdictKind::NotReproducible;
    /// Observed parameters; found.d is the best value known (exact or upper bound).
    CodeParams found;
    WeightResult weight;
    std::string note;
};

/// Compares a code against claimed table parameters.
Verdict verify_params(const Z4Code& c, const CodeParams& claimed, const WeightOptions& options = {});

}  // namespace rcodes
