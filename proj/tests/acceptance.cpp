// Acceptance checks. Prints one PASS/FAIL line per criterion; with a criterion
// number as argument runs only that one. Exit status is nonzero if any selected
// criterion fails.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rcodes/code.hpp"
#include "rcodes/gray.hpp"
#include "rcodes/search.hpp"
#include "rcodes/tables.hpp"
#include "rcodes/weight.hpp"

using namespace rcodes;

namespace {

// Pinned tolerances and sample sizes. All comparisons are exact.
constexpr int kExactTierBits = 26;
constexpr std::uint64_t kScanBudget = std::uint64_t{1} << 30;
constexpr int kIdentityTrials = 1000;
constexpr std::size_t kMaxIdentityLength = 15;
constexpr int kOracleCodes = 100;
constexpr std::size_t kOracleMaxLength = 8;
constexpr int kOracleMaxBits = 16;
constexpr int kAsteriskMaxBits = 20;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<RowVerdict> table_verdicts(int table) {
    static std::vector<RowVerdict> cache[3];
    auto& v = cache[table - 1];
    if (v.empty()) v = verify_table(table);
    return v;
}

std::string row_label(const RowVerdict& rv) {
    return "T" + std::to_string(rv.row.table) + "#" + std::to_string(rv.position) + " " + to_string(rv.row.claimed);
}

bool consistent_length(const TableRow& r) { return r.claimed.length == 2 * r.n; }

Outcome exact_tier() {
    Outcome o;
    int checked = 0, matched = 0;
    std::ostringstream misses;
    for (int t : {1, 2})
        for (const auto& rv : table_verdicts(t)) {
            if (!consistent_length(rv.row) || rv.row.claimed.type().bits() > kExactTierBits) continue;
            ++checked;
            if (rv.verdict.kind == VerdictKind::ExactMatch) {
                ++matched;
            } else {
                o.pass = false;
                misses << "; " << row_label(rv) << " -> " << to_string(rv.verdict.kind) << " "
                       << to_string(rv.verdict.found);
            }
        }
    o.detail = std::to_string(matched) + "/" + std::to_string(checked) + " rows ExactMatch" + misses.str();
    return o;
}

Outcome scan_tier() {
    Outcome o;
    int checked = 0, exact = 0, limited = 0;
    std::ostringstream misses;
    for (int t : {1, 2})
        for (const auto& rv : table_verdicts(t)) {
            if (!consistent_length(rv.row) || rv.row.claimed.type().bits() <= kExactTierBits) continue;
            ++checked;
            const auto& r = rv.row;
            const std::uint64_t candidates = low_weight_candidates(r.claimed.length, r.claimed.metric, r.claimed.d);
            const auto& v = rv.verdict;
            bool ok = false;
            if (candidates <= kScanBudget) {
                ok = v.kind == VerdictKind::ExactMatch;
                exact += ok;
            } else {
                // Beyond both budgets: type must match and an upper-bound witness must be reported.
                ok = v.kind == VerdictKind::NotDeskVerifiable && v.weight.witness.size() == r.claimed.length;
                limited += ok;
            }
            if (!ok) {
                o.pass = false;
                misses << "; " << row_label(rv) << " -> " << to_string(v.kind) << " " << to_string(v.found);
            }
        }
    o.detail = std::to_string(exact) + " exact by scan, " + std::to_string(limited) + " reported NotDeskVerifiable, of " +
               std::to_string(checked) + " rows" + misses.str();
    return o;
}

Outcome anomalies() {
    Outcome o;
    int flagged = 0;
    for (const auto& rv : table_verdicts(2))
        if (!consistent_length(rv.row)) {
            ++flagged;
            if (rv.verdict.kind != VerdictKind::LengthMismatch) {
                o.pass = false;
                o.detail += row_label(rv) + " -> " + to_string(rv.verdict.kind) + "; ";
            }
        }
    if (flagged != 1) o.pass = false;
    int t3 = 0;
    for (const auto& rv : table_verdicts(3)) {
        ++t3;
        if (rv.verdict.kind != VerdictKind::NotReproducible) {
            o.pass = false;
            o.detail += row_label(rv) + " -> " + to_string(rv.verdict.kind) + "; ";
        }
    }
    o.detail += std::to_string(flagged) + " length anomaly flagged, " + std::to_string(t3) + " Table 3 rows NotReproducible";
    return o;
}

RPoly random_rpoly(std::mt19937_64& rng, std::size_t n) { return from_vector(oracle::random_r(rng, static_cast<Eigen::Index>(n))); }

Outcome identities() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    long failures = 0, checks = 0;
    for (std::size_t n = 1; n <= kMaxIdentityLength; n += 2) {
        const auto len = static_cast<Eigen::Index>(n);
        for (int t = 0; t < kIdentityTrials; ++t) {
            const RVector v = oracle::random_r(rng, len);
            failures += phi(constacyclic_shift(v, kLambda)) != cyclic_shift(phi(v), 1);
            failures += phi_pi(constacyclic_shift(v, RElement(1))) != cyclic_shift(phi_pi(v), 2);
            failures += phi(phi_bar(v)) != nechaev(phi(v));
            const RPoly p = random_rpoly(rng, n), q = random_rpoly(rng, n);
            failures += !(twist(mul_mod(p, q, n, RElement(1))) == mul_mod(twist(p), twist(q), n, kLambda));
            checks += 4;
        }
    }
    o.pass = failures == 0;
    o.detail = std::to_string(failures) + " failures in " + std::to_string(checks) + " checks";
    return o;
}

Outcome structural() {
    Outcome o;
    long codes = 0, failures = 0, normal_forms = 0, specializations = 0;
    for (std::size_t n : {3, 5, 7}) {
        const FactorSet fs = factor_x_n_minus_1(n);
        const auto triples = enumerate_divisor_triples(fs);
        for (const auto& t1 : triples)
            for (const auto& t2 : triples) {
                ++codes;
                const Z4Code coords = span_r_code(build_from_triples(n, t1, t2));
                const Z4Code rd = r_dual(coords);
                failures += !is_shift_invariant(gray_image(coords), 1);
                failures += !is_constacyclic(coords, kLambda);
                failures += !is_constacyclic(rd, kLambda);
                failures += coords.type().bits() + rd.type().bits() != static_cast<int>(4 * n);
                if (n == 7) {
                    ++normal_forms;
                    failures += !(span_r_code(cyclic_from_triples(n, t1, t2)) == span_r_code(cyclic_normal_form(n, t1, t2, fs)));
                }
                ++specializations;
                const ThreeTermParameters p = three_term_specialization(t1, t2, fs);
                failures += !(span_r_code(build_three_term(n, p.t1, p.t2, p.t3)) == coords);
            }
    }
    o.pass = failures == 0;
    o.detail = std::to_string(failures) + " failures; " + std::to_string(codes) + " triple-pair codes, " +
               std::to_string(normal_forms) + " normal-form pairs, " + std::to_string(specializations) + " specializations";
    return o;
}

Outcome domination() {
    Outcome o;
    struct Target {
        Metric metric;
        unsigned d;
        int bits;
    };
    const Target targets[] = {{Metric::Lee, 8, 10},       {Metric::Lee, 6, 12},       {Metric::Lee, 4, 19},
                              {Metric::Euclidean, 16, 9}, {Metric::Euclidean, 8, 13}, {Metric::Euclidean, 4, 19}};
    for (Metric m : {Metric::Lee, Metric::Euclidean}) {
        const SearchReport r = run_search(7, m);
        for (const auto& t : targets) {
            if (t.metric != m) continue;
            int best = -1;
            for (const auto& sc : r.codes)
                if (sc.weight.exact && sc.weight.min_weight == t.d) best = std::max(best, sc.image.type().bits());
            const bool ok = best >= t.bits;
            o.pass &= ok;
            o.detail += std::string(m == Metric::Lee ? "d_L=" : "d_E=") + std::to_string(t.d) + " size 2^" +
                        std::to_string(best) + (ok ? "" : " (need 2^" + std::to_string(t.bits) + ")") + "; ";
        }
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 7);
    int done = 0, weight_fail = 0, span_fail = 0;
    while (done < kOracleCodes) {
        const std::size_t len = 2 + rng() % (kOracleMaxLength - 1);
        const std::size_t count = 1 + rng() % 4;
        std::vector<oracle::Word> gens(count, oracle::Word(len));
        for (auto& g : gens)
            for (auto& x : g) x = static_cast<int>(rng() & 3);
        const auto words = oracle::span(gens, len);
        if (words.size() == 1 || words.size() > (std::size_t{1} << kOracleMaxBits)) continue;
        ++done;
        std::vector<Z4Vector> rows;
        for (const auto& g : gens) rows.push_back(oracle::to_vector(g));
        const Z4Code c = Z4Code::from_rows(rows, static_cast<Eigen::Index>(len));
        for (Metric m : {Metric::Lee, Metric::Euclidean})
            weight_fail += min_weight_enumerate(c, m).min_weight != oracle::min_weight(words, m == Metric::Euclidean);
        // Compare against a second random code of the same length.
        std::vector<oracle::Word> other = gens;
        if (rng() & 1) {
            other.push_back(oracle::add(gens[0], gens.back()));  // same span
        } else {
            for (auto& x : other[0]) x = static_cast<int>(rng() & 3);  // usually a different span
        }
        std::vector<Z4Vector> other_rows;
        for (const auto& g : other) other_rows.push_back(oracle::to_vector(g));
        const bool howell_equal = c == Z4Code::from_rows(other_rows, static_cast<Eigen::Index>(len));
        span_fail += howell_equal != (words == oracle::span(other, len));
    }
    o.pass = weight_fail == 0 && span_fail == 0;
    o.detail = std::to_string(done) + " codes, " + std::to_string(weight_fail) + " weight mismatches, " +
               std::to_string(span_fail) + " equality mismatches";
    return o;
}

Outcome asterisks() {
    Outcome o;
    int checked = 0;
    for (const auto& row : reference_table(1)) {
        if (!row.asterisk) continue;
        const Z4Code img = gray_image(build_twisted(row.n, row.g1, row.g2));
        if (img.type().bits() > kAsteriskMaxBits) continue;
        ++checked;
        if (!binary_image_linear(img, std::uint64_t{1} << kAsteriskMaxBits)) {
            o.pass = false;
            o.detail += to_string(row.claimed) + " not linear; ";
        }
    }
    o.detail += std::to_string(checked) + " asterisked rows checked";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table reproduction, exact tier", exact_tier},
        {"table reproduction, scan tier", scan_tier},
        {"known anomalies", anomalies},
        {"identity suite", identities},
        {"structural suite", structural},
        {"baseline domination at n=7", domination},
        {"oracle equivalence", oracle_equivalence},
        {"asterisk linearity", asterisks},
    };
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only) continue;
        const Outcome out = criteria[i].second();
        all_pass &= out.pass;
        std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (out.pass ? "PASS" : "FAIL") << " - "
                  << out.detail << std::endl;
    }
    return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
