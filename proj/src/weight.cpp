#include "rcodes/weight.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "parallel.hpp"
#include "rcodes/error.hpp"
#include "rcodes/gray.hpp"

namespace rcodes {

const char* to_string(Metric m) { return m == Metric::Lee ? "Lee" : "Euclidean"; }

const char* to_string(WeightMethod m) {
    switch (m) {
        case WeightMethod::Enumeration: return "Enumeration";
        case WeightMethod::LowWeightScan: return "LowWeightScan";
        case WeightMethod::UpperBoundOnly: return "UpperBoundOnly";
    }
    return "?";
}

Metric parse_metric(const std::string& text) {
    std::string s;
    for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "lee" || s == "l") return Metric::Lee;
    if (s == "euclidean" || s == "e") return Metric::Euclidean;
    throw Error(ErrorKind::BadElement, "unknown metric '" + text + "'");
}

PackedWord pack(const Z4Vector& v) {
    if (v.size() > kMaxPackedLength)
        throw Error(ErrorKind::BadLength, "words longer than 64 coordinates are not supported");
    PackedWord w;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto x = static_cast<std::uint64_t>(v(i).value());
        w.lo |= (x & 1) << i;
        w.hi |= (x >> 1) << i;
    }
    return w;
}

Z4Vector unpack(PackedWord w, Eigen::Index length) {
    Z4Vector v(length);
    for (Eigen::Index i = 0; i < length; ++i) v(i) = Z4(value_at(w, static_cast<int>(i)));
    return v;
}

namespace {

constexpr std::array<unsigned, 4> kLeeCost{0, 1, 2, 1};
constexpr std::array<unsigned, 4> kEuclideanCost{0, 1, 4, 1};

const std::array<unsigned, 4>& cost_table(Metric m) { return m == Metric::Lee ? kLeeCost : kEuclideanCost; }

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Loopless reflected mixed-radix Gray walk (Knuth, Algorithm H). Each step changes one
// coefficient by +-1, i.e. one packed add. visit() sees the base word first.
template <class Visit>
void gray_walk(std::span<const PackedWord> rows, std::span<const int> radix, PackedWord acc, Visit&& visit) {
    const std::size_t k = rows.size();
    std::vector<PackedWord> minus(k);
    for (std::size_t j = 0; j < k; ++j) minus[j] = -rows[j];
    std::vector<int> a(k, 0), o(k, 1);
    std::vector<std::size_t> f(k + 1);
    std::iota(f.begin(), f.end(), std::size_t{0});
    visit(acc);
    for (;;) {
        const std::size_t j = f[0];
        f[0] = 0;
        if (j == k) break;
        a[j] += o[j];
        acc = acc + (o[j] > 0 ? rows[j] : minus[j]);
        if (a[j] == 0 || a[j] == radix[j] - 1) {
            o[j] = -o[j];
            f[j] = f[j + 1];
            f[j + 1] = j + 1;
        }
        visit(acc);
    }
}

struct Basis {
    std::vector<PackedWord> rows;
    std::vector<int> radix;
};

Basis packed_basis(const Z4Code& c, Eigen::Index first_row = 0) {
    if (c.length() > kMaxPackedLength)
        throw Error(ErrorKind::BadLength, "codes longer than 64 coordinates are not supported");
    Basis b;
    for (Eigen::Index i = first_row; i < c.rows(); ++i) {
        b.rows.push_back(pack(c.row(i)));
        b.radix.push_back(c.row_order(i));
    }
    return b;
}

std::uint64_t basis_size(const Basis& b) {
    std::uint64_t s = 1;
    for (int r : b.radix) s = saturating_mul(s, static_cast<std::uint64_t>(r));
    return s;
}

struct Best {
    unsigned weight = std::numeric_limits<unsigned>::max();
    PackedWord word;
    bool found = false;

    void offer(PackedWord w, unsigned wt) {
        if (!found || wt < weight || (wt == weight && lex_less(w, word))) {
            weight = wt;
            word = w;
            found = true;
        }
    }
};

// Minimum over all nonzero combinations of the basis, parallel over the top digits.
Best enumerate_minimum(const Basis& basis, Metric metric, unsigned threads) {
    const std::size_t k = basis.rows.size();
    // Fix top digits until there are enough jobs to balance the workers.
    std::size_t fixed = 0;
    std::uint64_t jobs = 1;
    while (fixed < k && jobs < 256 && k - fixed > 4) {
        jobs *= static_cast<std::uint64_t>(basis.radix[k - 1 - fixed]);
        ++fixed;
    }
    const std::size_t free_digits = k - fixed;
    const std::span<const PackedWord> low_rows(basis.rows.data(), free_digits);
    const std::span<const int> low_radix(basis.radix.data(), free_digits);

    std::vector<Best> partial(jobs);
    detail::parallel_for(jobs, threads, [&](std::size_t job) {
        PackedWord base;
        std::size_t rest = job;
        for (std::size_t d = 0; d < fixed; ++d) {
            const std::size_t digit = k - 1 - d;
            const auto r = static_cast<std::size_t>(basis.radix[digit]);
            for (std::size_t t = rest % r; t > 0; --t) base = base + basis.rows[digit];
            rest /= r;
        }
        Best best;
        gray_walk(low_rows, low_radix, base, [&best, metric](PackedWord w) {
            if (w.is_zero()) return;
            best.offer(w, weight(w, metric));
        });
        partial[job] = best;
    });

    Best best;
    for (const auto& p : partial)
        if (p.found) best.offer(p.word, p.weight);
    return best;
}

// Syndrome columns: the check matrix is the Howell form of the dual, so w is a codeword
// iff sum_i w_i * column_i = 0.
struct SyndromeTable {
    Eigen::Index length = 0;
    std::vector<std::array<PackedWord, 4>> column;
};

SyndromeTable syndrome_table(const Z4Code& c) {
    if (c.length() > kMaxPackedLength)
        throw Error(ErrorKind::BadLength, "codes longer than 64 coordinates are not supported");
    const Z4Code checks = dual(c);
    SyndromeTable t;
    t.length = c.length();
    t.column.resize(static_cast<std::size_t>(c.length()));
    for (Eigen::Index i = 0; i < c.length(); ++i) {
        const PackedWord col = pack(checks.howell().col(i));
        t.column[static_cast<std::size_t>(i)] = {PackedWord{}, col, col + col, -col};
    }
    return t;
}

class ExactWeightSearch {
public:
    ExactWeightSearch(const SyndromeTable& table, Metric metric)
        : table_(table), cost_(cost_table(metric)), max_cost_(metric == Metric::Lee ? 2u : 4u) {}

    // Depth-first in lexicographic order; returns the first word of weight exactly `remaining`
    // (counted from pos) with zero syndrome.
    bool search(int pos, unsigned remaining, PackedWord syndrome, PackedWord word, PackedWord& out) const {
        if (remaining == 0) {
            if (!syndrome.is_zero()) return false;
            out = word;
            return true;
        }
        const int m = static_cast<int>(table_.length);
        if (pos == m || remaining > max_cost_ * static_cast<unsigned>(m - pos)) return false;
        const auto& col = table_.column[static_cast<std::size_t>(pos)];
        if (search(pos + 1, remaining, syndrome, word, out)) return true;
        for (int v = 1; v < 4; ++v) {
            const unsigned c = cost_[static_cast<std::size_t>(v)];
            if (c > remaining) continue;
            PackedWord next = word;
            next.lo |= static_cast<std::uint64_t>(v & 1) << pos;
            next.hi |= static_cast<std::uint64_t>(v >> 1) << pos;
            if (search(pos + 1, remaining - c, syndrome + col[static_cast<std::size_t>(v)], next, out)) return true;
        }
        return false;
    }

    const std::array<unsigned, 4>& cost() const { return cost_; }

private:
    const SyndromeTable& table_;
    const std::array<unsigned, 4>& cost_;
    unsigned max_cost_;
};

// Lexicographically smallest codeword of weight exactly w, parallel over prefixes.
std::optional<PackedWord> scan_exact_weight(const SyndromeTable& table, Metric metric, unsigned w, unsigned threads) {
    const ExactWeightSearch search(table, metric);
    const int prefix_len = static_cast<int>(std::min<Eigen::Index>(table.length, 3));
    std::size_t prefixes = 1;
    for (int i = 0; i < prefix_len; ++i) prefixes *= 4;

    std::vector<PackedWord> hits(prefixes);
    std::atomic<std::size_t> first_hit{prefixes};
    detail::parallel_for(prefixes, threads, [&](std::size_t job) {
        if (job > first_hit.load()) return;
        // Prefix digit for position 0 is the most significant, so job order is lexicographic.
        PackedWord word, syndrome;
        unsigned spent = 0;
        for (int pos = 0; pos < prefix_len; ++pos) {
            const int v = static_cast<int>((job >> (2 * (prefix_len - 1 - pos))) & 3);
            spent += search.cost()[static_cast<std::size_t>(v)];
            word.lo |= static_cast<std::uint64_t>(v & 1) << pos;
            word.hi |= static_cast<std::uint64_t>(v >> 1) << pos;
            syndrome = syndrome + table.column[static_cast<std::size_t>(pos)][static_cast<std::size_t>(v)];
        }
        if (spent > w) return;
        PackedWord out;
        if (search.search(prefix_len, w - spent, syndrome, word, out)) {
            hits[job] = out;
            std::size_t cur = first_hit.load();
            while (job < cur && !first_hit.compare_exchange_weak(cur, job)) {
            }
        }
    });
    if (first_hit.load() == prefixes) return std::nullopt;
    return hits[first_hit.load()];
}

}  // namespace

WeightResult min_weight_enumerate(const Z4Code& c, Metric metric, const WeightOptions& options) {
    if (c.is_zero()) throw Error(ErrorKind::ZeroCode, "minimum weight of the zero code is undefined");
    Basis basis = packed_basis(c);
    const bool exact = basis_size(basis) <= options.enumeration_cap;
    if (!exact) {
        // Trailing rows: the longest suffix of the Howell basis whose span fits the cap.
        std::size_t first = basis.rows.size();
        std::uint64_t size = 1;
        while (first > 0 && saturating_mul(size, static_cast<std::uint64_t>(basis.radix[first - 1])) <= options.enumeration_cap) {
            size *= static_cast<std::uint64_t>(basis.radix[first - 1]);
            --first;
        }
        if (first == basis.rows.size()) --first;  // always inspect at least one row
        basis = packed_basis(c, static_cast<Eigen::Index>(first));
    }
    const Best best = enumerate_minimum(basis, metric, options.threads);
    WeightResult r;
    r.metric = metric;
    r.min_weight = best.weight;
    r.exact = exact;
    r.method = exact ? WeightMethod::Enumeration : WeightMethod::UpperBoundOnly;
    r.witness = unpack(best.word, c.length());
    r.lower_bound = exact ? best.weight : 1;
    return r;
}

std::uint64_t low_weight_candidates(Eigen::Index length, Metric metric, unsigned w_max) {
    const auto& cost = cost_table(metric);
    // counts[w] = number of vectors of the current prefix length with weight w.
    std::vector<std::uint64_t> counts(w_max + 1, 0);
    counts[0] = 1;
    for (Eigen::Index i = 0; i < length; ++i) {
        std::vector<std::uint64_t> next(w_max + 1, 0);
        for (unsigned w = 0; w <= w_max; ++w) {
            if (counts[w] == 0) continue;
            for (unsigned c : cost)
                if (w + c <= w_max) next[w + c] = saturating_add(next[w + c], counts[w]);
        }
        counts = std::move(next);
    }
    std::uint64_t total = 0;
    for (unsigned w = 1; w <= w_max; ++w) total = saturating_add(total, counts[w]);
    return total;
}

std::optional<Z4Vector> low_weight_scan(const Z4Code& c, Metric metric, unsigned w_max, const WeightOptions& options) {
    const std::uint64_t candidates = low_weight_candidates(c.length(), metric, w_max);
    if (candidates > options.scan_budget) throw BudgetExceeded(candidates, options.scan_budget);
    const SyndromeTable table = syndrome_table(c);
    for (unsigned w = 1; w <= w_max; ++w)
        if (auto hit = scan_exact_weight(table, metric, w, options.threads)) return unpack(*hit, c.length());
    return std::nullopt;
}

WeightResult min_weight(const Z4Code& c, Metric metric, const WeightOptions& options) {
    WeightResult r = min_weight_enumerate(c, metric, options);
    if (r.exact) return r;

    const SyndromeTable table = syndrome_table(c);
    unsigned lower = 1;
    for (unsigned w = 1; w <= r.min_weight; ++w) {
        if (low_weight_candidates(c.length(), metric, w) > options.scan_budget) break;
        if (auto hit = scan_exact_weight(table, metric, w, options.threads)) {
            r.min_weight = w;
            r.witness = unpack(*hit, c.length());
            r.exact = true;
            r.method = WeightMethod::LowWeightScan;
            r.lower_bound = w;
            return r;
        }
        lower = w + 1;
    }
    r.lower_bound = lower;
    if (lower == r.min_weight) {
        // Everything lighter was excluded; the enumerated witness attains the bound.
        r.exact = true;
        r.method = WeightMethod::LowWeightScan;
    }
    return r;
}

std::map<unsigned, std::uint64_t> weight_distribution(const Z4Code& c, Metric metric, std::uint64_t budget) {
    const Basis basis = packed_basis(c);
    const std::uint64_t size = basis_size(basis);
    if (size > budget) throw BudgetExceeded(size, budget);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(4 * c.length() + 1), 0);
    gray_walk(basis.rows, basis.radix, PackedWord{}, [&](PackedWord w) { ++hist[weight(w, metric)]; });
    std::map<unsigned, std::uint64_t> out;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w]) out[static_cast<unsigned>(w)] = hist[w];
    return out;
}

bool binary_image_linear(const Z4Code& c, std::uint64_t budget) {
    const Basis basis = packed_basis(c);
    const std::uint64_t size = basis_size(basis);
    if (size > budget) throw BudgetExceeded(size, budget);
    // The Gray map is injective, so the image is linear iff its binary span has exactly |C| words.
    // Image bits per coordinate: (hi, hi ^ lo).
    using Bits = unsigned __int128;
    std::array<Bits, 128> pivots{};
    int rank = 0;
    const int target = c.type().bits();
    bool linear = true;
    gray_walk(basis.rows, basis.radix, PackedWord{}, [&](PackedWord w) {
        if (!linear) return;
        Bits x = static_cast<Bits>(w.hi) | (static_cast<Bits>(w.hi ^ w.lo) << 64);
        while (x != 0) {
            const int top = 127 - (static_cast<std::uint64_t>(x >> 64) != 0
                                       ? std::countl_zero(static_cast<std::uint64_t>(x >> 64))
                                       : 64 + std::countl_zero(static_cast<std::uint64_t>(x)));
            if (pivots[static_cast<std::size_t>(top)] == 0) {
                pivots[static_cast<std::size_t>(top)] = x;
                if (++rank > target) linear = false;
                return;
            }
            x ^= pivots[static_cast<std::size_t>(top)];
        }
    });
    return linear && rank == target;
}

std::string to_string(const CodeParams& p) {
    return "(" + std::to_string(p.length) + ", 4^" + std::to_string(p.k1) + " 2^" + std::to_string(p.k2) + ", " +
           std::to_string(p.d) + (p.metric == Metric::Lee ? "_L" : "_E") + ")";
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::ExactMatch: return "ExactMatch";
        case VerdictKind::LengthMismatch: return "LengthMismatch";
        case VerdictKind::TypeMismatch: return "TypeMismatch";
        case VerdictKind::WeightMismatch: return "WeightMismatch";
        case VerdictKind::NotDeskVerifiable: return "NotDeskVerifiable";
        case VerdictKind::NotReproducible: return "NotReproducible";
    }
    return "?";
}

VerdictKind parse_verdict(const std::string& text) {
    for (auto k : {VerdictKind::ExactMatch, VerdictKind::LengthMismatch, VerdictKind::TypeMismatch,
                   VerdictKind::WeightMismatch, VerdictKind::NotDeskVerifiable, VerdictKind::NotReproducible})
        if (text == to_string(k)) return k;
    throw Error(ErrorKind::BadTable, "unknown verdict '" + text + "'");
}

Verdict verify_params(const Z4Code& c, const CodeParams& claimed, const WeightOptions& options) {
    Verdict v;
    v.found.length = static_cast<unsigned>(c.length());
    v.found.k1 = c.type().k1;
    v.found.k2 = c.type().k2;
    v.found.metric = claimed.metric;
    const bool shape_matches = v.found.length == claimed.length && v.found.type() == claimed.type();
    if (!c.is_zero()) {
        // Mismatched shapes only get the cheap enumeration bound.
        v.weight = shape_matches ? min_weight(c, claimed.metric, options)
                                 : min_weight_enumerate(c, claimed.metric, options);
        v.found.d = v.weight.min_weight;
    } else {
        v.weight.exact = true;
    }

    if (v.found.length != claimed.length) {
        v.kind = VerdictKind::LengthMismatch;
        v.note = "length " + std::to_string(v.found.length) + " differs from claimed " + std::to_string(claimed.length);
    } else if (v.found.type() != claimed.type()) {
        v.kind = VerdictKind::TypeMismatch;
        v.note = "type 4^" + std::to_string(v.found.k1) + " 2^" + std::to_string(v.found.k2) + " differs from claimed 4^" +
                 std::to_string(claimed.k1) + " 2^" + std::to_string(claimed.k2);
    } else if (v.weight.exact) {
        v.kind = v.found.d == claimed.d ? VerdictKind::ExactMatch : VerdictKind::WeightMismatch;
        if (v.kind == VerdictKind::WeightMismatch)
            v.note = "minimum weight " + std::to_string(v.found.d) + " differs from claimed " + std::to_string(claimed.d);
    } else if (v.found.d < claimed.d) {
        v.kind = VerdictKind::WeightMismatch;
        v.note = "codeword of weight " + std::to_string(v.found.d) + " found below claimed " + std::to_string(claimed.d);
    } else if (v.weight.lower_bound > claimed.d) {
        v.kind = VerdictKind::WeightMismatch;
        v.note = "minimum weight is at least " + std::to_string(v.weight.lower_bound);
    } else {
        v.kind = VerdictKind::NotDeskVerifiable;
        v.note = "minimum weight in [" + std::to_string(v.weight.lower_bound) + ", " + std::to_string(v.found.d) + "]";
    }
    return v;
}

}  // namespace rcodes
