#pragma once

// Reference code tables: parsing, configurable generator rules and per-row
// verification.
//
// File format, one row per line, '#' starts a comment line:
//   table,n,g1,g2[,g3],length,k1,k2,d,metric,asterisk,expected_verdict
// metric is L or E, asterisk is 0 or 1, generators use coefficient-string notation.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rcodes/code.hpp"
#include "rcodes/weight.hpp"

namespace rcodes {

struct TableRow {
    int table = 0;
    std::size_t n = 0;
    std::string g1_text, g2_text, g3_text;
    bool has_g3 = false;
    Z4Poly g1, g2, g3;
    CodeParams claimed;
    bool asterisk = false;
    VerdictKind expected = VerdictKind::ExactMatch;
    /// 1-based line in the source text.
    std::size_t line = 0;

    /// True when a generator cell is empty (read as the zero polynomial).
    bool has_blank_cell() const { return g1_text.empty() || g2_text.empty() || (has_g3 && g3_text.empty()); }
};

/// Throws Error(BadTable) with the offending line number.
std::vector<TableRow> parse_table(std::string_view text);
/// Throws Error(Io) if the file cannot be read.
std::vector<TableRow> load_table_file(const std::string& path);
/// Built-in tables 1, 2 and 3. Throws Error(BadTable) for other ids.
std::vector<TableRow> reference_table(int id);

/// Generators as Z4/R-linear combinations of g1, g2, g3, e.g. "g1, u*g2, (1+u)*g3" or "g1 + 2u*g2".
struct GeneratorRule {
    /// Each generator is a sum of coefficient * g_index (index 1..3).
    std::vector<std::vector<std::pair<RElement, int>>> generators;
    RElement lambda{1};
    /// Substitute x -> (1+2u)x in each g_i before combining.
    bool twist = false;
    std::string text;

    /// Throws Error(BadRule).
    static GeneratorRule parse(std::string_view text, RElement lambda = RElement(1), bool twist = false);
    RCode apply(std::size_t n, const Z4Poly& g1, const Z4Poly& g2, const Z4Poly& g3) const;
};

/// Row selection: "n=7", "3..5" (1-based positions within the table), "4", or empty for all.
struct RowFilter {
    std::optional<std::size_t> n;
    std::size_t first = 1;
    std::size_t last = static_cast<std::size_t>(-1);

    bool accepts(const TableRow& row, std::size_t position) const {
        if (n && row.n != *n) return false;
        return position >= first && position <= last;
    }
};
/// Throws Error(BadRule) on malformed text.
RowFilter parse_row_filter(std::string_view text);

struct VerifyOptions {
    WeightOptions weight;
    /// Construction for three-generator rows; without it they are NotReproducible.
    std::optional<GeneratorRule> rule;
    RowFilter filter;
};

struct RowVerdict {
    /// 1-based position within the table.
    std::size_t position = 0;
    TableRow row;
    Verdict verdict;
    bool as_expected = false;
};

/// Two-generator rows are built as <g1(x~), u g2(x~)> over x^n - (1+2u) and checked with
/// verify_params; three-generator rows need a rule. Rows run concurrently.
std::vector<RowVerdict> verify_rows(const std::vector<TableRow>& rows, const VerifyOptions& options = {});
std::vector<RowVerdict> verify_table(int id, const VerifyOptions& options = {});

nlohmann::json to_json(const std::vector<RowVerdict>& verdicts);
std::string to_csv(const std::vector<RowVerdict>& verdicts);

}  // namespace rcodes
