#include "rcodes/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "embedded_tables.hpp"
#include "parallel.hpp"
#include "rcodes/error.hpp"
#include "rcodes/gray.hpp"
#include "rcodes/search.hpp"

namespace rcodes {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

/// Splits at separators outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0)
            out.emplace_back();
        else
            out.back() += ch;
    }
    return out;
}

std::size_t parse_count(const std::string& text, const char* what, std::size_t line) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (text.empty() || pos != text.size() || text[0] == '-')
        throw Error(ErrorKind::BadTable, "line " + std::to_string(line) + ": bad " + what + " '" + text + "'");
    return static_cast<std::size_t>(v);
}

TableRow parse_row(const std::string& text, std::size_t line) {
    const auto f = split(text, ',');
    if (f.size() != 11 && f.size() != 12)
        throw Error(ErrorKind::BadTable,
                    "line " + std::to_string(line) + ": expected 11 or 12 fields, got " + std::to_string(f.size()));
    TableRow row;
    row.line = line;
    row.has_g3 = f.size() == 12;
    std::size_t i = 0;
    row.table = static_cast<int>(parse_count(f[i++], "table id", line));
    row.n = parse_count(f[i++], "n", line);
    row.g1_text = f[i++];
    row.g2_text = f[i++];
    if (row.has_g3) row.g3_text = f[i++];
    try {
        row.g1 = parse_coeff_string(row.g1_text);
        row.g2 = parse_coeff_string(row.g2_text);
        row.g3 = parse_coeff_string(row.g3_text);
    } catch (const Error& e) {
        throw Error(ErrorKind::BadTable, "line " + std::to_string(line) + ": " + e.what());
    }
    row.claimed.length = static_cast<unsigned>(parse_count(f[i++], "length", line));
    row.claimed.k1 = static_cast<int>(parse_count(f[i++], "k1", line));
    row.claimed.k2 = static_cast<int>(parse_count(f[i++], "k2", line));
    row.claimed.d = static_cast<unsigned>(parse_count(f[i++], "d", line));
    const std::string& metric = f[i++];
    if (metric == "L")
        row.claimed.metric = Metric::Lee;
    else if (metric == "E")
        row.claimed.metric = Metric::Euclidean;
    else
        throw Error(ErrorKind::BadTable, "line " + std::to_string(line) + ": metric must be L or E");
    const std::string& star = f[i++];
    if (star != "0" && star != "1")
        throw Error(ErrorKind::BadTable, "line " + std::to_string(line) + ": asterisk must be 0 or 1");
    row.asterisk = star == "1";
    try {
        row.expected = parse_verdict(f[i++]);
    } catch (const Error& e) {
        throw Error(ErrorKind::BadTable, "line " + std::to_string(line) + ": " + e.what());
    }
    return row;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

Verdict verify_one(const TableRow& row, const VerifyOptions& options, const WeightOptions& weight) {
    Verdict v;
    v.found.metric = row.claimed.metric;
    try {
        RCode rc;
        if (row.has_g3) {
            if (!options.rule) {
                v.kind = VerdictKind::NotReproducible;
                v.note = "three-generator construction not configured";
                return v;
            }
            rc = options.rule->apply(row.n, row.g1, row.g2, row.g3);
        } else {
            rc = build_twisted(row.n, row.g1, row.g2);
        }
        v = verify_params(gray_image(rc), row.claimed, weight);
    } catch (const Error& e) {
        v.kind = VerdictKind::NotReproducible;
        v.note = e.what();
    }
    if (row.has_blank_cell()) v.note = "blank generator cell read as 0" + (v.note.empty() ? "" : "; " + v.note);
    return v;
}

}  // namespace

std::vector<TableRow> parse_table(std::string_view text) {
    std::vector<TableRow> rows;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        rows.push_back(parse_row(t, line_no));
    }
    return rows;
}

std::vector<TableRow> load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

std::vector<TableRow> reference_table(int id) {
    switch (id) {
        case 1: return parse_table(embedded::table1);
        case 2: return parse_table(embedded::table2);
        case 3: return parse_table(embedded::table3);
        default: throw Error(ErrorKind::BadTable, "no built-in table " + std::to_string(id));
    }
}

GeneratorRule GeneratorRule::parse(std::string_view text, RElement lambda, bool twist) {
    GeneratorRule rule;
    rule.lambda = lambda;
    rule.twist = twist;
    rule.text = std::string(text);
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    const auto bad = [&](const std::string& why) { return Error(ErrorKind::BadRule, "'" + rule.text + "': " + why); };
    if (compact.empty()) throw bad("empty rule");
    // Strip optional angle brackets around the whole rule.
    if (compact.front() == '<' && compact.back() == '>') compact = compact.substr(1, compact.size() - 2);

    for (const auto& gen_text : split_top(compact, ',')) {
        if (gen_text.empty()) throw bad("empty generator");
        std::vector<std::pair<RElement, int>> terms;
        for (const auto& term : split_top(gen_text, '+')) {
            const auto star = term.rfind('*');
            std::string coef_text = star == std::string::npos ? "" : term.substr(0, star);
            const std::string var = star == std::string::npos ? term : term.substr(star + 1);
            if (var.size() != 2 || var[0] != 'g' || var[1] < '1' || var[1] > '3') throw bad("expected g1, g2 or g3");
            if (coef_text.size() >= 2 && coef_text.front() == '(' && coef_text.back() == ')')
                coef_text = coef_text.substr(1, coef_text.size() - 2);
            RElement coef(1);
            if (!coef_text.empty()) {
                try {
                    coef = parse_element(coef_text);
                } catch (const Error&) {
                    throw bad("bad coefficient '" + coef_text + "'");
                }
            }
            terms.emplace_back(coef, var[1] - '0');
        }
        rule.generators.push_back(std::move(terms));
    }
    return rule;
}

RCode GeneratorRule::apply(std::size_t n, const Z4Poly& g1, const Z4Poly& g2, const Z4Poly& g3) const {
    const Z4Poly* g[] = {&g1, &g2, &g3};
    RCode rc;
    rc.n = n;
    rc.lambda = lambda;
    for (const auto& terms : generators) {
        RPoly sum;
        for (const auto& [coef, index] : terms) {
            const Z4Poly& p = *g[index - 1];
            sum = sum + coef * (twist ? rcodes::twist(p) : lift(p));
        }
        rc.generators.push_back(reduce_mod(sum, n, lambda));
    }
    return rc;
}

RowFilter parse_row_filter(std::string_view text) {
    RowFilter f;
    const std::string t = trim(text);
    if (t.empty()) return f;
    const auto bad = [&] { return Error(ErrorKind::BadRule, "bad row selection '" + t + "'"); };
    const auto number = [&](const std::string& s) {
        try {
            return parse_count(s, "row", 0);
        } catch (const Error&) {
            throw bad();
        }
    };
    if (t.rfind("n=", 0) == 0) {
        f.n = number(t.substr(2));
    } else if (const auto dots = t.find(".."); dots != std::string::npos) {
        f.first = number(t.substr(0, dots));
        f.last = number(t.substr(dots + 2));
    } else {
        f.first = f.last = number(t);
    }
    if (f.first == 0 || f.first > f.last) throw bad();
    return f;
}

std::vector<RowVerdict> verify_rows(const std::vector<TableRow>& rows, const VerifyOptions& options) {
    std::vector<RowVerdict> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!options.filter.accepts(rows[i], i + 1)) continue;
        RowVerdict rv;
        rv.position = i + 1;
        rv.row = rows[i];
        out.push_back(std::move(rv));
    }
    // Rows share the worker budget: concurrent rows run their own searches single-threaded.
    const unsigned workers = detail::resolve_threads(options.weight.threads);
    WeightOptions inner = options.weight;
    if (workers > 1 && out.size() > 1) inner.threads = 1;
    detail::parallel_for(out.size(), out.size() > 1 ? workers : 1, [&](std::size_t k) {
        out[k].verdict = verify_one(out[k].row, options, inner);
        out[k].as_expected = out[k].verdict.kind == out[k].row.expected;
    });
    return out;
}

std::vector<RowVerdict> verify_table(int id, const VerifyOptions& options) {
    return verify_rows(reference_table(id), options);
}

nlohmann::json to_json(const std::vector<RowVerdict>& verdicts) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& rv : verdicts) {
        const auto& r = rv.row;
        nlohmann::json j = {{"table", r.table},
                            {"row", rv.position},
                            {"n", r.n},
                            {"g1", r.g1_text},
                            {"g2", r.g2_text},
                            {"claimed", to_string(r.claimed)},
                            {"asterisk", r.asterisk},
                            {"verdict", to_string(rv.verdict.kind)},
                            {"expected", to_string(r.expected)},
                            {"as_expected", rv.as_expected},
                            {"note", rv.verdict.note}};
        if (r.has_g3) j["g3"] = r.g3_text;
        if (rv.verdict.kind != VerdictKind::NotReproducible) {
            j["found"] = to_string(rv.verdict.found);
            j["exact"] = rv.verdict.weight.exact;
            j["method"] = to_string(rv.verdict.weight.method);
            j["lower_bound"] = rv.verdict.weight.lower_bound;
            j["witness"] = to_digits(rv.verdict.weight.witness);
        }
        rows.push_back(std::move(j));
    }
    return rows;
}

std::string to_csv(const std::vector<RowVerdict>& verdicts) {
    std::ostringstream os;
    os << "table,row,n,g1,g2,g3,claimed,found,exact,method,verdict,expected,as_expected,witness,note\n";
    for (const auto& rv : verdicts) {
        const auto& r = rv.row;
        const bool built = rv.verdict.kind != VerdictKind::NotReproducible;
        os << r.table << ',' << rv.position << ',' << r.n << ',' << csv_field(r.g1_text) << ','
           << csv_field(r.g2_text) << ',' << csv_field(r.g3_text) << ',' << csv_field(to_string(r.claimed)) << ','
           << (built ? csv_field(to_string(rv.verdict.found)) : "") << ','
           << (built ? (rv.verdict.weight.exact ? "exact" : "bound") : "") << ','
           << (built ? to_string(rv.verdict.weight.method) : "") << ',' << to_string(rv.verdict.kind) << ','
           << to_string(r.expected) << ',' << (rv.as_expected ? "yes" : "no") << ','
           << (built ? to_digits(rv.verdict.weight.witness) : "") << ',' << csv_field(rv.verdict.note) << '\n';
    }
    return os.str();
}

}  // namespace rcodes
