// rcodes: command-line front end for the rcodes library.
//
// Exit codes: 0 success, 1 verdict mismatch, 2 usage or parse error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcodes/code.hpp"
#include "rcodes/error.hpp"
#include "rcodes/factor.hpp"
#include "rcodes/gray.hpp"
#include "rcodes/search.hpp"
#include "rcodes/tables.hpp"
#include "rcodes/weight.hpp"

using namespace rcodes;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadRule, std::string("environment variable ") + name + " is not a number");
    }
}

struct Globals {
    bool json = false;
    unsigned threads = 0;
    std::uint64_t cap = 0;
    std::uint64_t budget = 0;

    WeightOptions weight() const {
        WeightOptions o;
        o.enumeration_cap = cap ? cap : env_or("RCODES_ENUM_CAP", o.enumeration_cap);
        o.scan_budget = budget ? budget : env_or("RCODES_SCAN_BUDGET", o.scan_budget);
        o.threads = threads;
        return o;
    }
};

void add_weight_flags(CLI::App* cmd, Globals& g) {
    cmd->add_option("--cap", g.cap, "Largest code size enumerated exhaustively (env RCODES_ENUM_CAP)");
    cmd->add_option("--budget", g.budget, "Largest low-weight scan in candidate vectors (env RCODES_SCAN_BUDGET)");
    cmd->add_option("--threads", g.threads, "Worker threads (0 = all cores)");
}

RElement parse_lambda(const std::string& text) {
    const RElement l = parse_element(text);
    if (l != RElement(1) && l != kLambda) throw Error(ErrorKind::BadRule, "lambda must be 1 or 1+2u");
    return l;
}

RCode build_code(std::size_t n, const std::string& g1, const std::string& g2, const std::string& lambda) {
    const RElement l = parse_lambda(lambda);
    if (l == kLambda) return build_twisted(n, parse_coeff_string(g1), parse_coeff_string(g2));
    return build_cyclic(n, parse_coeff_string(g1), parse_coeff_string(g2));
}

Z4Code code_from_rows(const std::string& text, Eigen::Index length_hint) {
    std::vector<Z4Vector> rows;
    std::stringstream ss(text);
    std::string item;
    Eigen::Index length = length_hint;
    while (std::getline(ss, item, ';')) {
        Z4Vector v(static_cast<Eigen::Index>(item.size()));
        Eigen::Index k = 0;
        for (char ch : item) {
            if (ch < '0' || ch > '3') throw Error(ErrorKind::BadDigit, "row digit '" + std::string(1, ch) + "'");
            v(k++) = Z4(ch - '0');
        }
        if (length < 0) length = v.size();
        rows.push_back(v);
    }
    if (rows.empty()) throw Error(ErrorKind::BadLength, "no generator rows");
    return Z4Code::from_rows(rows, length);
}

std::string params_line(const Z4Code& c, const WeightResult& w) {
    CodeParams p{static_cast<unsigned>(c.length()), c.type().k1, c.type().k2, w.min_weight, w.metric};
    std::string out = to_string(p);
    if (w.exact) return out + " exact";
    return out + " upper bound, d >= " + std::to_string(w.lower_bound);
}

nlohmann::json weight_json(const Z4Code& c, const WeightResult& w) {
    return {{"length", c.length()},
            {"k1", c.type().k1},
            {"k2", c.type().k2},
            {"d", w.min_weight},
            {"metric", to_string(w.metric)},
            {"exact", w.exact},
            {"method", to_string(w.method)},
            {"lower_bound", w.lower_bound},
            {"witness", to_digits(w.witness)}};
}

int report_weight(const Z4Code& image, Metric metric, const Globals& g) {
    if (image.is_zero()) {
        if (g.json)
            std::cout << nlohmann::json{{"length", image.length()}, {"k1", 0}, {"k2", 0}, {"zero", true}}.dump(2) << '\n';
        else
            std::cout << "(" << image.length() << ", 4^0 2^0, -) zero code\n";
        return 0;
    }
    const WeightResult w = min_weight(image, metric, g.weight());
    if (g.json) {
        std::cout << weight_json(image, w).dump(2) << '\n';
    } else {
        std::cout << params_line(image, w) << '\n';
        std::cout << "method " << to_string(w.method) << ", witness " << to_digits(w.witness) << '\n';
    }
    return 0;
}

std::string verdict_table(const std::vector<RowVerdict>& verdicts) {
    std::ostringstream os;
    std::size_t ok = 0;
    for (const auto& rv : verdicts) {
        const auto& r = rv.row;
        os << "table " << r.table << " row " << rv.position << "  n=" << r.n << "  " << to_string(r.claimed) << "  "
           << to_string(rv.verdict.kind);
        if (rv.verdict.kind != VerdictKind::NotReproducible && rv.verdict.kind != VerdictKind::ExactMatch)
            os << " found " << to_string(rv.verdict.found);
        if (!rv.as_expected) os << "  UNEXPECTED (expected " << to_string(r.expected) << ")";
        if (!rv.verdict.note.empty()) os << "  [" << rv.verdict.note << "]";
        os << '\n';
        ok += rv.as_expected;
    }
    os << ok << "/" << verdicts.size() << " rows as expected\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constacyclic codes over Z4+uZ4 and their Z4 Gray images"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");

    // factor
    std::size_t n = 0;
    auto* factor = app.add_subcommand("factor", "Basic irreducible factors of x^n - 1 over Z4");
    factor->add_option("--n", n, "Odd length")->required();
    factor->add_flag("--json", g.json);

    // build
    std::string g1 = "0", g2 = "0", lambda = "1+2u", metric_text = "lee";
    auto* build = app.add_subcommand("build", "Build <g1, u*g2> and report its Gray image parameters");
    build->add_option("--n", n, "Odd length")->required();
    build->add_option("--g1", g1, "First generator, coefficients high to low");
    build->add_option("--g2", g2, "Second generator, coefficients high to low");
    build->add_option("--lambda", lambda, "Shift constant: 1+2u (twisted generators) or 1");
    build->add_option("--metric", metric_text, "lee or euclidean");
    build->add_flag("--json", g.json);
    add_weight_flags(build, g);

    // gray
    std::string vector_text, layout = "block";
    bool binary = false;
    auto* gray = app.add_subcommand("gray", "Gray image of a vector over R");
    gray->add_option("--vector", vector_text, "Comma-separated elements, e.g. \"1+2u, u, 0\"")->required();
    gray->add_option("--layout", layout, "block or interleaved")->check(CLI::IsMember({"block", "interleaved"}));
    gray->add_flag("--binary", binary, "Also apply the binary Gray map");
    gray->add_flag("--json", g.json);

    // minweight
    std::string rows_text, code_file;
    auto* minweight = app.add_subcommand("minweight", "Minimum weight of a Z4 code");
    auto* rows_opt = minweight->add_option("--rows", rows_text, "Generator rows as digit strings separated by ';'");
    minweight->add_option("--code", code_file, "Z4 code JSON file")->excludes(rows_opt);
    minweight->add_option("--metric", metric_text, "lee or euclidean");
    minweight->add_flag("--json", g.json);
    add_weight_flags(minweight, g);

    // dual
    auto* dualc = app.add_subcommand("dual", "Dual of <g1, u*g2> over R");
    dualc->add_option("--n", n, "Odd length")->required();
    dualc->add_option("--g1", g1, "First generator");
    dualc->add_option("--g2", g2, "Second generator");
    dualc->add_option("--lambda", lambda, "Shift constant: 1+2u or 1");
    dualc->add_flag("--json", g.json);

    // search
    bool csv = false;
    auto* search = app.add_subcommand("search", "Search all divisor-triple pairs at length n");
    search->add_option("--n", n, "Odd length")->required();
    search->add_option("--metric", metric_text, "lee or euclidean");
    search->add_flag("--csv", csv, "CSV output");
    search->add_flag("--json", g.json);
    add_weight_flags(search, g);

    // verify
    int table_id = 1;
    std::string filter_text, table_file, rule_text, rule_lambda = "1";
    bool rule_twist = false;
    auto* verify = app.add_subcommand("verify", "Verify a reference table");
    verify->add_option("--table", table_id, "Built-in table 1, 2 or 3")->check(CLI::Range(1, 3));
    verify->add_option("--file", table_file, "Read rows from this table file instead");
    verify->add_option("--rows", filter_text, "Row selection: n=7, 3..5 or 4");
    verify->add_option("--rule", rule_text, "Generator rule for three-generator rows, e.g. \"g1, u*g2, (1+u)*g3\"");
    verify->add_option("--rule-lambda", rule_lambda, "Shift constant used by --rule");
    verify->add_flag("--rule-twist", rule_twist, "Twist g1..g3 by x -> (1+2u)x under --rule");
    verify->add_flag("--csv", csv, "CSV output");
    verify->add_flag("--json", g.json);
    add_weight_flags(verify, g);

    // tables
    auto* tables = app.add_subcommand("tables", "Print a built-in reference table");
    tables->add_option("--table", table_id, "Table 1, 2 or 3")->check(CLI::Range(1, 3));
    tables->add_flag("--json", g.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*factor) {
            const FactorSet fs = factor_x_n_minus_1(n);
            if (g.json) {
                std::cout << fs.to_json() << '\n';
            } else {
                std::string line;
                for (const auto& f : fs.factors()) line += (line.empty() ? "" : ", ") + format_coeff_string(f);
                std::cout << line << '\n';
            }
            return 0;
        }
        if (*build) {
            const RCode rc = build_code(n, g1, g2, lambda);
            return report_weight(gray_image(rc), parse_metric(metric_text), g);
        }
        if (*gray) {
            const RVector v = parse_r_vector(vector_text);
            const Z4Vector img = layout == "block" ? phi(v) : phi_pi(v);
            if (g.json) {
                nlohmann::json j = {{"z4", to_digits(img)}};
                if (binary) j["binary"] = to_bitstring(binary_gray(img));
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << to_string(img) << '\n';
                if (binary) std::cout << to_bitstring(binary_gray(img)) << '\n';
            }
            return 0;
        }
        if (*minweight) {
            Z4Code c;
            if (!code_file.empty()) {
                std::ifstream in(code_file);
                if (!in) throw Error(ErrorKind::Io, "cannot read " + code_file);
                nlohmann::json j;
                try {
                    in >> j;
                    c = Z4Code::from_json(j);
                } catch (const nlohmann::json::exception& e) {
                    throw Error(ErrorKind::BadTable, code_file + ": " + e.what());
                }
            } else if (!rows_text.empty()) {
                c = code_from_rows(rows_text, -1);
            } else {
                throw Error(ErrorKind::BadLength, "give --rows or --code");
            }
            return report_weight(c, parse_metric(metric_text), g);
        }
        if (*dualc) {
            const RCode rc = build_code(n, g1, g2, lambda);
            const Z4Code coords = span_r_code(rc);
            const Z4Code d = r_dual(coords);
            const bool consta = is_constacyclic(d, rc.lambda);
            if (g.json) {
                std::cout << nlohmann::json{{"code", coords.to_json()},
                                            {"dual", d.to_json()},
                                            {"dual_constacyclic", consta},
                                            {"gray_dual", gray_image(d).to_json()}}
                                 .dump(2)
                          << '\n';
            } else {
                const auto type = [](const Z4Code& c) {
                    return "4^" + std::to_string(c.type().k1) + " 2^" + std::to_string(c.type().k2);
                };
                std::cout << "code " << type(coords) << ", dual " << type(d) << " (coordinate form, length "
                          << d.length() << ")\n";
                std::cout << "dual is " << to_string(rc.lambda) << "-constacyclic: " << (consta ? "yes" : "no")
                          << '\n';
                for (Eigen::Index i = 0; i < d.rows(); ++i) std::cout << to_digits(d.row(i)) << '\n';
            }
            return 0;
        }
        if (*search) {
            const SearchReport r = run_search(n, parse_metric(metric_text), g.weight());
            if (g.json) {
                std::cout << r.to_json().dump(2) << '\n';
            } else if (csv) {
                std::cout << r.to_csv();
            } else {
                std::cout << r.pairs << " triple pairs, " << r.codes.size() << " distinct nonzero images\n";
                for (const auto& e : r.best) {
                    CodeParams p{static_cast<unsigned>(2 * n), e.type.k1, e.type.k2, e.d, r.metric};
                    std::cout << to_string(p) << (e.exact ? " exact" : " upper bound") << "  g1="
                              << format_coeff_string(e.g1) << " g2=" << format_coeff_string(e.g2) << '\n';
                }
            }
            return 0;
        }
        if (*verify) {
            VerifyOptions o;
            o.weight = g.weight();
            o.filter = parse_row_filter(filter_text);
            if (!rule_text.empty()) o.rule = GeneratorRule::parse(rule_text, parse_element(rule_lambda), rule_twist);
            const auto rows = table_file.empty() ? reference_table(table_id) : load_table_file(table_file);
            const auto verdicts = verify_rows(rows, o);
            if (g.json)
                std::cout << to_json(verdicts).dump(2) << '\n';
            else if (csv)
                std::cout << to_csv(verdicts);
            else
                std::cout << verdict_table(verdicts);
            for (const auto& rv : verdicts)
                if (!rv.as_expected) return kExitMismatch;
            return 0;
        }
        if (*tables) {
            const auto rows = reference_table(table_id);
            if (g.json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& r : rows) {
                    nlohmann::json j = {{"n", r.n},         {"g1", r.g1_text},
                                        {"g2", r.g2_text},  {"claimed", to_string(r.claimed)},
                                        {"asterisk", r.asterisk}, {"expected", to_string(r.expected)}};
                    if (r.has_g3) j["g3"] = r.g3_text;
                    out.push_back(std::move(j));
                }
                std::cout << out.dump(2) << '\n';
            } else {
                for (const auto& r : rows) {
                    std::cout << r.n << "  " << (r.g1_text.empty() ? "-" : r.g1_text) << "  " << r.g2_text;
                    if (r.has_g3) std::cout << "  " << r.g3_text;
                    std::cout << "  " << to_string(r.claimed) << (r.asterisk ? "*" : "") << '\n';
                }
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Io ? kExitIo : kExitUsage;
    }
    return 0;
}
