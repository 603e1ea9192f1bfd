#include "rcodes/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "rcodes/error.hpp"
#include "rcodes/gray.hpp"

namespace rcodes {

namespace {

void require_odd(std::size_t n) {
    if (n % 2 == 0) throw Error(ErrorKind::EvenLength, "construction needs odd n, got " + std::to_string(n));
}

RCode make_code(std::size_t n, RElement lambda, std::vector<RPoly> gens) {
    RCode rc;
    rc.n = n;
    rc.lambda = lambda;
    for (auto& g : gens) rc.generators.push_back(reduce_mod(g, n, lambda));
    return rc;
}

std::string howell_key(const Z4Code& c) {
    std::string key;
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        key += to_digits(c.row(i));
        key += '|';
    }
    return key;
}

}  // namespace

RCode build_twisted(std::size_t n, const Z4Poly& g1, const Z4Poly& g2) {
    require_odd(n);
    return make_code(n, kLambda, {twist(g1), RElement::u() * twist(g2)});
}

RCode build_cyclic(std::size_t n, const Z4Poly& g1, const Z4Poly& g2) {
    return make_code(n, RElement(1), {lift(g1), RElement::u() * lift(g2)});
}

Z4Poly triple_generator(const DivisorTriple& t) { return t.u * (t.v + Z4Poly::constant(Z4(2))); }

RCode build_from_triples(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2) {
    return build_twisted(n, triple_generator(t1), triple_generator(t2));
}

RCode build_three_term(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2, const DivisorTriple& t3) {
    require_odd(n);
    const RElement one_plus_u(Z4(1), Z4(1));
    RPoly first = twist(triple_generator(t1)) + one_plus_u * twist(triple_generator(t2));
    RPoly second = one_plus_u * twist(triple_generator(t3));
    return make_code(n, kLambda, {first, second});
}

RCode cyclic_normal_form(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2, const FactorSet& fs) {
    require_odd(n);
    const Z4Poly d1 = gcd_divisors(t1.u * t1.v, t2.u * t2.v, fs);
    const Z4Poly d2 = gcd_divisors(t1.u, t2.u, fs);
    return make_code(n, RElement(1), {lift(d1 + Z4(2) * d2)});
}

RCode cyclic_from_triples(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2) {
    require_odd(n);
    return build_cyclic(n, triple_generator(t1), triple_generator(t2));
}

ThreeTermParameters three_term_specialization(const DivisorTriple& t1, const DivisorTriple& t2, const FactorSet& fs) {
    const std::uint64_t d1 = fs.mask_of(t1.u * t1.v) & fs.mask_of(t2.u * t2.v);
    const std::uint64_t d2 = t1.u_mask & t2.u_mask;
    const DivisorTriple first = make_triple(fs, d2, d1 & ~d2);
    const DivisorTriple vanishing = make_triple(fs, fs.full_mask(), 0);
    return {first, vanishing, first};
}

SearchReport run_search(std::size_t n, Metric metric, const WeightOptions& options) {
    require_odd(n);
    const FactorSet fs = factor_x_n_minus_1(n);
    const std::vector<DivisorTriple> triples = enumerate_divisor_triples(fs);

    SearchReport report;
    report.n = n;
    report.metric = metric;
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        for (std::size_t j = 0; j < triples.size(); ++j) {
            ++report.pairs;
            SearchCode sc;
            sc.t1 = i;
            sc.t2 = j;
            sc.code = build_from_triples(n, triples[i], triples[j]);
            sc.coordinates = span_r_code(sc.code);
            sc.image = gray_image(sc.coordinates);
            if (sc.image.is_zero()) {
                ++report.zero_codes;
                continue;
            }
            if (seen.emplace(howell_key(sc.image), report.codes.size()).second) report.codes.push_back(std::move(sc));
        }
    }

    std::map<std::pair<int, int>, std::size_t> best_by_type;
    for (std::size_t k = 0; k < report.codes.size(); ++k) {
        auto& sc = report.codes[k];
        sc.weight = min_weight(sc.image, metric, options);
        const auto key = std::make_pair(sc.image.type().k1, sc.image.type().k2);
        auto it = best_by_type.find(key);
        if (it == best_by_type.end() || report.codes[it->second].weight.min_weight < sc.weight.min_weight)
            best_by_type[key] = k;
    }
    for (const auto& [key, k] : best_by_type) {
        const auto& sc = report.codes[k];
        SearchEntry e;
        e.type = sc.image.type();
        e.d = sc.weight.min_weight;
        e.exact = sc.weight.exact;
        e.lower_bound = sc.weight.lower_bound;
        e.t1 = sc.t1;
        e.t2 = sc.t2;
        // Reported in the cyclic quotient, where the twist commutes with reduction.
        e.g1 = divmod_monic(triple_generator(triples[sc.t1]), x_n_minus_1(n)).second;
        e.g2 = divmod_monic(triple_generator(triples[sc.t2]), x_n_minus_1(n)).second;
        e.witness = sc.weight.witness;
        report.best.push_back(std::move(e));
    }
    return report;
}

nlohmann::json SearchReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : best) {
        rows.push_back({{"length", 2 * n},
                        {"k1", e.type.k1},
                        {"k2", e.type.k2},
                        {"d", e.d},
                        {"exact", e.exact},
                        {"lower_bound", e.lower_bound},
                        {"g1", format_coeff_string(e.g1)},
                        {"g2", format_coeff_string(e.g2)},
                        {"triples", {e.t1, e.t2}},
                        {"witness", to_digits(e.witness)}});
    }
    return {{"n", n},
            {"metric", to_string(metric)},
            {"pairs", pairs},
            {"distinct", codes.size()},
            {"zero_codes", zero_codes},
            {"best", rows}};
}

std::string SearchReport::to_csv() const {
    std::ostringstream os;
    os << "length,k1,k2,d,metric,exact,g1,g2,t1,t2,witness\n";
    for (const auto& e : best) {
        os << 2 * n << ',' << e.type.k1 << ',' << e.type.k2 << ',' << e.d << ','
           << (metric == Metric::Lee ? "L" : "E") << ',' << (e.exact ? "exact" : "upper") << ','
           << format_coeff_string(e.g1) << ',' << format_coeff_string(e.g2) << ',' << e.t1 << ',' << e.t2 << ','
           << to_digits(e.witness) << '\n';
    }
    return os.str();
}

}  // namespace rcodes
