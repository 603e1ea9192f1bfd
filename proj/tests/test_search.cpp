#include <doctest.h>

#include <algorithm>

#include "rcodes/error.hpp"
#include "rcodes/gray.hpp"
#include "rcodes/search.hpp"
#include "rcodes/tables.hpp"

using namespace rcodes;

namespace {

bool has_best(const SearchReport& r, int k1, int k2, unsigned d) {
    return std::any_of(r.best.begin(), r.best.end(),
                       [&](const SearchEntry& e) { return e.type == CodeType{k1, k2} && e.d == d && e.exact; });
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("Theorem-form builder") {
    CHECK(gray_image(build_twisted(3, Z4Poly{}, parse_coeff_string("22"))).type() == CodeType{0, 2});
    CHECK(gray_image(build_twisted(5, parse_coeff_string("11111"), parse_coeff_string("11111"))).type() ==
          CodeType{1, 1});
    CHECK_THROWS_AS(build_twisted(4, Z4Poly{}, Z4Poly{}), Error);
    const RCode rc = build_twisted(7, parse_coeff_string("1113133"), parse_coeff_string("1011"));
    CHECK(rc.lambda == kLambda);
    CHECK(is_constacyclic(rc));
}

TEST_CASE("triple builder corner cases") {
    const FactorSet fs = factor_x_n_minus_1(3);
    const DivisorTriple t1 = make_triple(fs, 0b01, 0b10);          // (x+3, x^2+x+1, 1)
    const DivisorTriple annihilated = make_triple(fs, 0b11, 0);    // (x^3-1, 1, 1)
    const Z4Code one = span_r_code(build_from_triples(3, t1, annihilated));
    RCode single = build_from_triples(3, t1, annihilated);
    single.generators.resize(1);
    CHECK(one == span_r_code(single));

    for (std::size_t n : {1, 3, 5}) {
        const FactorSet f = factor_x_n_minus_1(n);
        const DivisorTriple unit = make_triple(f, 0, 0);  // (1, 1, x^n-1)
        CHECK(span_r_code(build_from_triples(n, unit, unit)).type() == CodeType{static_cast<int>(2 * n), 0});
    }
}

TEST_CASE("Prop 3.10 builder corner cases") {
    const FactorSet fs = factor_x_n_minus_1(5);
    const DivisorTriple unit = make_triple(fs, 0, 0);
    CHECK(span_r_code(build_three_term(5, unit, unit, unit)).type() == CodeType{10, 0});
    const DivisorTriple annihilated = make_triple(fs, fs.full_mask(), 0);
    CHECK(span_r_code(build_three_term(5, annihilated, annihilated, annihilated)).is_zero());
}

TEST_CASE("Lemma 3.11 normal form") {
    const FactorSet fs = factor_x_n_minus_1(3);
    const DivisorTriple t = make_triple(fs, 0b01, 0b10);
    const RCode normal = cyclic_normal_form(3, t, t, fs);
    REQUIRE(normal.generators.size() == 1);
    CHECK(normal.generators[0] == reduce_mod(lift(t.u * t.v + Z4(2) * t.u), 3, RElement(1)));

    // Coprime u1, u2 and coprime products: d2 = 1, so the code contains 2.
    const DivisorTriple a = make_triple(fs, 0b01, 0), b = make_triple(fs, 0b10, 0);
    const Z4Code c = span_r_code(cyclic_normal_form(3, a, b, fs));
    CHECK(c.contains(to_coordinates(RVector::Constant(3, RElement(2)))));
    CHECK(c == span_r_code(cyclic_from_triples(3, a, b)));
}

TEST_CASE("search at n = 1 and n = 3") {
    const SearchReport r1 = run_search(1, Metric::Lee);
    CHECK(r1.pairs == 9);
    for (const auto& e : r1.best) CHECK(e.type.bits() <= 3);
    const SearchReport r3 = run_search(3, Metric::Lee);
    CHECK(r3.pairs == 81);
    CHECK(has_best(r3, 0, 2, 8));
    CHECK(has_best(r3, 1, 1, 6));
    for (std::size_t i = 1; i < r3.best.size(); ++i)
        CHECK(std::make_pair(r3.best[i - 1].type.k1, r3.best[i - 1].type.k2) <
              std::make_pair(r3.best[i].type.k1, r3.best[i].type.k2));
    // Deterministic output.
    CHECK(run_search(3, Metric::Lee).to_csv() == r3.to_csv());
    CHECK(r3.to_json()["best"].size() == r3.best.size());
}

TEST_CASE("search at n = 5 finds the printed (10, 4^4 2^5, 4_L) shape") {
    CHECK(has_best(run_search(5, Metric::Lee), 4, 5, 4));
}

TEST_CASE("generator rules") {
    const GeneratorRule r = GeneratorRule::parse("g1, u*g2, (1+u)*g3");
    REQUIRE(r.generators.size() == 3);
    CHECK(r.generators[1][0].first == RElement::u());
    CHECK(r.generators[2][0].first == parse_element("1+u"));
    CHECK(r.generators[2][0].second == 3);
    const GeneratorRule sum = GeneratorRule::parse("<g1 + 2u*g2>");
    REQUIRE(sum.generators.size() == 1);
    CHECK(sum.generators[0].size() == 2);
    CHECK_THROWS_AS(GeneratorRule::parse("g4"), Error);
    CHECK_THROWS_AS(GeneratorRule::parse("x*g1"), Error);
    CHECK_THROWS_AS(GeneratorRule::parse(""), Error);

    // "g1, u*g2" with twisting reproduces the theorem-form builder.
    const GeneratorRule thm = GeneratorRule::parse("g1, u*g2", kLambda, true);
    const Z4Poly g1 = parse_coeff_string("3121"), g2 = parse_coeff_string("20222");
    CHECK(span_r_code(thm.apply(7, g1, g2, Z4Poly{})) == span_r_code(build_twisted(7, g1, g2)));
}

TEST_CASE("row filters") {
    CHECK(parse_row_filter("n=7").n == std::size_t{7});
    const RowFilter r = parse_row_filter("3..5");
    CHECK(r.first == 3);
    CHECK(r.last == 5);
    CHECK(parse_row_filter("4").first == 4);
    CHECK_THROWS_AS(parse_row_filter("5..3"), Error);
    CHECK_THROWS_AS(parse_row_filter("n=x"), Error);
}

TEST_CASE("table parsing") {
    const auto rows = parse_table("# comment\n\n1,3,0,22,6,0,2,8,L,1,ExactMatch\n3,7,2^7,3^7,3^7,14,1,1,7,E,0,NotReproducible\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].line == 3);
    CHECK(rows[0].asterisk);
    CHECK_FALSE(rows[0].has_g3);
    CHECK(rows[1].has_g3);
    CHECK(rows[1].g1 == parse_coeff_string("2222222"));
    CHECK(rows[1].claimed.metric == Metric::Euclidean);
    CHECK_THROWS_AS(parse_table("1,3,0,22,6,0,2,8,L,1\n"), Error);
    CHECK_THROWS_AS(parse_table("1,3,0,22,6,0,2,8,X,1,ExactMatch\n"), Error);
    CHECK_THROWS_AS(parse_table("1,3,0,29,6,0,2,8,L,1,ExactMatch\n"), Error);
    CHECK_THROWS_AS(load_table_file("/nonexistent/table.csv"), Error);
    CHECK_THROWS_AS(reference_table(4), Error);
}

TEST_CASE("built-in tables") {
    CHECK(reference_table(1).size() == 30);
    CHECK(reference_table(2).size() == 33);
    CHECK(reference_table(3).size() == 20);
    const auto t2 = reference_table(2);
    CHECK(std::count_if(t2.begin(), t2.end(), [](const TableRow& r) { return r.has_blank_cell(); }) == 1);
}

TEST_CASE("table verification") {
    VerifyOptions o;
    o.filter = parse_row_filter("n=3");
    const auto v1 = verify_table(1, o);
    REQUIRE(v1.size() == 3);
    CHECK(v1[0].verdict.kind == VerdictKind::ExactMatch);
    CHECK(v1[1].verdict.kind == VerdictKind::ExactMatch);

    o.filter = parse_row_filter("n=7");
    const auto v2 = verify_table(2, o);
    const auto anomaly = std::find_if(v2.begin(), v2.end(), [](const RowVerdict& r) { return r.row.claimed.length == 10; });
    REQUIRE(anomaly != v2.end());
    CHECK(anomaly->verdict.kind == VerdictKind::LengthMismatch);
    CHECK(anomaly->as_expected);
    const auto blank = std::find_if(v2.begin(), v2.end(), [](const RowVerdict& r) { return r.row.has_blank_cell(); });
    REQUIRE(blank != v2.end());
    CHECK(blank->verdict.note.find("blank") != std::string::npos);

    for (const auto& rv : verify_table(3)) {
        CHECK(rv.verdict.kind == VerdictKind::NotReproducible);
        CHECK(rv.as_expected);
    }
    VerifyOptions with_rule;
    with_rule.rule = GeneratorRule::parse("g1, u*g2, (1+u)*g3");
    with_rule.filter = parse_row_filter("1");
    const auto ruled = verify_table(3, with_rule);
    REQUIRE(ruled.size() == 1);
    CHECK(ruled[0].verdict.kind != VerdictKind::NotReproducible);
    CHECK(ruled[0].verdict.found.length == 14);

    const std::string csv = to_csv(v1);
    CHECK(csv.rfind("table,row,n,", 0) == 0);
    CHECK(to_json(v1).size() == 3);
}


TEST_CASE("twisting relates cyclic and (1+2u)-constacyclic codes") {
    for (std::size_t n : {3, 5, 7}) {
        const FactorSet fs = factor_x_n_minus_1(n);
        const auto triples = enumerate_divisor_triples(fs);
        for (const auto& t1 : triples)
            for (const auto& t2 : triples) {
                const RCode cyc = cyclic_from_triples(n, t1, t2);
                const Z4Code cyc_coords = span_r_code(cyc);
                CHECK(is_constacyclic(cyc));

                RCode twisted = cyc;
                twisted.lambda = kLambda;
                for (auto& g : twisted.generators) g = twist(g);
                CHECK(is_constacyclic(twisted));
                CHECK(span_r_code(twisted) == span_r_code(build_from_triples(n, t1, t2)));

                RCode back = twisted;
                back.lambda = RElement(1);
                for (auto& g : back.generators) g = twist(g);
                CHECK(span_r_code(back) == cyc_coords);

                const Z4Code barred = map_r_code(cyc_coords, [](const RVector& v) { return phi_bar(v); });
                CHECK(is_constacyclic(barred, kLambda));
                CHECK(barred == span_r_code(twisted));

                const Z4Code image = gray_image(cyc_coords);
                CHECK(is_shift_invariant(permute_code(image, nechaev_permutation(static_cast<Eigen::Index>(n))), 1));
            }
    }
}

}
