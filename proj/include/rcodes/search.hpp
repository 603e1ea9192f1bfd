#pragma once

// Code families built from divisor triples of x^n - 1 and the exhaustive search
// over pairs of triples.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcodes/code.hpp"
#include "rcodes/factor.hpp"
#include "rcodes/weight.hpp"

namespace rcodes {

/// <g1(x~), u*g2(x~)> in R[x]/(x^n - (1+2u)) with x~ = (1+2u)x. Throws Error(EvenLength).
RCode build_twisted(std::size_t n, const Z4Poly& g1, const Z4Poly& g2);

/// <g1(x), u*g2(x)> in R[x]/(x^n - 1), the untwisted cyclic counterpart.
RCode build_cyclic(std::size_t n, const Z4Poly& g1, const Z4Poly& g2);

/// u(v + 2) for a triple (u, v, w).
Z4Poly triple_generator(const DivisorTriple& t);

/// <u1(x~)(v1(x~)+2), u*u2(x~)(v2(x~)+2)>.
RCode build_from_triples(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2);

/// <u1'(x~)(v1'(x~)+2) + (1+u)u2'(x~)(v2'(x~)+2), (1+u)u3'(x~)(v3'(x~)+2)>.
RCode build_three_term(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2, const DivisorTriple& t3);

/// Cyclic code <d1 + 2 d2> with d1 = gcd(u1 v1, u2 v2), d2 = gcd(u1, u2); lambda = 1.
RCode cyclic_normal_form(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2, const FactorSet& fs);

/// The cyclic two-generator code <u1(v1+2), u*u2(v2+2)> with lambda = 1.
RCode cyclic_from_triples(std::size_t n, const DivisorTriple& t1, const DivisorTriple& t2);

/// build_three_term parameters reproducing build_from_triples(t1, t2): t1 = t3 = (d2, d1/d2, rest),
/// t2 = (x^n - 1, 1, 1) so that the (1+u) term vanishes.
struct ThreeTermParameters {
    DivisorTriple t1, t2, t3;
};
ThreeTermParameters three_term_specialization(const DivisorTriple& t1, const DivisorTriple& t2, const FactorSet& fs);

/// One distinct Gray image met during a search, with the first triple pair producing it.
struct SearchCode {
    std::size_t t1 = 0;
    std::size_t t2 = 0;
    RCode code;
    Z4Code coordinates;
    Z4Code image;
    WeightResult weight;
};

struct SearchEntry {
    CodeType type;
    unsigned d = 0;
    bool exact = false;
    unsigned lower_bound = 0;
    std::size_t t1 = 0;
    std::size_t t2 = 0;
    Z4Poly g1;
    Z4Poly g2;
    Z4Vector witness;
};

struct SearchReport {
    std::size_t n = 0;
    Metric metric = Metric::Lee;
    std::size_t pairs = 0;
    std::size_t zero_codes = 0;
    /// Distinct nonzero Gray images in first-seen order.
    std::vector<SearchCode> codes;
    /// Best distance per type, ordered by (k1, k2).
    std::vector<SearchEntry> best;

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

/// Iterates all ordered pairs of divisor triples (t1 major), deduplicates Gray images by
/// Howell form, and records the best minimum weight per type. Throws Error(EvenLength).
SearchReport run_search(std::size_t n, Metric metric, const WeightOptions& options = {});

}  // namespace rcodes
