#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rcodes/error.hpp"
#include "rcodes/gray.hpp"

using namespace rcodes;

namespace {

RVector rv(std::initializer_list<const char*> items) {
    RVector v(static_cast<Eigen::Index>(items.size()));
    Eigen::Index i = 0;
    for (const char* s : items) v(i++) = parse_element(s);
    return v;
}

Z4Vector zv(std::initializer_list<int> items) { return oracle::to_vector(oracle::Word(items)); }

}  // namespace

TEST_SUITE("gray") {

TEST_CASE("phi examples") {
    CHECK(phi(rv({"u"})) == zv({1, 1}));
    CHECK(phi(rv({"2"})) == zv({0, 0}));
    CHECK(phi(rv({"1", "u"})) == zv({0, 1, 2, 1}));
    CHECK(phi_pi(rv({"1", "u"})) == zv({0, 2, 1, 1}));
    CHECK(phi_pi(rv({"2+3u"})) == phi(rv({"2+3u"})));
    CHECK(phi_pi(rv({"0", "0", "0"})).isZero());
}

TEST_CASE("phi is Z4-linear and phi_pi is a fixed interleaving") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 9);
        const RVector v = oracle::random_r(rng, n), w = oracle::random_r(rng, n);
        const Z4 c(static_cast<int>(rng() & 3));
        CHECK(phi(v + w) == phi(v) + phi(w));
        RVector cv = v;
        for (Eigen::Index i = 0; i < n; ++i) cv(i) = RElement(c) * v(i);
        CHECK(phi(cv) == c * phi(v));
        CHECK(phi_pi(v) == permute(phi(v), interleave_permutation(n)));
    }
}

TEST_CASE("phi image of R^n has 8^n elements") {
    for (Eigen::Index n = 1; n <= 3; ++n) {
        std::set<oracle::Word> image;
        const std::uint64_t total = std::uint64_t{1} << (4 * n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            RVector v(n);
            for (Eigen::Index i = 0; i < n; ++i)
                v(i) = RElement(Z4(static_cast<int>((idx >> (4 * i)) & 3)), Z4(static_cast<int>((idx >> (4 * i + 2)) & 3)));
            image.insert(oracle::to_word(phi(v)));
        }
        CHECK(image.size() == (std::size_t{1} << (3 * n)));
    }
}

TEST_CASE("constacyclic shift") {
    CHECK(constacyclic_shift(rv({"1", "0", "0"}), kLambda) == rv({"0", "1", "0"}));
    CHECK(constacyclic_shift(rv({"0", "0", "1"}), kLambda) == rv({"1+2u", "0", "0"}));
    CHECK(constacyclic_shift(rv({"1", "2", "3"}), RElement(1)) == rv({"3", "1", "2"}));
    CHECK_THROWS_AS(constacyclic_shift(rv({"1"}), parse_element("1+u")), Error);
}

TEST_CASE("cyclic shift of Z4 vectors") {
    CHECK(cyclic_shift(zv({1, 2, 3, 0}), 1) == zv({0, 1, 2, 3}));
    CHECK(cyclic_shift(zv({1, 2, 3, 0}), 0) == zv({1, 2, 3, 0}));
    CHECK(cyclic_shift(zv({1, 2, 3, 0}), 4) == zv({1, 2, 3, 0}));
}

TEST_CASE("Nechaev permutation") {
    CHECK(nechaev(zv({0, 1, 2, 3, 0, 1})) == zv({0, 0, 2, 3, 1, 1}));
    const Z4Vector c = zv({3, 1});
    CHECK(nechaev(c) == c);
    std::mt19937_64 rng(2);
    for (Eigen::Index n = 1; n <= 15; n += 2) {
        const Z4Vector v = oracle::random_z4(rng, 2 * n);
        CHECK(nechaev(nechaev(v)) == v);
    }
    CHECK_THROWS_AS(nechaev(zv({1, 2, 3, 0})), Error);
    CHECK_THROWS_AS(nechaev(zv({1, 2, 3})), Error);
}

TEST_CASE("phi_bar") {
    CHECK(phi_bar(rv({"1", "1", "1"})) == rv({"1", "1+2u", "1"}));
    CHECK(phi_bar(rv({"0", "0"})).isZero());
    std::mt19937_64 rng(4);
    const RVector v = oracle::random_r(rng, 11);
    CHECK(phi_bar(phi_bar(v)) == v);
}

TEST_CASE("binary Gray map") {
    CHECK(binary_gray(zv({2})) == (BinaryVector(2) << 1, 1).finished());
    CHECK(binary_gray(zv({0, 1})) == (BinaryVector(4) << 0, 0, 0, 1).finished());
    CHECK(binary_gray(zv({0, 0, 0})).isZero());
    CHECK(to_bitstring(binary_gray(zv({3, 2, 1, 0}))) == "10110100");
}

TEST_CASE("identities on random vectors for odd n <= 15") {
    std::mt19937_64 rng(2024);
    for (Eigen::Index n = 1; n <= 15; n += 2) {
        for (int trial = 0; trial < 1000; ++trial) {
            const RVector v = oracle::random_r(rng, n);
            CHECK(phi(constacyclic_shift(v, kLambda)) == cyclic_shift(phi(v), 1));
            CHECK(phi_pi(constacyclic_shift(v, RElement(1))) == cyclic_shift(phi_pi(v), 2));
            CHECK(phi(phi_bar(v)) == nechaev(phi(v)));
        }
    }
}

TEST_CASE("vector rendering and parsing") {
    const RVector v = rv({"1+2u", "u", "0"});
    CHECK(to_string(v) == "1+2u, u, 0");
    CHECK(parse_r_vector(to_string(v)) == v);
    CHECK(to_string(phi(v)) == "2,1,0,0,1,0");
    CHECK(parse_z4_vector("2,1,0") == zv({2, 1, 0}));
    CHECK(to_coordinates(v) == zv({1, 0, 0, 2, 1, 0}));
    CHECK(from_coordinates(to_coordinates(v)) == v);
}

}
