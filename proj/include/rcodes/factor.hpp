#pragma once

// Factorization of x^n - 1 (n odd) over Z4: trial division over the binary
// field followed by a Hensel step to Z4, plus the divisor lattice machinery
// built on top of the basic irreducible factors.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rcodes/poly.hpp"

namespace rcodes {

/// Binary polynomial as a bit mask (bit i = coefficient of x^i). Degree <= 63.
using Gf2Poly = std::uint64_t;

namespace gf2 {
int degree(Gf2Poly p);
Gf2Poly mul(Gf2Poly a, Gf2Poly b);
Gf2Poly mod(Gf2Poly a, Gf2Poly m);
Gf2Poly div(Gf2Poly a, Gf2Poly m);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Z4Poly to_z4(Gf2Poly p);
Gf2Poly from_z4(const Z4Poly& p);  // reduction mod 2
}  // namespace gf2

/// Monic irreducible binary factors of x^n + 1, increasing degree then mask value.
std::vector<Gf2Poly> factor_f2(std::size_t n);

/// Basic irreducible factorization of x^n - 1 over Z4 for odd n.
class FactorSet {
public:
    FactorSet(std::size_t n, std::vector<Z4Poly> factors);

    std::size_t n() const { return n_; }
    std::size_t size() const { return factors_.size(); }
    const std::vector<Z4Poly>& factors() const { return factors_; }
    const Z4Poly& operator[](std::size_t i) const { return factors_[i]; }

    /// Product of the factors selected by the bit mask.
    Z4Poly product(std::uint64_t mask) const;
    std::uint64_t full_mask() const { return (std::uint64_t{1} << factors_.size()) - 1; }

    /// The subset of factors whose product is d; throws Error(NotADivisor) if d is not a subproduct.
    std::uint64_t mask_of(const Z4Poly& d) const;

    /// JSON text {"n": .., "factors": [..]} with factors in coefficient-string notation.
    std::string to_json() const;

private:
    std::size_t n_;
    std::vector<Z4Poly> factors_;
};

/// Lifts each binary factor to the unique monic Z4 factor of x^n - 1 with the same reduction.
/// Throws Error(LiftFailure) if the lifted product is not x^n - 1.
FactorSet hensel_lift(std::size_t n, const std::vector<Gf2Poly>& binary_factors);

/// factor_f2 followed by hensel_lift, factors sorted by degree then notation. Throws Error(EvenLength).
FactorSet factor_x_n_minus_1(std::size_t n);

/// Monic pairwise coprime u, v, w with u*v*w = x^n - 1.
struct DivisorTriple {
    Z4Poly u, v, w;
    std::uint64_t u_mask = 0, v_mask = 0, w_mask = 0;
};

/// Triple from explicit factor masks (must partition the factor set).
DivisorTriple make_triple(const FactorSet& fs, std::uint64_t u_mask, std::uint64_t v_mask);

/// All 3^r assignments of the r factors to (u, v, w). Index t has base-3 digit i
/// selecting u (0), v (1) or w (2) for factor i.
std::vector<DivisorTriple> enumerate_divisor_triples(const FactorSet& fs);

/// gcd of two divisors of x^n - 1 inside the divisor lattice.
Z4Poly gcd_divisors(const Z4Poly& d, const Z4Poly& e, const FactorSet& fs);

}  // namespace rcodes
