#pragma once

// Linear codes over Z4 (canonical Howell generator matrices) and codes over R
// given as ideals of R[x]/(x^n - lambda).
//
// An R-code of length n is carried internally by its coordinate representation:
// the Z4 code of length 2n obtained from a + bu -> (a | b) blockwise. In that
// representation multiplication by u swaps the two blocks, and the Gray map is
// the Z4-linear map (a | b) -> (b | 2a + b).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcodes/poly.hpp"
#include "rcodes/ring.hpp"

namespace rcodes {

/// Type 4^k1 2^k2 of a Z4-linear code.
struct CodeType {
    int k1 = 0;
    int k2 = 0;
    /// log2 of the code size.
    int bits() const { return 2 * k1 + k2; }
    friend bool operator==(const CodeType&, const CodeType&) = default;
};

class Z4Code {
public:
    Z4Code() = default;
    /// Zero code of the given length.
    explicit Z4Code(Eigen::Index length);

    /// Row span of the generators (any number of rows, possibly dependent).
    static Z4Code from_generators(const Z4Matrix& generators);
    static Z4Code from_rows(const std::vector<Z4Vector>& rows, Eigen::Index length);

    Eigen::Index length() const { return length_; }
    const Z4Matrix& howell() const { return howell_; }
    Eigen::Index rows() const { return howell_.rows(); }
    Z4Vector row(Eigen::Index i) const { return howell_.row(i).transpose(); }
    /// 4 for rows with pivot 1, 2 for rows with pivot 2: the coefficient range of the row.
    int row_order(Eigen::Index i) const { return orders_[static_cast<std::size_t>(i)]; }
    CodeType type() const { return type_; }
    bool is_zero() const { return howell_.rows() == 0; }

    /// Span membership by reduction against the Howell rows. Throws Error(LengthMismatch).
    bool contains(const Z4Vector& w) const;

    friend bool operator==(const Z4Code& x, const Z4Code& y) {
        return x.length_ == y.length_ && x.howell_.rows() == y.howell_.rows() && x.howell_ == y.howell_;
    }

    /// {"length", "k1", "k2", "rows": [digit strings, coordinate 0 first]}.
    nlohmann::json to_json() const;
    static Z4Code from_json(const nlohmann::json& j);

private:
    Eigen::Index length_ = 0;
    Z4Matrix howell_;
    std::vector<int> orders_;
    CodeType type_;
};

inline CodeType type_of(const Z4Code& c) { return c.type(); }

/// All words orthogonal to the code under sum x_i y_i in Z4.
Z4Code dual(const Z4Code& c);

/// Image of the code under a Z4-linear vector map, applied to the generators.
Z4Code map_code(const Z4Code& c, const std::function<Z4Vector(const Z4Vector&)>& linear_map);

/// Coordinate permutation: out[j] = w[perm[j]] for every codeword w.
Z4Code permute_code(const Z4Code& c, const std::vector<Eigen::Index>& perm);

/// True iff the k-fold cyclic shift maps the code into itself.
bool is_shift_invariant(const Z4Code& c, Eigen::Index k);

/// Ideal of R[x]/(x^n - lambda) generated by the given polynomials.
struct RCode {
    std::size_t n = 0;
    RElement lambda = kLambda;
    std::vector<RPoly> generators;

    /// {"n", "lambda": e.g. "1+2u", "generators": [{"a": coeff string, "b": coeff string}]}.
    nlohmann::json to_json() const;
    static RCode from_json(const nlohmann::json& j);
};

/// Coordinate representation (length 2n) of the R-submodule spanned by x^j g and u x^j g.
Z4Code span_r_code(const RCode& rc);

enum class GrayLayout { Block, Interleaved };

/// Gray image of an R-code given by its coordinate representation.
Z4Code gray_image(const Z4Code& coordinates, GrayLayout layout = GrayLayout::Block);
Z4Code gray_image(const RCode& rc, GrayLayout layout = GrayLayout::Block);

/// Invariance of a coordinate-represented R-code under the lambda-constacyclic shift.
bool is_constacyclic(const Z4Code& coordinates, RElement lambda);
bool is_constacyclic(const RCode& rc);

/// R-dual {y : sum x_i y_i = 0 in R for all x in C} in coordinate representation:
/// both the a-part and the u-part of the R inner product must vanish.
Z4Code r_dual(const Z4Code& coordinates);

/// Image of a coordinate-represented R-code under an R-linear map on R^n.
Z4Code map_r_code(const Z4Code& coordinates, const std::function<RVector(const RVector&)>& r_linear_map);

}  // namespace rcodes
