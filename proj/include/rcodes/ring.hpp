#pragma once

// Scalar types: the integers mod 4 and the ring R = Z4 + uZ4 with u^2 = 1.
// Both are registered with Eigen so dense vectors and matrices over them are
// ordinary Eigen objects.

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace rcodes {

/// Residue class mod 4. The stored value is always reduced into {0,1,2,3}.
class Z4 {
public:
    constexpr Z4() = default;
    constexpr Z4(int v) : v_(static_cast<std::uint8_t>(v & 3)) {}  // NOLINT: implicit by design of Eigen scalars

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool is_unit() const { return (v_ & 1) != 0; }

    friend constexpr Z4 operator+(Z4 x, Z4 y) { return Z4(x.v_ + y.v_); }
    friend constexpr Z4 operator-(Z4 x, Z4 y) { return Z4(x.v_ + 4 - y.v_); }
    friend constexpr Z4 operator*(Z4 x, Z4 y) { return Z4(x.v_ * y.v_); }
    constexpr Z4 operator-() const { return Z4(4 - v_); }
    constexpr Z4& operator+=(Z4 y) { return *this = *this + y; }
    constexpr Z4& operator-=(Z4 y) { return *this = *this - y; }
    constexpr Z4& operator*=(Z4 y) { return *this = *this * y; }

    friend constexpr bool operator==(Z4, Z4) = default;
    friend constexpr auto operator<=>(Z4, Z4) = default;

private:
    std::uint8_t v_ = 0;
};

constexpr unsigned lee_weight(Z4 x) {
    constexpr std::array<unsigned, 4> table{0, 1, 2, 1};
    return table[x.value()];
}

constexpr unsigned euclidean_weight(Z4 x) {
    constexpr std::array<unsigned, 4> table{0, 1, 4, 1};
    return table[x.value()];
}

/// Element a + b*u of R = Z4[u]/(u^2 - 1).
class RElement {
public:
    constexpr RElement() = default;
    constexpr RElement(int a) : a_(a) {}  // NOLINT: integers embed as constants
    constexpr RElement(Z4 a) : a_(a) {}   // NOLINT
    constexpr RElement(Z4 a, Z4 b) : a_(a), b_(b) {}

    static constexpr RElement u() { return {Z4(0), Z4(1)}; }

    constexpr Z4 a() const { return a_; }
    constexpr Z4 b() const { return b_; }
    constexpr bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Units are exactly the elements outside the maximal ideal <2u, 1+u>, i.e. a+b odd.
    constexpr bool is_unit() const { return ((a_.value() + b_.value()) & 1) != 0; }

    friend constexpr RElement operator+(RElement x, RElement y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend constexpr RElement operator-(RElement x, RElement y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend constexpr RElement operator*(RElement x, RElement y) {
        return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    constexpr RElement operator-() const { return {-a_, -b_}; }
    constexpr RElement& operator+=(RElement y) { return *this = *this + y; }
    constexpr RElement& operator-=(RElement y) { return *this = *this - y; }
    constexpr RElement& operator*=(RElement y) { return *this = *this * y; }

    friend constexpr bool operator==(RElement, RElement) = default;
    friend constexpr auto operator<=>(RElement, RElement) = default;

private:
    Z4 a_;
    Z4 b_;
};

/// The shift constant 1 + 2u. It is its own inverse.
inline constexpr RElement kLambda{Z4(1), Z4(2)};

/// Inverse of a unit; throws Error(NotAUnit) otherwise.
RElement inverse(RElement x);

/// (1+2u)^n: 1 for even n, 1+2u for odd n.
constexpr RElement lambda_power(unsigned long long n) { return (n & 1) ? kLambda : RElement(1); }

/// Weights of a + bu are those of its Gray pair (b, 2a + b).
constexpr unsigned lee_weight(RElement x) {
    return lee_weight(x.b()) + lee_weight(Z4(2) * x.a() + x.b());
}
constexpr unsigned euclidean_weight(RElement x) {
    return euclidean_weight(x.b()) + euclidean_weight(Z4(2) * x.a() + x.b());
}

/// All 16 elements, ordered by (a, b).
std::array<RElement, 16> all_elements();

std::string to_string(Z4 x);
std::string to_string(RElement x);

/// Accepts "0", "3", "u", "2u", "1+u", "2+3u" and spacing variants; throws Error(BadElement).
RElement parse_element(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, Z4 x) { return os << x.value(); }
inline std::ostream& operator<<(std::ostream& os, RElement x) { return os << to_string(x); }

}  // namespace rcodes

namespace Eigen {

template <>
struct NumTraits<rcodes::Z4> : GenericNumTraits<rcodes::Z4> {
    using Real = rcodes::Z4;
    using NonInteger = rcodes::Z4;
    using Literal = rcodes::Z4;
    using Nested = rcodes::Z4;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 1,
        MulCost = 1,
    };
};

template <>
struct NumTraits<rcodes::RElement> : GenericNumTraits<rcodes::RElement> {
    using Real = rcodes::RElement;
    using NonInteger = rcodes::RElement;
    using Literal = rcodes::RElement;
    using Nested = rcodes::RElement;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4,
    };
};

}  // namespace Eigen

namespace rcodes {

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Z4Vector = Vector<Z4>;
using RVector = Vector<RElement>;
using Z4Matrix = Matrix<Z4>;
using BinaryVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;

}  // namespace rcodes
