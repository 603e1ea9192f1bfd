#pragma once

// Dense univariate polynomials over Z4 and R, quotient-ring multiplication
// mod x^n - lambda, the (1+2u)x substitution, and the coefficient-string
// notation used in code tables (digits written from high to low degree).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcodes/ring.hpp"

namespace rcodes {

/// Polynomial with coefficients stored lowest degree first, trailing zeros stripped.
template <class Scalar>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { normalize(); }

    static Poly constant(Scalar c) { return Poly(std::vector<Scalar>{c}); }
    static Poly monomial(Scalar c, std::size_t k) {
        std::vector<Scalar> v(k + 1, Scalar(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<Scalar> r(std::max(p.size(), q.size()), Scalar(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i] + q[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p, const Poly& q) {
        std::vector<Scalar> r(std::max(p.size(), q.size()), Scalar(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i] - q[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Scalar> r(p.size() + q.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(Scalar s, const Poly& p) {
        std::vector<Scalar> r(p.c_);
        for (auto& c : r) c = s * c;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

using Z4Poly = Poly<Z4>;
using RPoly = Poly<RElement>;

/// Embeds a Z4 polynomial into R[x] with zero u-part.
RPoly lift(const Z4Poly& p);
/// a(x) + u*b(x).
RPoly combine(const Z4Poly& a, const Z4Poly& b);
/// Splits p = a(x) + u*b(x).
std::pair<Z4Poly, Z4Poly> split(const RPoly& p);

/// Reduction by x^n -> lambda. Accepts any degree; output has degree < n.
RPoly reduce_mod(const RPoly& p, std::size_t n, RElement lambda);

/// Product in R[x]/(x^n - lambda).
RPoly mul_mod(const RPoly& a, const RPoly& b, std::size_t n, RElement lambda);

/// x^k * p in R[x]/(x^n - lambda), i.e. the k-fold constacyclic shift of the coefficient vector.
RPoly shift_mod(const RPoly& p, std::size_t k, std::size_t n, RElement lambda);

/// c(x) -> c((1+2u)x): coefficient i is multiplied by (1+2u)^i. An involution.
RPoly twist(const RPoly& p);
RPoly twist(const Z4Poly& p);

/// x^n - 1 over Z4.
Z4Poly x_n_minus_1(std::size_t n);

/// Quotient and remainder by a monic divisor.
std::pair<Z4Poly, Z4Poly> divmod_monic(const Z4Poly& a, const Z4Poly& m);

/// Reduction of coefficients mod 2.
Z4Poly mod2(const Z4Poly& p);

/// Coefficient vector of length n (degree must be < n).
RVector to_vector(const RPoly& p, std::size_t n);
RPoly from_vector(const RVector& v);

/// Grammar: "0" | digit+ | digit "^" count, pieces concatenable; digits 0..3, high degree first.
/// The empty string is the zero polynomial. Throws Error(BadDigit).
Z4Poly parse_coeff_string(std::string_view text);
/// Inverse of parse_coeff_string: "0" for zero, otherwise plain digits high to low.
std::string format_coeff_string(const Z4Poly& p);

}  // namespace rcodes
