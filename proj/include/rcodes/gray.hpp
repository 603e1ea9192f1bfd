#pragma once

// Coordinate maps between R^n and Z4^2n: the Gray map a + bu -> (b, 2a + b)
// in block and interleaved layouts, constacyclic and cyclic shifts, the
// coordinatewise (1+2u)^i scaling, the Nechaev permutation, and the classical
// Z4 -> binary Gray map.

#include <string>
#include <string_view>
#include <vector>

#include "rcodes/error.hpp"
#include "rcodes/ring.hpp"

namespace rcodes {

/// Block layout (b_0..b_{n-1}, 2a_0+b_0 .. 2a_{n-1}+b_{n-1}).
Z4Vector phi(const RVector& v);

/// Interleaved layout (b_0, 2a_0+b_0, b_1, 2a_1+b_1, ...).
Z4Vector phi_pi(const RVector& v);

/// Index map p with phi_pi(v)[i] = phi(v)[p[i]].
std::vector<Eigen::Index> interleave_permutation(Eigen::Index n);

/// (v_0, .., v_{n-1}) -> (eta*v_{n-1}, v_0, .., v_{n-2}). Throws Error(NotAUnit).
RVector constacyclic_shift(const RVector& v, RElement eta);

/// k-fold right rotation; works for any scalar type.
template <class Derived>
typename Derived::PlainObject cyclic_shift(const Eigen::MatrixBase<Derived>& v, Eigen::Index k) {
    const Eigen::Index m = v.size();
    typename Derived::PlainObject out(m);
    if (m == 0) return out;
    k %= m;
    for (Eigen::Index i = 0; i < m; ++i) out((i + k) % m) = v(i);
    return out;
}

/// The transposition list of tau on {0..2n-1}: (1, n+1)(3, n+3)...(n-2, 2n-2). n must be odd.
std::vector<Eigen::Index> nechaev_permutation(Eigen::Index n);

/// pi(c)_j = c_{tau(j)}. Throws Error(BadLength) unless |v| = 2n with n odd.
Z4Vector nechaev(const Z4Vector& v);

/// Entry i multiplied by (1+2u)^i.
RVector phi_bar(const RVector& v);

/// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10 per coordinate.
BinaryVector binary_gray(const Z4Vector& v);

/// Coordinate representation a + bu -> (a_0..a_{n-1}, b_0..b_{n-1}).
Z4Vector to_coordinates(const RVector& v);
RVector from_coordinates(const Z4Vector& c);

/// Applies a coordinate permutation: out[j] = v[perm[j]].
template <class Derived>
typename Derived::PlainObject permute(const Eigen::MatrixBase<Derived>& v, const std::vector<Eigen::Index>& perm) {
    typename Derived::PlainObject out(v.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) out(j) = v(perm[static_cast<std::size_t>(j)]);
    return out;
}

std::string to_string(const RVector& v);
std::string to_string(const Z4Vector& v);
std::string to_bitstring(const BinaryVector& v);
/// Digit string with coordinate 0 first, e.g. "0213".
std::string to_digits(const Z4Vector& v);

/// Comma-separated R elements, e.g. "1, u, 2+3u".
RVector parse_r_vector(std::string_view text);
/// Either comma-separated digits or a plain digit string (coordinate 0 first).
Z4Vector parse_z4_vector(std::string_view text);

}  // namespace rcodes
