#pragma once

#include "rcodes/ring.hpp"

namespace rcodes {

/// Canonical Howell form of the Z4 row span of m, zero rows removed.
///
/// Rows are in echelon order. Each pivot is 1 or 2, entries above a pivot are
/// reduced into [0, pivot), and every span vector whose first j entries vanish
/// is a combination of the rows with pivot column >= j. Two matrices have the
/// same row span iff their Howell forms are identical, and every span vector is
/// uniquely sum c_i * row_i with c_i in [0, 4 / pivot_i).
Z4Matrix howell_form(const Z4Matrix& m);

/// Howell form of {x : h * x = 0}, the right kernel of h over Z4.
Z4Matrix kernel(const Z4Matrix& h);

/// Pivot column of a nonzero row (first nonzero entry).
Eigen::Index pivot_column(const Z4Vector& row);

}  // namespace rcodes
