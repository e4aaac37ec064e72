#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace levelkit::lp {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

struct FeasibilityResult {
  bool feasible = false;
  /// A basic feasible point when `feasible`; empty otherwise.
  std::vector<Rational> point;
  std::size_t pivots = 0;
};

/// Decides whether { x : A x = rhs, x >= lower } is non-empty, exactly.
///
/// Phase-one simplex on x = lower + u with one artificial per row, pivoting by
/// Bland's rule (lowest-index entering column, lowest-index leaving row among
/// ratio ties), so the run is deterministic and cannot cycle. Rows may be
/// linearly dependent.
FeasibilityResult find_feasible_point(const Matrix& a, std::span<const Rational> rhs,
                                      std::span<const Rational> lower);

/// Reduced row echelon form with zero rows removed. Returns the pivot column of
/// each surviving row alongside the rows themselves.
struct EchelonForm {
  Matrix rows;
  std::vector<std::size_t> pivot_columns;
};

EchelonForm reduced_row_echelon(Matrix a);

}  // namespace levelkit::lp
