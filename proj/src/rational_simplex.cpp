#include "levelkit/rational_simplex.hpp"

#include <stdexcept>

namespace levelkit::lp {

FeasibilityResult find_feasible_point(const Matrix& a, std::span<const Rational> rhs,
                                      std::span<const Rational> lower) {
  const std::size_t m = a.size();
  const std::size_t n = lower.size();
  if (rhs.size() != m) throw std::invalid_argument("rhs length differs from row count");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("row length differs from variable count");
  }

  // Columns 0..n-1 are the shifted variables u, n..n+m-1 the artificials.
  const std::size_t cols = n + m;
  Matrix tab(m, std::vector<Rational>(cols + 1, 0));
  for (std::size_t r = 0; r < m; ++r) {
    Rational b = rhs[r];
    for (std::size_t j = 0; j < n; ++j) b -= a[r][j] * lower[j];
    const int sign = b < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab[r][j] = sign * a[r][j];
    tab[r][n + r] = 1;
    tab[r][cols] = sign * b;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(cols + 1, 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= tab[r][j];
    cost[cols] -= tab[r][cols];
  }

  FeasibilityResult result;
  while (cost[cols] != 0) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;  // optimal with positive infeasibility

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][cols] / tab[r][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // The phase-one objective is bounded below by zero, so some row qualifies.
    if (leave == m) throw std::logic_error("phase-one simplex found an unbounded direction");

    const Rational pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const Rational factor = tab[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[r][j] -= factor * tab[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  if (cost[cols] != 0) return result;
  result.feasible = true;
  result.point.assign(lower.begin(), lower.end());
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) result.point[basis[r]] += tab[r][cols];
  }
  return result;
}

EchelonForm reduced_row_echelon(Matrix a) {
  EchelonForm out;
  if (a.empty()) return out;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    const Rational lead = a[row][col];
    for (auto& v : a[row]) v /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] -= factor * a[row][j];
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

}  // namespace levelkit::lp
