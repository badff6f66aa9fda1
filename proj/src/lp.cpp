#include "frobtope/lp.hpp"

#include <stdexcept>

namespace frobtope {

std::optional<RationalVector> find_feasible_point(RationalMatrix const &a,
                                                  RationalVector const &b)
{
  std::size_t const rows = a.rows(), vars = a.cols();
  if (b.size() != rows)
    throw std::invalid_argument("find_feasible_point: size mismatch");
  if (rows == 0)
    return RationalVector(vars, Rational(0));

  // Columns: x+ (vars), x- (vars), surplus (rows), artificial (rows), rhs.
  std::size_t const x_plus = 0, x_minus = vars, surplus = 2 * vars,
                    artificial = 2 * vars + rows, rhs = 2 * vars + 2 * rows;
  RationalMatrix t(rows + 1, rhs + 1);
  std::vector<std::size_t> basis(rows);

  for (std::size_t i = 0; i < rows; ++i) {
    // row i: A_i x+ − A_i x− − s_i = b_i, flipped so the rhs is nonnegative
    int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < vars; ++j) {
      t(i, x_plus + j) = sign * a(i, j);
      t(i, x_minus + j) = -sign * a(i, j);
    }
    t(i, surplus + i) = -sign;
    t(i, artificial + i) = 1;
    t(i, rhs) = sign * b[i];
    basis[i] = artificial + i;
  }
  // objective row: reduced costs of min Σ artificial
  for (std::size_t j = 0; j < artificial; ++j) {
    for (std::size_t i = 0; i < rows; ++i)
      t(rows, j) -= t(i, j);
  }
  for (std::size_t i = 0; i < rows; ++i)
    t(rows, rhs) -= t(i, rhs);

  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (t(rows, j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == rhs)
      break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0)
        continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // phase one is bounded below by zero
    if (leave == rows)
      throw std::logic_error("find_feasible_point: unbounded phase one");

    Rational pivot = t(leave, enter);
    for (std::size_t j = 0; j <= rhs; ++j)
      t(leave, j) /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t(i, enter) == 0)
        continue;
      Rational factor = t(i, enter);
      for (std::size_t j = 0; j <= rhs; ++j)
        t(i, j) -= factor * t(leave, j);
    }
    basis[leave] = enter;
  }

  if (t(rows, rhs) != 0)
    return std::nullopt;

  RationalVector x(vars, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < x_minus)
      x[basis[i] - x_plus] += t(i, rhs);
    else if (basis[i] < surplus)
      x[basis[i] - x_minus] -= t(i, rhs);
  }
  return x;
}

} // namespace frobtope
