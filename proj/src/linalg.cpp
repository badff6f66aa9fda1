#include "frobtope/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace frobtope {

std::size_t rank(IntMatrix m)
{
  std::size_t const rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  BigInt prev_pivot = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k)
        std::swap(m(pivot, k), m(r, k));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m(i, k) = m(r, c) * m(i, k) - m(i, c) * m(r, k);
        // exact by Sylvester's identity
        m(i, k) /= prev_pivot;
      }
      m(i, c) = 0;
    }
    prev_pivot = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(RationalMatrix const &m)
{
  IntMatrix im(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt lcm = 1;
    for (auto const &q : m.row(i))
      lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(q)));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * lcm;
      im(i, j) = boost::multiprecision::numerator(scaled);
    }
  }
  return rank(std::move(im));
}

std::vector<std::size_t> rref(RationalMatrix &m)
{
  std::vector<std::size_t> pivots;
  std::size_t const rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k)
        std::swap(m(pivot, k), m(r, k));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k)
      m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Rational factor = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        m(i, k) -= factor * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RationalVector> nullspace(RationalMatrix m)
{
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(RationalMatrix const &m, RationalVector const &b)
{
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side has wrong length");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    return std::nullopt;
  RationalVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, m.cols());
  return x;
}

RationalMatrix to_rational(IntMatrix const &m)
{
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = Rational(m(i, j));
  }
  return out;
}

RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols)
{
  RationalMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = rows[i][j];
  }
  return out;
}

std::string to_string(Rational const &q)
{
  return q.str();
}

} // namespace frobtope
