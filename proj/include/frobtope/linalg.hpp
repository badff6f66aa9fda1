#ifndef FROBTOPE_LINALG_HPP
#define FROBTOPE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace frobtope {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Row-major dense matrix.
template<typename T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T const &fill = T(0))
  : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  T const &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> const &data() const { return data_; }

  bool operator==(Matrix const &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

/// Rank by fraction-free (Bareiss) elimination; entries stay integral.
std::size_t rank(IntMatrix m);

/// Rank over Q; clears denominators row by row and defers to the integer path.
std::size_t rank(RationalMatrix const &m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix &m);

/// Basis of {x : m·x = 0}, one vector per free column.
std::vector<RationalVector> nullspace(RationalMatrix m);

/// Some x with m·x = b, or nullopt if inconsistent.
std::optional<RationalVector> solve(RationalMatrix const &m, RationalVector const &b);

RationalMatrix to_rational(IntMatrix const &m);

/// Stack vectors as rows.
RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);

std::string to_string(Rational const &q);

} // namespace frobtope

#endif // FROBTOPE_LINALG_HPP
