#ifndef FROBTOPE_POLYNOMIAL_HPP
#define FROBTOPE_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "frobtope/linalg.hpp"

namespace frobtope {

/// Dense univariate polynomial with big-integer coefficients; coeffs()[k] is
/// the coefficient of x^k. Trailing zeros are trimmed.
class BigPoly
{
public:
  BigPoly() = default;
  explicit BigPoly(std::vector<BigInt> coeffs);

  static BigPoly monomial(std::size_t degree, BigInt const &coeff = 1);
  /// (1 + x)^n
  static BigPoly binomial(std::size_t n);

  std::vector<BigInt> const &coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const;
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  BigPoly &operator+=(BigPoly const &rhs);
  BigPoly &operator-=(BigPoly const &rhs);
  friend BigPoly operator+(BigPoly a, BigPoly const &b) { return a += b; }
  friend BigPoly operator-(BigPoly a, BigPoly const &b) { return a -= b; }
  friend BigPoly operator*(BigPoly const &a, BigPoly const &b);

  BigPoly pow(std::size_t e) const;

  bool operator==(BigPoly const &) const = default;

  std::string to_string() const;

private:
  void trim();

  std::vector<BigInt> coeffs_;
};

} // namespace frobtope

#endif // FROBTOPE_POLYNOMIAL_HPP
