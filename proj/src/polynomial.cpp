#include "frobtope/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace frobtope {

BigPoly::BigPoly(std::vector<BigInt> coeffs)
: coeffs_(std::move(coeffs))
{
  trim();
}

BigPoly BigPoly::monomial(std::size_t degree, BigInt const &coeff)
{
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = coeff;
  return BigPoly(std::move(c));
}

BigPoly BigPoly::binomial(std::size_t n)
{
  // Pascal row, built iteratively to stay in exact integers
  std::vector<BigInt> row{BigInt(1)};
  for (std::size_t i = 0; i < n; ++i) {
    row.push_back(BigInt(1));
    for (std::size_t k = row.size() - 2; k > 0; --k)
      row[k] += row[k - 1];
  }
  return BigPoly(std::move(row));
}

BigInt BigPoly::coeff(std::size_t k) const
{
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigPoly &BigPoly::operator+=(BigPoly const &rhs)
{
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

BigPoly &BigPoly::operator-=(BigPoly const &rhs)
{
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

BigPoly operator*(BigPoly const &a, BigPoly const &b)
{
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BigPoly(std::move(out));
}

BigPoly BigPoly::pow(std::size_t e) const
{
  BigPoly result = monomial(0);
  BigPoly base = *this;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

void BigPoly::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

std::string BigPoly::to_string() const
{
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0)
      continue;
    if (!first)
      os << (coeffs_[k] < 0 ? " - " : " + ");
    else if (coeffs_[k] < 0)
      os << '-';
    BigInt mag = abs(coeffs_[k]);
    if (mag != 1 || k == 0)
      os << mag;
    if (k >= 1)
      os << 'x';
    if (k >= 2)
      os << '^' << k;
    first = false;
  }
  return os.str();
}

} // namespace frobtope
