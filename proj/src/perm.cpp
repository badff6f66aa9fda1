#include "frobtope/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace frobtope {

namespace {

void validate_images(std::vector<std::uint32_t> const &images)
{
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("one-line notation is not a bijection of [n]");
    seen[v] = true;
  }
}

} // namespace

Perm::Perm(std::size_t degree)
: images_(degree)
{
  if (degree == 0)
    throw std::invalid_argument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::span<const Point> one_line)
{
  if (one_line.empty())
    throw std::invalid_argument("permutation degree must be positive");
  images_.reserve(one_line.size());
  for (auto v : one_line) {
    if (v == 0)
      throw std::invalid_argument("one-line notation is one-based");
    images_.push_back(v - 1);
  }
  validate_images(images_);
}

Perm::Perm(std::initializer_list<Point> one_line)
: Perm(std::span<const Point>(one_line.begin(), one_line.size()))
{}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[from - 1])
        throw std::invalid_argument("cycles are not disjoint");
      used[from - 1] = true;
      p.images_[from - 1] = to - 1;
    }
  }
  return p;
}

bool Perm::is_identity() const
{
  for (std::uint32_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != j)
      return false;
  }
  return true;
}

std::size_t Perm::fixed_point_count() const
{
  std::size_t count = 0;
  for (std::uint32_t j = 0; j < images_.size(); ++j)
    count += images_[j] == j;
  return count;
}

std::vector<Point> Perm::fixed_points() const
{
  std::vector<Point> fixed;
  for (std::uint32_t j = 0; j < images_.size(); ++j) {
    if (images_[j] == j)
      fixed.push_back(j + 1);
  }
  return fixed;
}

Perm Perm::inverse() const
{
  Perm inv(degree());
  for (std::uint32_t j = 0; j < images_.size(); ++j)
    inv.images_[images_[j]] = j;
  return inv;
}

std::vector<Point> Perm::one_line() const
{
  std::vector<Point> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(),
                 [](std::uint32_t v) { return v + 1; });
  return out;
}

std::string Perm::to_string() const
{
  std::ostringstream os;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (j)
      os << ',';
    os << images_[j] + 1;
  }
  return os.str();
}

std::string Perm::to_cycle_string() const
{
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    os << '(';
    std::uint32_t j = start;
    bool first = true;
    do {
      if (!first)
        os << ' ';
      os << j + 1;
      first = false;
      done[j] = true;
      j = images_[j];
    } while (j != start);
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

Perm compose(Perm const &p, Perm const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of different degree");
  Perm r(p.degree());
  for (std::size_t j = 0; j < q.images_.size(); ++j)
    r.images_[j] = p.images_[q.images_[j]];
  return r;
}

std::ostream &operator<<(std::ostream &os, Perm const &p)
{
  return os << '[' << p.to_string() << ']';
}

} // namespace frobtope

std::size_t std::hash<frobtope::Perm>::operator()(frobtope::Perm const &p) const noexcept
{
  std::size_t seed = p.images_.size();
  for (auto v : p.images_)
    seed ^= v + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  return seed;
}
