#ifndef FROBTOPE_PERM_HPP
#define FROBTOPE_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace frobtope {

using Point = std::uint32_t;

/**
 * A permutation of {1, ..., n} in one-line notation.
 *
 * Images are stored zero-based; `operator()` and the string/one-line
 * interfaces are one-based so that `p(j) == i` reads as it does on paper.
 */
class Perm
{
public:
  explicit Perm(std::size_t degree = 1);

  /// One-based one-line notation: `images[j-1] == p(j)`.
  explicit Perm(std::span<const Point> one_line);
  Perm(std::initializer_list<Point> one_line);

  /// Build from disjoint cycles given with one-based points.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  std::size_t degree() const { return images_.size(); }

  /// One-based image of a one-based point.
  Point operator()(Point j) const { return images_[j - 1] + 1; }

  bool is_identity() const;
  std::size_t fixed_point_count() const;
  std::vector<Point> fixed_points() const;

  Perm inverse() const;

  std::vector<Point> one_line() const;
  std::string to_string() const;
  std::string to_cycle_string() const;

  auto operator<=>(Perm const &) const = default;
  bool operator==(Perm const &) const = default;

private:
  friend Perm compose(Perm const &p, Perm const &q);
  friend struct std::hash<Perm>;

  std::vector<std::uint32_t> images_;
};

/// (p ∘ q)(j) = p(q(j)). Throws std::invalid_argument on degree mismatch.
Perm compose(Perm const &p, Perm const &q);

inline Perm operator*(Perm const &p, Perm const &q) { return compose(p, q); }

std::ostream &operator<<(std::ostream &os, Perm const &p);

} // namespace frobtope

template<>
struct std::hash<frobtope::Perm>
{
  std::size_t operator()(frobtope::Perm const &p) const noexcept;
};

#endif // FROBTOPE_PERM_HPP
