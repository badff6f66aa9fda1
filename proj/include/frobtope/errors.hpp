#ifndef FROBTOPE_ERRORS_HPP
#define FROBTOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobtope {

/// A configured size limit (group closure, enumeration, oracle) was hit.
class CapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// The input group does not satisfy the Frobenius/regular conditions.
class NotFrobenius : public std::runtime_error
{
public:
  NotFrobenius(std::string const &reason, std::string witness)
  : std::runtime_error(reason), witness_(std::move(witness))
  {}

  std::string const &witness() const { return witness_; }

private:
  std::string witness_;
};

} // namespace frobtope

#endif // FROBTOPE_ERRORS_HPP
