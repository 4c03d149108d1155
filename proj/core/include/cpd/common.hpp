#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpd
{

/// Handle into a group's canonical element table. Index 0 is the identity.
using ElementId = std::uint32_t;

/// Desk-scale resource limits. Every enumeration that can blow up checks one
/// of these and throws CapExceeded instead of running away.
struct Caps
{
  std::size_t elements = 10000;  ///< largest group whose element table is built
  std::size_t lattice = 5000;    ///< largest group whose subgroup lattice is enumerated
  std::size_t spin = std::size_t{1} << 20;  ///< largest |V| = p^n for exhaustive spinning
};

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error
{
public:
  using Error::Error;
};

class NotNormal : public Error
{
public:
  using Error::Error;
};

class HypothesisViolated : public Error
{
public:
  using Error::Error;
};

class BadParameters : public Error
{
public:
  using Error::Error;
};

class NotInvariant : public Error
{
public:
  using Error::Error;
};

class NotFaithful : public Error
{
public:
  NotFaithful(std::string const &what, std::string kernel_witness)
  : Error(what), _kernel_witness(std::move(kernel_witness))
  {}

  std::string const &kernel_witness() const { return _kernel_witness; }

private:
  std::string _kernel_witness;
};

class UnknownName : public Error
{
public:
  using Error::Error;
};

/// Malformed group files, invalid generators and similar input defects.
class BadInput : public Error
{
public:
  using Error::Error;
};

} // namespace cpd
