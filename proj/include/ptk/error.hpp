#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptk {

/// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or materialization would exceed a configured size cap.
class SizeCapError : public Error {
public:
  SizeCapError(const std::string& what, std::size_t cap, std::size_t reached)
      : Error(what + " exceeds size cap " + std::to_string(cap) + " (reached " +
              std::to_string(reached) + ")"),
        cap_(cap), reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

private:
  std::size_t cap_;
  std::size_t reached_;
};

/// Operands disagree on the number of sites / elements.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An input violates a documented invariant or precondition.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A relation handed to build_poset is not a partial order.
class AxiomError : public Error {
public:
  AxiomError(std::string axiom, const std::string& detail)
      : Error("partial-order axiom violated (" + axiom + "): " + detail),
        axiom_(std::move(axiom)) {}

  const std::string& axiom() const noexcept { return axiom_; }

private:
  std::string axiom_;
};

} // namespace ptk
