#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

// Operands live in different algebras.
class SignatureMismatch : public std::invalid_argument {
 public:
  explicit SignatureMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// An argument lies outside the domain of an operation (bad grade, not a
// paravector, impure spinor, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// A conformal map sends the point to the infinity of the compactification.
class AtInfinity : public std::domain_error {
 public:
  explicit AtInfinity(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cliff
