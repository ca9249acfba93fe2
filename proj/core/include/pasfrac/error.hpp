#pragma once

#include <stdexcept>
#include <string>

namespace pasfrac {

/// Input outside an operation's mathematical domain (non-prime base, m < n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is meaningful but the requested route is not implemented for it.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Series evaluated at or left of its abscissa of absolute convergence.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pasfrac
