#pragma once

#include <string>

#include "pasfrac/numeric.hpp"

namespace test_support {

inline pasfrac::Real real(const char* text) { return pasfrac::Real(text); }

inline bool close(const pasfrac::Real& got, const pasfrac::Real& want, double tol) {
  return boost::multiprecision::abs(got - want) <= pasfrac::Real(tol);
}

inline std::string show(const pasfrac::Real& value) { return pasfrac::format_real(value, 30); }

}  // namespace test_support
