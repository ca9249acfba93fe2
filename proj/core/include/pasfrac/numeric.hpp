#pragma once

// High-precision real and complex arithmetic used by the analysis modules.
//
// Real is MPFR through Boost.Multiprecision. The working precision is a
// process-wide setting (Boost keeps it in a global), so it is changed only
// through PrecisionScope and never concurrently with different values.

#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace pasfrac {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 64;

/// Sets the working precision (in bits) for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

/// Current working precision in bits (at least what was requested).
[[nodiscard]] unsigned working_precision_bits();

/// 2^-bits for the current working precision.
[[nodiscard]] Real working_epsilon();

[[nodiscard]] Real to_real(const mpz_class& value);
[[nodiscard]] Real to_real(const mpq_class& value);

/// Decimal rendering with a fixed number of significant digits.
[[nodiscard]] std::string format_real(const Real& value, int digits);

struct Complex {
  Real re;
  Real im;

  Complex& operator+=(const Complex& other) {
    re += other.re;
    im += other.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
};

[[nodiscard]] Real abs(const Complex& z);

/// x^(-w) for real x > 0 on the principal branch.
[[nodiscard]] Complex pow_neg(const Real& x, const Complex& w);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(const Real& term);
  [[nodiscard]] Real value() const { return sum_ + compensation_; }

 private:
  Real sum_ = 0;
  Real compensation_ = 0;
};

class CompensatedComplexSum {
 public:
  void add(const Complex& term) {
    re_.add(term.re);
    im_.add(term.im);
  }
  [[nodiscard]] Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace pasfrac
