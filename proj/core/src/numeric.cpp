#include "pasfrac/numeric.hpp"

#include <sstream>

namespace pasfrac {

namespace {

// Boost counts MPFR precision in decimal digits; take the fewest digits whose
// bit count covers the request.
unsigned digits10_for_bits(unsigned bits) {
  unsigned digits = 1;
  while (boost::multiprecision::detail::digits10_2_2(digits) < bits) ++digits;
  return digits;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

unsigned working_precision_bits() {
  const Real probe;
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

Real working_epsilon() {
  Real eps = 1;
  mpfr_mul_2si(eps.backend().data(), eps.backend().data(),
               -static_cast<long>(working_precision_bits()), MPFR_RNDN);
  return eps;
}

Real to_real(const mpz_class& value) {
  Real out;
  mpfr_set_z(out.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return out;
}

Real to_real(const mpq_class& value) {
  Real out;
  mpfr_set_q(out.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return out;
}

std::string format_real(const Real& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Complex pow_neg(const Real& x, const Complex& w) {
  const Real log_x = boost::multiprecision::log(x);
  const Real modulus = boost::multiprecision::exp(-w.re * log_x);
  const Real angle = -w.im * log_x;
  return {modulus * boost::multiprecision::cos(angle), modulus * boost::multiprecision::sin(angle)};
}

void CompensatedSum::add(const Real& term) {
  const Real t = sum_ + term;
  if (boost::multiprecision::abs(sum_) >= boost::multiprecision::abs(term)) {
    compensation_ += (sum_ - t) + term;
  } else {
    compensation_ += (term - t) + sum_;
  }
  sum_ = t;
}

}  // namespace pasfrac
