#include "pasfrac/digits.hpp"

#include <string>

#include "pasfrac/error.hpp"

namespace pasfrac {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(static_cast<std::uint32_t>(value)) {
  if (value > UINT32_MAX || !is_prime(value)) {
    throw DomainError("not a prime: " + std::to_string(value));
  }
}

Integer DigitVector::evaluate() const {
  Integer value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value *= base;
    value += *it;
  }
  return value;
}

DigitVector expand(std::uint64_t value, Prime base) {
  DigitVector out{base.value(), {}};
  while (value > 0) {
    out.digits.push_back(static_cast<std::uint32_t>(value % base));
    value /= base;
  }
  return out;
}

DigitVector expand(const Integer& value, Prime base) {
  if (value < 0) throw DomainError("cannot expand a negative integer");
  DigitVector out{base.value(), {}};
  Integer rest = value;
  while (rest > 0) {
    out.digits.push_back(static_cast<std::uint32_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base)));
  }
  return out;
}

LatticePoint::LatticePoint(std::uint64_t m, std::uint64_t n) : m_(m), n_(n) {
  if (m < n) {
    throw DomainError("lattice point requires m >= n, got (" + std::to_string(m) + ", " +
                      std::to_string(n) + ")");
  }
}

bool lucas_member(const LatticePoint& point, Prime p) noexcept {
  std::uint64_t m = point.m();
  std::uint64_t n = point.n();
  while (n > 0) {
    if (m % p < n % p) return false;
    m /= p;
    n /= p;
  }
  return true;
}

unsigned kummer_carries(const LatticePoint& point, Prime p) noexcept {
  std::uint64_t a = point.n();
  std::uint64_t b = point.m() - point.n();
  unsigned carries = 0;
  std::uint64_t carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t column = a % p + b % p + carry;
    carry = column >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

// binom(a, b) mod p for single digits a, b < p.
std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = mul_mod(num, a - i, p);
    den = mul_mod(den, i + 1, p);
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

}  // namespace

std::uint32_t binom_mod_p(const LatticePoint& point, Prime p) {
  std::uint64_t m = point.m();
  std::uint64_t n = point.n();
  std::uint64_t result = 1;
  while (n > 0 && result != 0) {
    result = mul_mod(result, small_binom_mod(m % p, n % p, p), p);
    m /= p;
    n /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace pasfrac
