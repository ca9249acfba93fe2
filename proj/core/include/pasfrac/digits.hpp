#pragma once

// Base-p digit arithmetic and membership in Pascal's triangle mod p.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace pasfrac {

using Integer = mpz_class;

/// A prime modulus. Construction validates primality by trial division.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
  operator std::uint32_t() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t value_;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Base-p expansion, least-significant digit first, no trailing zeros.
/// The expansion of 0 is empty.
struct DigitVector {
  std::uint32_t base = 2;
  std::vector<std::uint32_t> digits;

  [[nodiscard]] std::size_t size() const noexcept { return digits.size(); }
  /// Digit j, or 0 past the top (the "leading zeros" convention).
  [[nodiscard]] std::uint32_t at(std::size_t j) const noexcept {
    return j < digits.size() ? digits[j] : 0;
  }
  [[nodiscard]] Integer evaluate() const;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

[[nodiscard]] DigitVector expand(std::uint64_t value, Prime base);
[[nodiscard]] DigitVector expand(const Integer& value, Prime base);

/// A point (m, n) of the triangular lattice, m >= n >= 0.
class LatticePoint {
 public:
  LatticePoint(std::uint64_t m, std::uint64_t n);

  [[nodiscard]] std::uint64_t m() const noexcept { return m_; }
  [[nodiscard]] std::uint64_t n() const noexcept { return n_; }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::uint64_t m_;
  std::uint64_t n_;
};

/// binom(m, n) is not divisible by p, i.e. m_j >= n_j at every digit.
[[nodiscard]] bool lucas_member(const LatticePoint& point, Prime p) noexcept;

/// Number of carries when adding n and m - n in base p; this is the
/// p-adic valuation of binom(m, n).
[[nodiscard]] unsigned kummer_carries(const LatticePoint& point, Prime p) noexcept;

/// prod_j binom(m_j, n_j) mod p.
[[nodiscard]] std::uint32_t binom_mod_p(const LatticePoint& point, Prime p);

}  // namespace pasfrac
