#pragma once

// Accumulation points of C(u) along geometric subsequences p^k u.
//
// For P = X+Y the scaling law gives, for every k,
//   C(p^k u) = C(u) - (1 - c^-k) phi(u-1) / (2 u^theta),  c = 3 (p = 2), p (p >= 3)
// so A(u) = lim_k C(p^k u) = C(u) - phi(u-1) / (2 u^theta).
// For P = X+2Y (p = 2) the Fibonacci closed form gives
//   A(u) = C(u) - (3 phi(u-1) + phi(u-2)) / (5 u^theta).
// Two different values of A prove that C(u) has no limit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pasfrac/counting.hpp"
#include "pasfrac/theta.hpp"

namespace pasfrac {

struct AccumulationReport {
  Prime p;
  FormKind form;
  Integer u;
  Real coefficient;  // C(u)
  Real correction;   // C(u) - A(u), never negative
  Real limit;        // A(u)
  // |C(p^k u) - A(u)| <= bound_scale * bound_ratio^k. For X+Y this holds with
  // equality.
  Real bound_scale;
  Real bound_ratio;

  [[nodiscard]] Real error_bound(unsigned k) const;
  /// Smallest k with error_bound(k) < tolerance.
  [[nodiscard]] unsigned steps_for(const Real& tolerance) const;
};

[[nodiscard]] AccumulationReport accumulation_diagonal(Prime p, const Integer& u);
/// P = X+2Y over p = 2.
[[nodiscard]] AccumulationReport accumulation_skew(const Integer& u);
/// Dispatches on the form; skew requires p = 2 (UnsupportedError otherwise).
[[nodiscard]] AccumulationReport accumulation(Prime p, FormKind form, const Integer& u);

/// C(p^k u) for X+Y from the finite-k identity, without computing S(p^k u).
[[nodiscard]] Real finite_k_coefficient_diagonal(Prime p, const Integer& u, unsigned k);

/// C(2^k u) for X+2Y from the golden-ratio double sum
///   C(u) - 1/((g+ - g-) u^theta) sum_{l<k} [(g+^{k-l} - g-^{k-l}) phi(u-1)
///          + (g+^{k-l-1} - g-^{k-l-1}) phi(u-2)] / 3^{k-l}
/// evaluated with real radicals.
[[nodiscard]] Real finite_k_coefficient_skew(const Integer& u, unsigned k);

struct DistinctnessVerdict {
  AccumulationReport first;
  AccumulationReport second;
  Real gap;
  Real tolerance;
  bool distinct = false;
};

inline constexpr double kDefaultDistinctTolerance = 1e-9;

[[nodiscard]] DistinctnessVerdict distinctness_check(FormKind form, Prime p, const Integer& u1,
                                                     const Integer& u2,
                                                     const Real& tolerance = Real(kDefaultDistinctTolerance));

struct ExtremaScan {
  Prime p;
  FormSpec form;
  std::uint64_t u_max = 0;
  // Accumulation values A(u), 1 <= u <= u_max; absent for forms without a
  // closed accumulation formula.
  std::optional<Real> limit_min;
  std::optional<Real> limit_max;
  std::vector<std::uint64_t> limit_argmin;
  std::vector<std::uint64_t> limit_argmax;
  std::vector<Real> limits;  // limits[u - 1] = A(u), when available
  // C(u) itself on the same range.
  Real coefficient_min;
  Real coefficient_max;
  std::vector<std::uint64_t> coefficient_argmin;
  std::vector<std::uint64_t> coefficient_argmax;
};

[[nodiscard]] bool has_accumulation_formula(Prime p, const FormSpec& form) noexcept;

[[nodiscard]] ExtremaScan scan_extrema(Prime p, const FormSpec& form, std::uint64_t u_max);

struct WilsonBounds {
  Prime p;
  Real lower;  // (1 - 2^(1/(1-theta)))^(theta-1)
  Real upper;  // (3-theta) / (2 (2-theta)^(2-theta))
};

[[nodiscard]] WilsonBounds wilson_bounds(Prime p);

struct BoundCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ClassicalBoundsReport {
  std::uint64_t u_max = 0;
  std::vector<BoundCheck> checks;
  Real min_column_coefficient;  // min of C_2^X(u) over 1 <= u <= u_max
  std::uint64_t argmin_column_coefficient = 1;
  std::vector<WilsonBounds> wilson;

  [[nodiscard]] bool passed() const;
};

inline constexpr double kHarborthLower = 0.812556;

/// Numeric consistency with the known bounds for S_2^X: Stolarsky's
/// u^theta/3 < S < 3 u^theta, alpha_2 = 1, Harborth's liminf window, and
/// Wilson's bounds on beta_p for p <= max_prime.
[[nodiscard]] ClassicalBoundsReport classical_bounds_check(std::uint64_t u_max, std::uint32_t max_prime = 97,
                                                           unsigned power_limit = 40);

}  // namespace pasfrac
