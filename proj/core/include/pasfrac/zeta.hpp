#pragma once

// Truncated zeta series over Pascal's triangle mod p,
//
//   Z(s) = sum over (m, n) in Pas(p) with P(m, n) != 0 of P(m, n)^(-s/d),
//
// grouped by level: sum_{q >= 1} phi(q) q^(-s/d). The numerator polynomial
// is fixed to 1; a non-trivial numerator is rejected.

#include <cstdint>
#include <optional>
#include <vector>

#include "pasfrac/counting.hpp"
#include "pasfrac/ellipticity.hpp"

namespace pasfrac {

struct ZetaPartialSum {
  Prime p;
  FormSpec form;
  Complex s;
  std::uint64_t truncation = 0;  // U: levels 1 <= q < U
  Complex value;
  // Bound on |Z(s) - value| from S(u) <= c_sup u^(theta/d) by partial
  // summation. c_sup is sampled (twice the largest C(u), u <= 2^16), so the
  // bound is heuristic rather than proven.
  Real tail_bound;
  Real c_sup;
  bool tail_bound_heuristic = true;
};

/// Throws DivergenceError if Re s <= theta_p, DomainError if U < 2 and
/// UnsupportedError for a numerator other than 1.
[[nodiscard]] ZetaPartialSum zeta_partial_sum(Prime p, const FormSpec& form, const Complex& s, std::uint64_t U,
                                              const std::optional<Polynomial>& numerator = std::nullopt);

struct StieltjesCheck {
  Complex direct;  // sum_{1 <= q < U} phi(q) q^(-w)
  Complex abel;    // N(U-1) U^(-w) + sum_{j < U} N(j) (j^(-w) - (j+1)^(-w))
  Real residual;   // |direct - abel|
};

/// Compares the level sum with its summation-by-parts form, where
/// N(j) = sum_{1 <= q <= j} phi(q) is the step function behind the integral
/// w * int_j^(j+1) N(u) u^(-w-1) du = N(j) (j^(-w) - (j+1)^(-w)).
[[nodiscard]] StieltjesCheck stieltjes_crosscheck(Prime p, const FormSpec& form, const Complex& s, std::uint64_t U);

/// Twice the largest C(u) over 1 <= u <= u_max. Cached per (p, form, u_max).
[[nodiscard]] Real sup_coefficient(Prime p, const FormSpec& form, std::uint64_t u_max = std::uint64_t{1} << 16);

struct SandwichSample {
  std::uint64_t u = 0;
  Integer lower;  // S^X(floor((u/c2)^(1/d) / 2))
  Integer value;  // S^P(u)
  Integer upper;  // S^X(ceil((u/c1)^(1/d)))
  bool holds = false;
};

struct OrderCheck {
  std::vector<std::uint64_t> ladder;  // u = 2^j <= u_max
  std::vector<Real> ratios;           // S(u) / u^(theta/d)
  Real ratio_min;
  Real ratio_max;
  std::vector<SandwichSample> sandwich;  // empty for forms with lower-order terms
  [[nodiscard]] bool sandwich_holds() const;
  [[nodiscard]] bool within(const Real& lo, const Real& hi) const;
};

/// Throws DomainError unless the form is certified elliptic and positive.
[[nodiscard]] OrderCheck order_check(Prime p, const FormSpec& form, std::uint64_t u_max);

}  // namespace pasfrac
