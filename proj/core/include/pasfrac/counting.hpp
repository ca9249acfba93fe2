#pragma once

// Exact level counts phi(q), summatory S(u) and normalized C(u) for a weight
// form P over the points of Pascal's triangle mod p:
//
//   phi(q) = #{(m, n) in Pas(p) : P(m, n) = q}        (0 for q < 0)
//   S(u)   = sum_{0 <= q < u} phi(q)
//   C(u)   = S(u) / u^(theta_p / deg P)
//
// The brute-force route enumerates the finite candidate region and applies
// the Lucas criterion; the fast routes walk base-p digits.

#include <cstdint>
#include <string_view>
#include <vector>

#include "pasfrac/digits.hpp"
#include "pasfrac/form.hpp"
#include "pasfrac/numeric.hpp"

namespace pasfrac {

enum class Method {
  BruteForce,  // enumeration + Lucas membership
  Recurrence,  // digit recurrence on (phi(q), phi(q-1), ...)
  DigitDp,     // least-significant-first carry automaton
  Product,     // prod (m_j + 1) / its closed prefix sum
  Scaled,      // exact scaling law S(p^k u) from S(u)
  PrefixSum,   // running sum of a phi table
};

[[nodiscard]] std::string_view method_name(Method method) noexcept;

struct Counted {
  Integer value;
  Method method;
};

/// Enumeration oracle. General forms must be certified T-elliptic so the
/// level set is finite; otherwise throws DomainError.
[[nodiscard]] Integer phi_bruteforce(Prime p, const FormSpec& form, const Integer& q);

/// phi for P = X+Y, O(log q), driving (phi(Q), phi(Q-1)) through the digit
/// recurrence phi(pQ+r) = floor(r/2+1) phi(Q) + floor((p-r)/2) phi(Q-1).
[[nodiscard]] Integer phi_diagonal(Prime p, const Integer& q);

/// phi for P = X+pY, O(p log q), via phi(pQ+r) = sum_{a<=r} phi(Q-a).
[[nodiscard]] Integer phi_skew(Prime p, const Integer& q);

/// phi for P = X: number of n with n_j <= m_j digitwise, prod (m_j + 1).
[[nodiscard]] Integer phi_column(Prime p, const Integer& m);

/// phi for P = aX+bY (a >= 1, b >= 0) through the carry automaton over
/// digit pairs m_j >= n_j. Carries stay below a+b.
[[nodiscard]] Integer phi_linear_dp(Prime p, std::uint64_t a, std::uint64_t b, const Integer& q);

/// phi(p^k q - 1) from phi(q-1), phi(q-2) without walking p^k q.
/// Diagonal: floor((p+1)/2)^k phi(q-1). Skew (p = 2 only):
/// F_{k+1} phi(q-1) + F_k phi(q-2) with Fibonacci numbers F.
[[nodiscard]] Integer phi_closed_form_pk(Prime p, const Integer& q, unsigned k, FormKind form);

/// (phi(p^k u - b))_{b=1..p} for P = X+pY, advanced k times by the linear
/// system relating consecutive powers of p. Entry i holds b = i + 1.
[[nodiscard]] std::vector<Integer> skew_tail_vector(Prime p, const Integer& u, unsigned k);

/// Fastest available phi route for the form.
[[nodiscard]] Counted evaluate_phi(Prime p, const FormSpec& form, const Integer& q);

/// phi(0), ..., phi(count - 1).
[[nodiscard]] std::vector<Integer> phi_table(Prime p, const FormSpec& form, std::uint64_t count);

/// S(u) with the method that produced it. Requires u >= 1.
[[nodiscard]] Counted evaluate_summatory(Prime p, const FormSpec& form, const Integer& u);
[[nodiscard]] Integer summatory(Prime p, const FormSpec& form, const Integer& u);

/// S(0), S(1), ..., S(count - 1) for built-in forms, with S(0) = 0.
[[nodiscard]] std::vector<Integer> summatory_table(Prime p, const FormSpec& form, std::uint64_t count);

/// S(p^k u) from S(u) by the exact scaling law. form is Diagonal or Skew.
[[nodiscard]] Integer summatory_scaled(Prime p, FormKind form, const Integer& u, unsigned k);

/// p(p+1)/2, which equals p^theta_p.
[[nodiscard]] Integer growth_base(Prime p);

/// u^(theta_p / degree) at the working precision. Powers of p in u are
/// pulled out exactly, so (p^k)^theta_p is the integer (p(p+1)/2)^k.
[[nodiscard]] Real pow_theta(Prime p, const Integer& u, unsigned degree = 1);

/// C(u) = S(u) / u^(theta_p / d) at the working precision.
[[nodiscard]] Real coefficient(Prime p, const FormSpec& form, const Integer& u);
[[nodiscard]] Real coefficient_from(Prime p, const Integer& summatory_value, const Integer& u,
                                    unsigned degree = 1);

struct CountRecord {
  Prime p;
  FormSpec form;
  Integer argument;
  Integer phi;          // phi(argument)
  Integer summatory;    // S(argument); 0 when argument < 1
  Real coefficient;     // C(argument); 0 when argument < 1
  Method phi_method;
  Method summatory_method;
};

[[nodiscard]] CountRecord count_record(Prime p, const FormSpec& form, const Integer& argument);

}  // namespace pasfrac
