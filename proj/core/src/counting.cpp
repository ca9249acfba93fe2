#include "pasfrac/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pasfrac/ellipticity.hpp"
#include "pasfrac/error.hpp"
#include "pasfrac/theta.hpp"

namespace pasfrac {

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::BruteForce:
      return "brute";
    case Method::Recurrence:
      return "recurrence";
    case Method::DigitDp:
      return "dp";
    case Method::Product:
      return "product";
    case Method::Scaled:
      return "scaled";
    case Method::PrefixSum:
      return "prefix-sum";
  }
  return "?";
}

namespace {

std::uint64_t to_u64(const Integer& value, const char* what) {
  if (value < 0 || !value.fits_ulong_p()) {
    throw DomainError(std::string(what) + " out of range for enumeration: " + value.get_str());
  }
  return value.get_ui();
}

Integer power(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer fibonacci(unsigned long n) {
  Integer out;
  mpz_fib_ui(out.get_mpz_t(), n);
  return out;
}

// Radius beyond which a certified T-elliptic P exceeds `level`.
std::uint64_t search_radius(const Polynomial& poly, const Integer& level) {
  const NormBounds bounds = ellipticity_constants(poly);
  const long double d = poly.degree();
  const long double reach = std::pow(std::max(0.0L, static_cast<long double>(level.get_d())) / bounds.c1, 1.0L / d);
  return static_cast<std::uint64_t>(std::ceil(std::max(bounds.R, reach))) + 1;
}

// Visits every (m, n) in Pas(p) with 0 <= P(m, n) < limit for a general form.
template <typename Visit>
void enumerate_general(Prime p, const Polynomial& poly, const Integer& limit, Visit visit) {
  const std::uint64_t radius = search_radius(poly, limit);
  Integer value;
  for (std::uint64_t m = 0; m <= radius; ++m) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      if (!lucas_member(LatticePoint(m, n), p)) continue;
      value = poly.evaluate(Integer(m), Integer(n));
      if (value >= 0 && value < limit) visit(value);
    }
  }
}

// phi(0..count-1) with machine integers; phi(x) <= x + 1 always fits.
std::vector<std::uint64_t> phi_table_u64(Prime p, FormKind kind, std::uint64_t count) {
  std::vector<std::uint64_t> t(count);
  if (count == 0) return t;
  t[0] = 1;
  const std::uint64_t pp = p;
  for (std::uint64_t x = 1; x < count; ++x) {
    const std::uint64_t q = x / pp;
    const std::uint64_t r = x % pp;
    switch (kind) {
      case FormKind::Column:
        t[x] = t[q] * (r + 1);
        break;
      case FormKind::Diagonal:
        t[x] = (r / 2 + 1) * t[q] + (q >= 1 ? (pp - r) / 2 * t[q - 1] : 0);
        break;
      case FormKind::Skew: {
        std::uint64_t sum = 0;
        for (std::uint64_t a = 0; a <= r && a <= q; ++a) sum += t[q - a];
        t[x] = sum;
        break;
      }
      default:
        throw UnsupportedError("no recurrence table for this form");
    }
  }
  return t;
}

// S^X(u) = sum over the top position j where m first drops below u:
// prod_{i>j} (u_i + 1) * u_j (u_j + 1) / 2 * (p(p+1)/2)^j.
Integer column_summatory(Prime p, const Integer& u) {
  const DigitVector digits = expand(u, p);
  const Integer growth = growth_base(p);
  Integer total = 0;
  Integer upper = 1;  // prod_{i > j} (u_i + 1)
  for (std::size_t j = digits.size(); j-- > 0;) {
    const std::uint64_t d = digits.digits[j];
    total += upper * Integer(d * (d + 1) / 2) * power(growth, j);
    upper *= d + 1;
  }
  return total;
}

Integer prefix_summatory(Prime p, const FormSpec& form, const Integer& u) {
  const std::uint64_t count = to_u64(u, "summatory bound");
  if (form.kind() == FormKind::Linear) {
    const auto c = *form.linear_coeffs(p);
    Integer total = 0;
    for (std::uint64_t q = 0; q < count; ++q) total += phi_linear_dp(p, c.a, c.b, Integer(q));
    return total;
  }
  const auto table = phi_table_u64(p, form.kind(), count);
  Integer total = 0;
  __extension__ unsigned __int128 acc = 0;
  for (const auto v : table) acc += v;
  // acc <= count^2 < 2^128
  const auto hi = static_cast<std::uint64_t>(acc >> 64U);
  const auto lo = static_cast<std::uint64_t>(acc);
  total = Integer(hi);
  total <<= 64;
  total += Integer(lo);
  return total;
}

// (phi(v - b))_{b=1..p} -> (phi(pv - b))_{b=1..p} for P = X+pY, using
// pv - b = p(v - 1) + (p - b) for 1 <= b < p, and pv - p = p(v - 1).
void advance_skew_tail(std::vector<Integer>& w) {
  const std::size_t pp = w.size();
  std::vector<Integer> next(pp);
  Integer sum = 0;
  for (std::size_t a = 0; a < pp; ++a) sum += w[a];
  // b = 1 sums w[0..p-1]; each larger b drops the last term.
  for (std::size_t b = 1; b < pp; ++b) {
    next[b - 1] = sum;
    sum -= w[pp - b];
  }
  next[pp - 1] = w[0];
  w.swap(next);
}

}  // namespace

Integer growth_base(Prime p) {
  const std::uint64_t pp = p;
  return Integer(pp * (pp + 1) / 2);
}

Integer phi_bruteforce(Prime p, const FormSpec& form, const Integer& q) {
  if (q < 0) return 0;
  if (const auto c = form.linear_coeffs(p)) {
    const std::uint64_t level = to_u64(q, "level");
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n <= level / (c->a + c->b); ++n) {
      const std::uint64_t rest = level - c->b * n;
      if (rest % c->a != 0) continue;
      const std::uint64_t m = rest / c->a;
      if (m >= n && lucas_member(LatticePoint(m, n), p)) ++count;
    }
    return count;
  }
  const Polynomial& poly = form.polynomial();
  std::uint64_t count = 0;
  const std::uint64_t radius = search_radius(poly, q);
  for (std::uint64_t m = 0; m <= radius; ++m) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      if (poly.evaluate(Integer(m), Integer(n)) == q && lucas_member(LatticePoint(m, n), p)) ++count;
    }
  }
  return count;
}

Integer phi_diagonal(Prime p, const Integer& q) {
  if (q < 0) return 0;
  const DigitVector digits = expand(q, p);
  const unsigned long pp = p;
  // (phi(Q), phi(Q-1)) for the prefix Q of q read from the top digit.
  Integer cur = 1;
  Integer prev = 0;
  Integer next_cur;
  Integer next_prev;
  for (std::size_t j = digits.size(); j-- > 0;) {
    const unsigned long r = digits.digits[j];
    next_cur = (r / 2 + 1) * cur + (pp - r) / 2 * prev;
    if (r >= 1) {
      next_prev = ((r - 1) / 2 + 1) * cur + (pp - r + 1) / 2 * prev;
    } else {
      // pQ - 1 = p(Q-1) + (p-1), and floor((p-(p-1))/2) = 0.
      next_prev = (pp + 1) / 2 * prev;
    }
    cur.swap(next_cur);
    prev.swap(next_prev);
  }
  return cur;
}

Integer phi_skew(Prime p, const Integer& q) {
  if (q < 0) return 0;
  const DigitVector digits = expand(q, p);
  const std::size_t pp = p;
  // window[j] = phi(Q - j) for j = 0..p. Expressing phi(pQ + r - j) for
  // j > r reaches down to phi(Q - p), so the window is p + 1 wide.
  std::vector<Integer> window(pp + 1, Integer(0));
  window[0] = 1;
  std::vector<Integer> prefix(pp + 2);
  std::vector<Integer> next(pp + 1);
  for (std::size_t j = digits.size(); j-- > 0;) {
    const std::size_t r = digits.digits[j];
    prefix[0] = 0;
    for (std::size_t i = 0; i <= pp; ++i) prefix[i + 1] = prefix[i] + window[i];
    for (std::size_t back = 0; back <= pp; ++back) {
      if (back <= r) {
        next[back] = prefix[r - back + 1];  // sum_{a<=r-back} phi(Q-a)
      } else {
        const std::size_t top = pp + r - back;  // sum_{a<=top} phi(Q-1-a)
        next[back] = prefix[top + 2] - prefix[1];
      }
    }
    window.swap(next);
  }
  return window[0];
}

Integer phi_column(Prime p, const Integer& m) {
  if (m < 0) return 0;
  Integer product = 1;
  for (const auto d : expand(m, p).digits) product *= d + 1;
  return product;
}

Integer phi_linear_dp(Prime p, std::uint64_t a, std::uint64_t b, const Integer& q) {
  if (a == 0) throw DomainError("linear form aX+bY requires a >= 1");
  if (q < 0) return 0;
  const std::uint64_t pp = p;
  // weight[v] = #{(x, y) in I_p^2 : x >= y, a x + b y = v}
  std::map<std::uint64_t, unsigned long> weight;
  for (std::uint64_t x = 0; x < pp; ++x) {
    for (std::uint64_t y = 0; y <= x; ++y) ++weight[a * x + b * y];
  }
  const std::uint64_t states = a + b;  // carry c satisfies 0 <= c < a + b
  std::vector<Integer> dp(states, Integer(0));
  std::vector<Integer> next(states, Integer(0));
  dp[0] = 1;
  for (const auto qd : expand(q, p).digits) {
    for (auto& v : next) v = 0;
    for (std::uint64_t c = 0; c < states; ++c) {
      if (dp[c] == 0) continue;
      for (const auto& [v, w] : weight) {
        const std::uint64_t total = v + c;
        if (total < qd || (total - qd) % pp != 0) continue;
        mpz_addmul_ui(next[(total - qd) / pp].get_mpz_t(), dp[c].get_mpz_t(), w);
      }
    }
    dp.swap(next);
  }
  // Once q's digits are exhausted the remaining digits of a m + b n must
  // absorb the carry with zero output digits, which only carry 0 does.
  return dp[0];
}

Integer phi_closed_form_pk(Prime p, const Integer& q, unsigned k, FormKind form) {
  if (q < 1) throw DomainError("closed form needs q >= 1");
  switch (form) {
    case FormKind::Diagonal:
      return power(Integer((p.value() + 1) / 2), k) * phi_diagonal(p, q - 1);
    case FormKind::Skew:
      if (p != 2) {
        throw UnsupportedError("closed form for phi(p^k q - 1) on X+pY is only available for p = 2");
      }
      return fibonacci(k + 1UL) * phi_skew(p, q - 1) + fibonacci(k) * phi_skew(p, q - 2);
    default:
      throw UnsupportedError("closed form exists only for X+Y and X+pY");
  }
}

std::vector<Integer> skew_tail_vector(Prime p, const Integer& u, unsigned k) {
  if (u < 1) throw DomainError("tail vector needs u >= 1");
  std::vector<Integer> w(p.value());
  for (std::size_t b = 1; b <= w.size(); ++b) w[b - 1] = phi_skew(p, u - b);
  for (unsigned step = 0; step < k; ++step) advance_skew_tail(w);
  return w;
}

Counted evaluate_phi(Prime p, const FormSpec& form, const Integer& q) {
  switch (form.kind()) {
    case FormKind::Column:
      return {phi_column(p, q), Method::Product};
    case FormKind::Diagonal:
      return {phi_diagonal(p, q), Method::Recurrence};
    case FormKind::Skew:
      return {phi_skew(p, q), Method::Recurrence};
    case FormKind::Linear: {
      const auto c = *form.linear_coeffs(p);
      return {phi_linear_dp(p, c.a, c.b, q), Method::DigitDp};
    }
    case FormKind::General:
      return {phi_bruteforce(p, form, q), Method::BruteForce};
  }
  throw UnsupportedError("unknown form");
}

std::vector<Integer> phi_table(Prime p, const FormSpec& form, std::uint64_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  switch (form.kind()) {
    case FormKind::Column:
    case FormKind::Diagonal:
    case FormKind::Skew:
      for (const auto v : phi_table_u64(p, form.kind(), count)) out.emplace_back(v);
      return out;
    case FormKind::Linear: {
      const auto c = *form.linear_coeffs(p);
      for (std::uint64_t q = 0; q < count; ++q) out.push_back(phi_linear_dp(p, c.a, c.b, Integer(q)));
      return out;
    }
    case FormKind::General: {
      std::vector<std::uint64_t> buckets(count, 0);
      enumerate_general(p, form.polynomial(), Integer(count),
                        [&](const Integer& value) { ++buckets[value.get_ui()]; });
      for (const auto v : buckets) out.emplace_back(v);
      return out;
    }
  }
  return out;
}

std::vector<Integer> summatory_table(Prime p, const FormSpec& form, std::uint64_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  if (count == 0) return out;
  out.emplace_back(0);
  if (form.kind() == FormKind::Linear || form.kind() == FormKind::General) {
    const auto phis = phi_table(p, form, count - 1);
    for (const auto& v : phis) out.push_back(out.back() + v);
    return out;
  }
  const auto phis = phi_table_u64(p, form.kind(), count - 1);
  std::uint64_t acc = 0;
  for (const auto v : phis) {
    acc += v;
    out.emplace_back(acc);
  }
  return out;
}

Counted evaluate_summatory(Prime p, const FormSpec& form, const Integer& u) {
  if (u < 1) throw DomainError("summatory needs u >= 1");
  switch (form.kind()) {
    case FormKind::Column:
      return {column_summatory(p, u), Method::Product};
    case FormKind::Diagonal:
    case FormKind::Skew: {
      Integer rest = u;
      unsigned k = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        rest /= p.value();
        ++k;
      }
      if (k > 0) return {summatory_scaled(p, form.kind(), rest, k), Method::Scaled};
      return {prefix_summatory(p, form, u), Method::PrefixSum};
    }
    case FormKind::Linear:
      return {prefix_summatory(p, form, u), Method::PrefixSum};
    case FormKind::General: {
      Integer count = 0;
      enumerate_general(p, form.polynomial(), u, [&](const Integer&) { ++count; });
      return {count, Method::BruteForce};
    }
  }
  throw UnsupportedError("unknown form");
}

Integer summatory(Prime p, const FormSpec& form, const Integer& u) {
  return evaluate_summatory(p, form, u).value;
}

Integer summatory_scaled(Prime p, FormKind form, const Integer& u, unsigned k) {
  if (u < 1) throw DomainError("scaled summatory needs u >= 1");
  const Integer growth = growth_base(p);
  const Integer growth_k = power(growth, k);
  if (form == FormKind::Diagonal) {
    const Integer base = summatory(p, FormSpec::diagonal(), u);
    const Integer phi_prev = phi_diagonal(p, u - 1);
    if (p == 2) return growth_k * base - (growth_k - 1) / 2 * phi_prev;
    const Integer pk = power(Integer(p.value()), k);
    return growth_k * base - (pk - 1) / 2 * power(Integer((p.value() + 1) / 2), k) * phi_prev;
  }
  if (form != FormKind::Skew) throw UnsupportedError("scaling law exists only for X+Y and X+pY");

  const Integer base = summatory(p, FormSpec::skew(), u);
  if (p == 2) {
    Integer correction = 0;
    for (unsigned l = 0; l < k; ++l) {
      correction += power(growth, l) * phi_closed_form_pk(p, u, k - l - 1, FormKind::Skew);
    }
    return growth_k * base - correction;
  }
  // One step S(pv) = p^theta S(v) - sum_{b=1}^{p-1} (p-b)(p-b+1)/2 phi(v-b),
  // with the phi(v - b) supplied by the tail vector of v = p^j u.
  Integer s = base;
  std::vector<Integer> tail = skew_tail_vector(p, u, 0);
  const std::uint64_t pp = p;
  for (unsigned step = 0; step < k; ++step) {
    Integer correction = 0;
    for (std::uint64_t b = 1; b < pp; ++b) correction += Integer((pp - b) * (pp - b + 1) / 2) * tail[b - 1];
    s = growth * s - correction;
    advance_skew_tail(tail);
  }
  return s;
}

Real pow_theta(Prime p, const Integer& u, unsigned degree) {
  if (u < 1) throw DomainError("u^theta needs u >= 1");
  if (degree == 0) throw DomainError("degree must be positive");
  Integer rest = u;
  unsigned long k = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    rest /= p.value();
    ++k;
  }
  // (p^(d k1))^(theta/d) = (p(p+1)/2)^k1 exactly; the remainder goes through exp/log.
  const unsigned long whole = k / degree;
  rest *= power(Integer(p.value()), k % degree);
  Real out = to_real(power(growth_base(p), whole));
  if (rest != 1) {
    const Real t = theta(p).theta;
    out *= boost::multiprecision::exp(t / degree * boost::multiprecision::log(to_real(rest)));
  }
  return out;
}

Real coefficient_from(Prime p, const Integer& summatory_value, const Integer& u, unsigned degree) {
  return to_real(summatory_value) / pow_theta(p, u, degree);
}

Real coefficient(Prime p, const FormSpec& form, const Integer& u) {
  return coefficient_from(p, summatory(p, form, u), u, form.degree());
}

CountRecord count_record(Prime p, const FormSpec& form, const Integer& argument) {
  const Counted phi = evaluate_phi(p, form, argument);
  CountRecord record{p, form, argument, phi.value, 0, Real(0), phi.method, phi.method};
  if (argument >= 1) {
    const Counted s = evaluate_summatory(p, form, argument);
    record.summatory = s.value;
    record.summatory_method = s.method;
    record.coefficient = coefficient_from(p, s.value, argument, form.degree());
  }
  return record;
}

}  // namespace pasfrac
