#include "pasfrac/selfsim.hpp"

#include <cmath>
#include <sstream>

#include "pasfrac/error.hpp"

namespace pasfrac {

namespace mp = boost::multiprecision;

Real AccumulationReport::error_bound(unsigned k) const { return bound_scale * mp::pow(bound_ratio, Real(k)); }

unsigned AccumulationReport::steps_for(const Real& tolerance) const {
  for (unsigned k = 0; k < 100000; ++k) {
    if (error_bound(k) < tolerance) return k;
  }
  throw DomainError("tolerance not reachable");
}

namespace {

Real golden() { return (1 + mp::sqrt(Real(5))) / 2; }

}  // namespace

AccumulationReport accumulation_diagonal(Prime p, const Integer& u) {
  if (u < 1) throw DomainError("accumulation needs u >= 1");
  const Real scale = pow_theta(p, u);
  const Real c = to_real(summatory(p, FormSpec::diagonal(), u)) / scale;
  const Real correction = to_real(phi_diagonal(p, u - 1)) / (2 * scale);
  const Real ratio = Real(1) / Real(p == 2 ? 3U : p.value());
  return {p, FormKind::Diagonal, u, c, correction, c - correction, correction, ratio};
}

AccumulationReport accumulation_skew(const Integer& u) {
  if (u < 1) throw DomainError("accumulation needs u >= 1");
  const Prime two(2);
  const Real scale = pow_theta(two, u);
  const Real c = to_real(summatory(two, FormSpec::skew(), u)) / scale;
  const Real phi1 = to_real(phi_skew(two, u - 1));
  const Real phi2 = to_real(phi_skew(two, u - 2));
  const Real correction = (3 * phi1 + phi2) / (5 * scale);
  // Tail sum_{j>k} (F_j phi1 + F_{j-1} phi2) / 3^j with F_j <= g^(j-1).
  const Real g = golden();
  const Real ratio = g / 3;
  const Real bound_scale = (phi1 + phi2 / g) / (g * scale) * ratio / (1 - ratio);
  return {two, FormKind::Skew, u, c, correction, c - correction, bound_scale, ratio};
}

AccumulationReport accumulation(Prime p, FormKind form, const Integer& u) {
  switch (form) {
    case FormKind::Diagonal:
      return accumulation_diagonal(p, u);
    case FormKind::Skew:
      if (p != 2) throw UnsupportedError("accumulation formula for X+pY is only available for p = 2");
      return accumulation_skew(u);
    default:
      throw UnsupportedError("accumulation formulas exist only for X+Y and X+2Y");
  }
}

Real finite_k_coefficient_diagonal(Prime p, const Integer& u, unsigned k) {
  const AccumulationReport base = accumulation_diagonal(p, u);
  const Real c = Real(p == 2 ? 3U : p.value());
  return base.coefficient - (1 - mp::pow(c, -Real(k))) * base.correction;
}

Real finite_k_coefficient_skew(const Integer& u, unsigned k) {
  const Prime two(2);
  const Real t = theta(two).theta;
  const Real scale = pow_theta(two, u);
  const Real c = to_real(summatory(two, FormSpec::skew(), u)) / scale;
  const Real phi1 = to_real(phi_skew(two, u - 1));
  const Real phi2 = to_real(phi_skew(two, u - 2));
  const Real gp = golden();
  const Real gm = (1 - mp::sqrt(Real(5))) / 2;
  Real sum = 0;
  for (unsigned l = 0; l < k; ++l) {
    const Real j = Real(k - l);
    const Real lead = mp::pow(gp, j) - mp::pow(gm, j);
    const Real next = mp::pow(gp, j - 1) - mp::pow(gm, j - 1);
    sum += (lead * phi1 + next * phi2) / mp::pow(Real(2), j * t);
  }
  return c - sum / ((gp - gm) * scale);
}

DistinctnessVerdict distinctness_check(FormKind form, Prime p, const Integer& u1, const Integer& u2,
                                       const Real& tolerance) {
  if (tolerance <= 0) throw DomainError("tolerance must be positive");
  DistinctnessVerdict out{accumulation(p, form, u1), accumulation(p, form, u2), 0, tolerance, false};
  out.gap = mp::abs(out.first.limit - out.second.limit);
  out.distinct = out.gap > tolerance;
  return out;
}

bool has_accumulation_formula(Prime p, const FormSpec& form) noexcept {
  return form.kind() == FormKind::Diagonal || (form.kind() == FormKind::Skew && p == 2);
}

namespace {

// Tracks the extremes of a sequence, keeping every index within `slack` of them.
class ExtremaTracker {
 public:
  explicit ExtremaTracker(Real slack) : slack_(std::move(slack)) {}

  void add(std::uint64_t index, const Real& value) {
    values_.emplace_back(index, value);
    if (!min_ || value < *min_) min_ = value;
    if (!max_ || value > *max_) max_ = value;
  }

  [[nodiscard]] const Real& min() const { return *min_; }
  [[nodiscard]] const Real& max() const { return *max_; }

  [[nodiscard]] std::vector<std::uint64_t> argmin() const { return near(*min_); }
  [[nodiscard]] std::vector<std::uint64_t> argmax() const { return near(*max_); }

 private:
  [[nodiscard]] std::vector<std::uint64_t> near(const Real& target) const {
    std::vector<std::uint64_t> out;
    const Real width = slack_ * (mp::abs(target) > 1 ? mp::abs(target) : Real(1));
    for (const auto& [index, value] : values_) {
      if (mp::abs(value - target) <= width) out.push_back(index);
    }
    return out;
  }

  Real slack_;
  std::optional<Real> min_;
  std::optional<Real> max_;
  std::vector<std::pair<std::uint64_t, Real>> values_;
};

}  // namespace

ExtremaScan scan_extrema(Prime p, const FormSpec& form, std::uint64_t u_max) {
  if (u_max < 1) throw DomainError("scan needs u_max >= 1");
  const auto s = summatory_table(p, form, u_max + 1);
  const bool with_limits = has_accumulation_formula(p, form);
  const unsigned d = form.degree();
  const Real slack = working_epsilon() * 1024;

  ExtremaTracker coefficients(slack);
  ExtremaTracker limits(slack);
  ExtremaScan out{p, form, u_max, {}, {}, {}, {}, {}, 0, 0, {}, {}};
  auto phi_at = [&](std::uint64_t q) { return q + 1 < s.size() ? Integer(s[q + 1] - s[q]) : Integer(0); };
  for (std::uint64_t u = 1; u <= u_max; ++u) {
    const Real scale = pow_theta(p, Integer(u), d);
    const Real c = to_real(s[u]) / scale;
    coefficients.add(u, c);
    if (!with_limits) continue;
    Real a;
    if (form.kind() == FormKind::Diagonal) {
      a = c - to_real(phi_at(u - 1)) / (2 * scale);
    } else {
      const Integer phi2 = u >= 2 ? phi_at(u - 2) : Integer(0);
      a = c - (3 * to_real(phi_at(u - 1)) + to_real(phi2)) / (5 * scale);
    }
    limits.add(u, a);
    out.limits.push_back(a);
  }
  out.coefficient_min = coefficients.min();
  out.coefficient_max = coefficients.max();
  out.coefficient_argmin = coefficients.argmin();
  out.coefficient_argmax = coefficients.argmax();
  if (with_limits) {
    out.limit_min = limits.min();
    out.limit_max = limits.max();
    out.limit_argmin = limits.argmin();
    out.limit_argmax = limits.argmax();
  }
  return out;
}

WilsonBounds wilson_bounds(Prime p) {
  const Real t = theta(p).theta;
  const Real lower = mp::pow(1 - mp::pow(Real(2), 1 / (1 - t)), t - 1);
  const Real upper = (3 - t) / (2 * mp::pow(2 - t, 2 - t));
  return {p, lower, upper};
}

bool ClassicalBoundsReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

ClassicalBoundsReport classical_bounds_check(std::uint64_t u_max, std::uint32_t max_prime, unsigned power_limit) {
  if (u_max < 2) throw DomainError("classical bounds check needs u_max >= 2");
  const Prime two(2);
  ClassicalBoundsReport report;
  report.u_max = u_max;

  // S_2^X(u) by a running sum of 2^popcount(m). The margins against 1/3 and 3
  // are wide, so the per-u scan runs in long double; powers of two below go
  // through the exact route.
  const long double t = static_cast<long double>(theta(two).theta);
  std::vector<std::uint64_t> row(u_max);
  row[0] = 1;
  for (std::uint64_t m = 1; m < u_max; ++m) row[m] = row[m / 2] * ((m & 1U) + 1);

  bool stolarsky = true;
  std::uint64_t stolarsky_fail = 0;
  long double max_c = 0;
  long double min_c = 2;
  std::uint64_t argmin = 1;
  std::uint64_t s = 0;
  for (std::uint64_t u = 1; u <= u_max; ++u) {
    s += row[u - 1];
    const long double scale = std::exp(t * std::log(static_cast<long double>(u)));
    const long double value = static_cast<long double>(s);
    if (stolarsky && !(scale / 3 < value && value < 3 * scale)) {
      stolarsky = false;
      stolarsky_fail = u;
    }
    const long double c = value / scale;
    max_c = std::max(max_c, c);
    if (c < min_c) {
      min_c = c;
      argmin = u;
    }
  }
  {
    std::ostringstream os;
    os << "u^theta/3 < S_2^X(u) < 3 u^theta for 1 <= u <= " << u_max;
    if (!stolarsky) os << "; fails at u = " << stolarsky_fail;
    report.checks.push_back({"stolarsky", stolarsky, os.str()});
  }
  {
    std::ostringstream os;
    os.precision(12);
    os << "max C_2^X(u) = " << max_c;
    report.checks.push_back({"alpha2-upper", max_c <= 1.0L + 1e-12L, os.str()});
  }

  bool exact = true;
  unsigned first_bad = 0;
  for (unsigned k = 0; k <= power_limit; ++k) {
    const Integer u = Integer(1) << k;
    if (coefficient(two, FormSpec::column(), u) != 1) {
      exact = false;
      first_bad = k;
      break;
    }
  }
  report.checks.push_back({"alpha2-powers", exact,
                           exact ? "C_2^X(2^k) = 1 exactly for k <= " + std::to_string(power_limit)
                                 : "C_2^X(2^k) != 1 at k = " + std::to_string(first_bad)});

  report.min_column_coefficient = Real(min_c);
  report.argmin_column_coefficient = argmin;
  {
    std::ostringstream os;
    os.precision(12);
    os << "min C_2^X(u) = " << min_c << " at u = " << argmin;
    report.checks.push_back(
        {"harborth-window", min_c >= static_cast<long double>(kHarborthLower) && min_c <= 1.0L, os.str()});
  }

  bool ordered = true;
  bool below_one = true;
  std::string offenders;
  for (std::uint32_t q = 2; q <= max_prime; ++q) {
    if (!is_prime(q)) continue;
    auto w = wilson_bounds(Prime(q));
    if (!(w.lower < w.upper)) {
      ordered = false;
      offenders += " order@" + std::to_string(q);
    }
    if (q >= 3 && !(w.upper < 1)) {
      below_one = false;
      offenders += " upper@" + std::to_string(q);
    }
    report.wilson.push_back(std::move(w));
  }
  report.checks.push_back({"wilson-order", ordered, "Wilson lower < upper for p <= " + std::to_string(max_prime) + offenders});
  report.checks.push_back({"wilson-below-one", below_one, "Wilson upper < 1 for 3 <= p <= " + std::to_string(max_prime) + offenders});
  return report;
}

}  // namespace pasfrac
