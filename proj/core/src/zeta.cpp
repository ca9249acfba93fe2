#include "pasfrac/zeta.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "pasfrac/error.hpp"
#include "pasfrac/theta.hpp"

namespace pasfrac {

namespace mp = boost::multiprecision;

namespace {

Complex exponent_w(const Complex& s, unsigned d) { return {s.re / d, s.im / d}; }

void require_convergent(Prime p, const Complex& s) {
  if (s.re <= theta(p).theta) {
    throw DivergenceError("Re s = " + format_real(s.re, 12) + " is not above theta_" + std::to_string(p.value()));
  }
}

}  // namespace

Real sup_coefficient(Prime p, const FormSpec& form, std::uint64_t u_max) {
  if (u_max < 1) throw DomainError("sup_coefficient needs u_max >= 1");
  static std::mutex lock;
  static std::map<std::tuple<std::uint32_t, std::string, std::uint64_t, unsigned>, Real> cache;
  const auto key = std::make_tuple(p.value(), form.name(), u_max, working_precision_bits());
  {
    const std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto s = summatory_table(p, form, u_max + 1);
  const unsigned d = form.degree();
  Real best = 0;
  for (std::uint64_t u = 1; u <= u_max; ++u) {
    const Real c = coefficient_from(p, s[u], Integer(u), d);
    if (c > best) best = c;
  }
  const Real out = 2 * best;
  const std::lock_guard<std::mutex> guard(lock);
  cache.emplace(key, out);
  return out;
}

ZetaPartialSum zeta_partial_sum(Prime p, const FormSpec& form, const Complex& s, std::uint64_t U,
                                const std::optional<Polynomial>& numerator) {
  if (numerator && !(numerator->degree() == 0 && numerator->evaluate(Integer(0), Integer(0)) == 1)) {
    throw UnsupportedError("only the numerator Q = 1 is supported");
  }
  require_convergent(p, s);
  if (U < 2) throw DomainError("truncation U must be at least 2");

  const unsigned d = form.degree();
  const Complex w = exponent_w(s, d);
  const auto phis = phi_table(p, form, U);
  CompensatedComplexSum sum;
  for (std::uint64_t q = 1; q < U; ++q) {
    if (phis[q] == 0) continue;
    sum.add(to_real(phis[q]) * pow_neg(Real(q), w));
  }

  ZetaPartialSum out{p, form, s, U, sum.value(), 0, sup_coefficient(p, form), true};
  const Real sigma = s.re / d;
  const Real t = theta(p).theta / d;
  out.tail_bound = sigma * out.c_sup * mp::pow(Real(U), t - sigma) / (sigma - t);
  return out;
}

StieltjesCheck stieltjes_crosscheck(Prime p, const FormSpec& form, const Complex& s, std::uint64_t U) {
  require_convergent(p, s);
  if (U < 2) throw DomainError("truncation U must be at least 2");
  const Complex w = exponent_w(s, form.degree());
  const auto phis = phi_table(p, form, U);

  std::vector<Complex> powers(U + 1);
  for (std::uint64_t j = 1; j <= U; ++j) powers[j] = pow_neg(Real(j), w);

  CompensatedComplexSum direct;
  CompensatedComplexSum abel;
  Integer running = 0;
  for (std::uint64_t j = 1; j < U; ++j) {
    direct.add(to_real(phis[j]) * powers[j]);
    running += phis[j];
    abel.add(to_real(running) * (powers[j] - powers[j + 1]));
  }
  abel.add(to_real(running) * powers[U]);

  StieltjesCheck out{direct.value(), abel.value(), 0};
  out.residual = abs(out.direct - out.abel);
  return out;
}

bool OrderCheck::sandwich_holds() const {
  for (const auto& s : sandwich) {
    if (!s.holds) return false;
  }
  return true;
}

bool OrderCheck::within(const Real& lo, const Real& hi) const { return ratio_min >= lo && ratio_max <= hi; }

OrderCheck order_check(Prime p, const FormSpec& form, std::uint64_t u_max) {
  if (u_max < 1) throw DomainError("order check needs u_max >= 1");
  const Polynomial poly = form.as_polynomial(p);
  const EllipticityCertificate cert = check_t_elliptic(poly);
  if (cert.elliptic != Verdict::Yes || cert.positive != Verdict::Yes) {
    throw DomainError("order check needs a certified elliptic and positive form");
  }
  const unsigned d = form.degree();
  const NormBounds& bounds = *cert.bounds;
  const bool homogeneous = poly.lower_part().terms().empty();
  const FormSpec column = FormSpec::column();

  OrderCheck out;
  for (std::uint64_t u = 1; u <= u_max; u *= 2) {
    const Integer value = summatory(p, form, Integer(u));
    const Real ratio = coefficient_from(p, value, Integer(u), d);
    out.ladder.push_back(u);
    if (out.ratios.empty() || ratio < out.ratio_min) out.ratio_min = ratio;
    if (out.ratios.empty() || ratio > out.ratio_max) out.ratio_max = ratio;
    out.ratios.push_back(ratio);
    if (!homogeneous) continue;

    // Only P = P_d satisfies the norm comparison down to the origin.
    const long double ud = static_cast<long double>(u);
    const auto low_arg = static_cast<std::uint64_t>(std::floor(std::pow(ud / bounds.c2, 1.0L / d) / 2));
    const auto high_arg = static_cast<std::uint64_t>(std::ceil(std::pow(ud / bounds.c1, 1.0L / d)));
    SandwichSample sample{u, low_arg >= 1 ? summatory(p, column, Integer(low_arg)) : Integer(0), value,
                          summatory(p, column, Integer(std::max<std::uint64_t>(high_arg, 1))), false};
    sample.holds = sample.lower <= sample.value && sample.value <= sample.upper;
    out.sandwich.push_back(std::move(sample));
  }
  return out;
}

}  // namespace pasfrac
