#include "pasfrac_tools/suite.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <mutex>
#include <random>
#include <sstream>

#include "pasfrac/pasfrac.hpp"

namespace pasfrac::tools {

namespace mp = boost::multiprecision;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using CheckFn = Outcome (*)(const SuiteOptions&, bool fault);

std::vector<Integer> dp_table(Prime p, std::uint64_t a, std::uint64_t b, std::uint64_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::uint64_t q = 0; q < count; ++q) out.push_back(phi_linear_dp(p, a, b, Integer(q)));
  return out;
}

Integer at(const std::vector<Integer>& table, std::int64_t q) {
  return q < 0 ? Integer(0) : table.at(static_cast<std::size_t>(q));
}

Integer ipow(std::uint64_t base, unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

std::string fmt(const Real& value) { return format_real(value, 12); }

// Mismatch bookkeeping that remembers the first failure.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  [[nodiscard]] Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ": " << checked_ << " comparisons";
    if (failures_ > 0) os << ", " << failures_ << " mismatches, first " << first_;
    return {failures_ == 0 && checked_ > 0, os.str()};
  }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

Outcome check_recurrences(const SuiteOptions& o, bool fault) {
  Tally tally;
  const auto n = static_cast<std::int64_t>(o.recurrence_q_max);
  for (const std::uint32_t pv : o.primes) {
    const Prime p(pv);
    const std::int64_t pp = pv;
    // Both sides come from the carry automaton, not from the recurrence evaluators.
    const auto diag = dp_table(p, 1, 1, static_cast<std::uint64_t>(pp * n));
    const auto skew = dp_table(p, 1, pv, static_cast<std::uint64_t>(pp * n));
    for (std::int64_t q = 0; q < n; ++q) {
      for (std::int64_t r = 0; r < pp; ++r) {
        Integer lhs = diag[pp * q + r];
        if (fault && q == 0 && r == 0) lhs += 1;
        const Integer rhs = (r / 2 + 1) * at(diag, q) + (pp - r) / 2 * at(diag, q - 1);
        tally.expect(lhs == rhs, "X+Y p=" + std::to_string(pv) + " q=" + std::to_string(q) + " r=" + std::to_string(r));
        Integer sum = 0;
        for (std::int64_t a = 0; a <= r; ++a) sum += at(skew, q - a);
        tally.expect(skew[pp * q + r] == sum,
                     "X+pY p=" + std::to_string(pv) + " q=" + std::to_string(q) + " r=" + std::to_string(r));
      }
    }
  }
  return tally.outcome("phi(pq+r) recurrences for q < " + std::to_string(n));
}

Outcome check_oracle(const SuiteOptions& o, bool fault) {
  Tally tally;
  for (const std::uint32_t pv : o.primes) {
    const Prime p(pv);
    const FormSpec diag = FormSpec::diagonal();
    const FormSpec skew = FormSpec::skew();
    const FormSpec lin = FormSpec::linear(2, 3);
    for (std::uint64_t q = 0; q < o.oracle_q_max; ++q) {
      const Integer qq(q);
      const Integer bd = phi_bruteforce(p, diag, qq) + (fault && q == 0 ? 1 : 0);
      const Integer bs = phi_bruteforce(p, skew, qq);
      const Integer bl = phi_bruteforce(p, lin, qq);
      const std::string where = " p=" + std::to_string(pv) + " q=" + std::to_string(q);
      tally.expect(phi_diagonal(p, qq) == bd, "phi_diagonal" + where);
      tally.expect(phi_linear_dp(p, 1, 1, qq) == bd, "dp X+Y" + where);
      tally.expect(phi_skew(p, qq) == bs, "phi_skew" + where);
      tally.expect(phi_linear_dp(p, 1, pv, qq) == bs, "dp X+pY" + where);
      tally.expect(phi_linear_dp(p, 2, 3, qq) == bl, "dp 2X+3Y" + where);
    }
  }
  return tally.outcome("fast routes vs enumeration for q < " + std::to_string(o.oracle_q_max));
}

Outcome check_closed_forms(const SuiteOptions& /*o*/, bool fault) {
  Tally tally;
  for (const std::uint32_t pv : {2U, 3U, 5U}) {
    const Prime p(pv);
    for (unsigned long q = 1; q <= 32; ++q) {
      const Integer base = phi_linear_dp(p, 1, 1, Integer(q - 1));
      for (unsigned k = 0; k <= 12; ++k) {
        const Integer v = ipow(pv, k) * q - 1;
        const Integer lhs = phi_linear_dp(p, 1, 1, v);
        Integer rhs = ipow((pv + 1) / 2, k) * base;
        if (fault && q == 1 && k == 0) rhs += 1;
        const std::string where = " p=" + std::to_string(pv) + " q=" + std::to_string(q) + " k=" + std::to_string(k);
        tally.expect(lhs == rhs, "X+Y closed form" + where);
        tally.expect(phi_closed_form_pk(p, Integer(q), k, FormKind::Diagonal) == rhs, "closed-form evaluator" + where);
        tally.expect(phi_diagonal(p, v) == lhs, "phi_diagonal" + where);
      }
    }
  }
  const Prime two(2);
  std::vector<Integer> fib{0, 1};
  while (fib.size() < 23) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (unsigned long q = 1; q <= 32; ++q) {
    const Integer f1 = phi_linear_dp(two, 1, 2, Integer(q) - 1);
    const Integer f2 = phi_linear_dp(two, 1, 2, Integer(q) - 2);
    for (unsigned k = 0; k <= 20; ++k) {
      const Integer v = ipow(2, k) * q - 1;
      const Integer lhs = phi_linear_dp(two, 1, 2, v);
      const Integer rhs = fib[k + 1] * f1 + fib[k] * f2;
      const std::string where = " q=" + std::to_string(q) + " k=" + std::to_string(k);
      tally.expect(lhs == rhs, "X+2Y Fibonacci form" + where);
      tally.expect(phi_closed_form_pk(two, Integer(q), k, FormKind::Skew) == rhs, "closed-form evaluator" + where);
      tally.expect(phi_skew(two, v) == lhs, "phi_skew" + where);
      if (q == 1) tally.expect(lhs == fib[k + 1], "phi(2^k - 1) = F_(k+1) k=" + std::to_string(k));
    }
  }
  return tally.outcome("phi(p^k q - 1) closed forms");
}

Outcome check_scaling(const SuiteOptions& o, bool fault) {
  Tally tally;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 21;
  auto prefix = [](Prime p, const FormSpec& form) {
    std::vector<Integer> s{0};
    for (const auto& v : phi_table(p, form, kLimit)) s.push_back(s.back() + v);
    return s;
  };
  for (const std::uint32_t pv : o.primes) {
    const Prime p(pv);
    const auto s = prefix(p, FormSpec::diagonal());
    // One step: S(pu) = p^theta S(u) - B_p phi(u-1), B_2 = 1, B_p = (p^2-1)/4.
    const Integer b = pv == 2 ? Integer(1) : Integer((std::uint64_t{pv} * pv - 1) / 4);
    for (std::uint64_t u = 1; u <= 64; ++u) {
      const Integer one_step = growth_base(p) * s[u] - b * phi_diagonal(p, Integer(u) - 1);
      tally.expect(s[pv * u] == one_step + (fault && u == 1 ? 1 : 0), "one-step X+Y p=" + std::to_string(pv) + " u=" + std::to_string(u));
      for (unsigned k = 0; k <= 8; ++k) {
        const Integer v = ipow(pv, k) * u;
        if (v > kLimit) break;
        tally.expect(summatory_scaled(p, FormKind::Diagonal, Integer(u), k) == s[v.get_ui()],
                     "X+Y p=" + std::to_string(pv) + " u=" + std::to_string(u) + " k=" + std::to_string(k));
      }
    }
  }
  const Prime two(2);
  const auto s = prefix(two, FormSpec::skew());
  for (std::uint64_t u = 1; u <= 64; ++u) {
    for (unsigned k = 0; k <= 8; ++k) {
      const std::uint64_t v = u << k;
      Integer explicit_form = ipow(3, k) * s[u];
      for (unsigned l = 0; l < k; ++l) explicit_form -= ipow(3, l) * phi_skew(two, Integer(u << (k - l - 1)) - 1);
      tally.expect(explicit_form == s[v], "explicit X+2Y u=" + std::to_string(u) + " k=" + std::to_string(k));
      tally.expect(summatory_scaled(two, FormKind::Skew, Integer(u), k) == s[v],
                   "X+2Y u=" + std::to_string(u) + " k=" + std::to_string(k));
    }
  }
  return tally.outcome("S(p^k u) scaling laws for u <= 64, k <= 8");
}

Outcome check_constants(const SuiteOptions& /*o*/, bool fault) {
  const Real tol("1e-6");
  std::ostringstream os;
  bool ok = true;
  auto expect = [&](const std::string& name, const Real& got, const Real& want) {
    const Real err = mp::abs(got - want);
    const bool good = err < tol;
    ok = ok && good;
    os << name << " = " << fmt(got) << (good ? "" : " (expected " + fmt(want) + ")") << "; ";
  };
  for (const std::uint32_t pv : {2U, 3U, 5U, 7U}) {
    expect("A(" + std::to_string(pv) + ",1)", accumulation_diagonal(Prime(pv), 1).limit, Real("0.5"));
  }
  for (const std::uint32_t pv : {3U, 5U, 7U}) {
    const Real want = 3 / mp::pow(Real(2), theta(Prime(pv)).theta + 1);
    expect("A(" + std::to_string(pv) + ",2)", accumulation_diagonal(Prime(pv), 2).limit, want);
  }
  const Real t2 = theta(Prime(2)).theta;
  expect("A(2,3)", accumulation_diagonal(Prime(2), 3).limit, Real(fault ? "0.526898" : "0.525898"));
  expect("3^(1-theta)", mp::pow(Real(3), 1 - t2), Real("0.525898"));
  expect("A(2,17)", accumulation_diagonal(Prime(2), 17).limit, Real("0.487836"));
  expect("A'(1)", accumulation_skew(1).limit, Real("0.4"));
  expect("A'(9)", accumulation_skew(9).limit, Real("0.393342"));
  expect("64/(5*9^theta)", 64 / (5 * mp::pow(Real(9), t2)), Real("0.393342"));

  const Prime two(2);
  const Integer identity = 5 * summatory(two, FormSpec::skew(), 9) - 3 * phi_skew(two, 8) - phi_skew(two, 7);
  ok = ok && identity == 64;
  os << "5S(9) - 3phi(8) - phi(7) = " << identity.get_str();
  return {ok, os.str()};
}

Outcome check_convergence(const SuiteOptions& /*o*/, bool fault) {
  const Prime two(2);
  const unsigned k = 13;
  const Integer u = Integer(3) << k;
  const Real c = to_real(summatory_scaled(two, FormKind::Diagonal, 3, k)) / pow_theta(two, u);
  const auto a = accumulation_diagonal(two, 3);
  const Real gap = mp::abs(c - a.limit);
  // phi(2) / (2 * 3^theta) * 3^-13
  const Real predicted = to_real(phi_diagonal(two, 2)) / (2 * pow_theta(two, 3)) / mp::pow(Real(3), Real(k));
  const Real limit = fault ? predicted / 2 : Real("1e-5");
  const bool ok = gap < limit && mp::abs(gap - predicted) < Real("1e-25") && gap <= a.error_bound(k);
  return {ok, "|C(3*2^13) - A(3)| = " + format_real(gap, 8) + ", predicted " + format_real(predicted, 8)};
}

Outcome check_classical(const SuiteOptions& o, bool fault) {
  const auto report = classical_bounds_check(o.stolarsky_u_max, 97, 40);
  std::ostringstream os;
  bool ok = report.passed();
  for (const auto& c : report.checks) os << c.name << (c.passed ? " ok" : " FAILED") << " (" << c.detail << "); ";
  if (fault) {
    ok = ok && report.min_column_coefficient >= Real(kHarborthLower) + Real("0.1");
    os << "injected window shift";
  }
  return {ok, os.str()};
}

Outcome check_ellipticity(const SuiteOptions& /*o*/, bool fault) {
  struct Case {
    const char* text;
    Verdict elliptic;
    std::optional<Verdict> positive;
  };
  const Case cases[] = {
      {"y", fault ? Verdict::Yes : Verdict::No, Verdict::Yes},
      {"x-1", Verdict::Yes, Verdict::No},
      {"xy+x", Verdict::No, std::nullopt},
      {"x+y", Verdict::Yes, Verdict::Yes},
      {"x+2y", Verdict::Yes, Verdict::Yes},
  };
  bool ok = true;
  std::ostringstream os;
  for (const auto& c : cases) {
    const auto cert = check_t_elliptic(Polynomial::parse(c.text));
    const bool good = cert.elliptic == c.elliptic && (!c.positive || cert.positive == *c.positive);
    ok = ok && good;
    os << c.text << ": elliptic " << verdict_name(cert.elliptic) << ", positive " << verdict_name(cert.positive)
       << (good ? "" : " (unexpected)") << "; ";
  }
  return {ok, os.str()};
}

Outcome check_order(const SuiteOptions& /*o*/, bool fault) {
  const Real lo(fault ? "0.6" : "0.3");
  const Real hi("1.2");
  bool ok = true;
  std::ostringstream os;
  for (const FormSpec& form : {FormSpec::diagonal(), FormSpec::skew()}) {
    const auto check = order_check(Prime(2), form, std::uint64_t{1} << 16);
    const bool good = check.within(lo, hi) && check.sandwich_holds();
    ok = ok && good;
    os << form.name() << ": ratios in [" << fmt(check.ratio_min) << ", " << fmt(check.ratio_max) << "], sandwich "
       << (check.sandwich_holds() ? "holds" : "fails") << "; ";
  }
  return {ok, os.str()};
}

Outcome check_stieltjes(const SuiteOptions& o, bool fault) {
  std::mt19937_64 rng(o.stieltjes_seed);
  std::uniform_int_distribution<int> pick_prime(0, 2);
  std::uniform_int_distribution<int> pick_form(0, 2);
  std::uniform_real_distribution<double> extra(0.2, 2.5);
  std::uniform_real_distribution<double> height(-40.0, 40.0);
  std::uniform_int_distribution<std::uint64_t> pick_u(2, 5000);
  const std::uint32_t primes[] = {2, 3, 5};
  const FormSpec forms[] = {FormSpec::diagonal(), FormSpec::skew(), FormSpec::column()};
  const Real limit(fault ? "1e-40" : "1e-18");
  Real worst = 0;
  for (int i = 0; i < 20; ++i) {
    const Prime p(primes[pick_prime(rng)]);
    const FormSpec& form = forms[pick_form(rng)];
    // Strictly inside the half-plane: sigma - theta >= 0.2 + 1e-9.
    const Complex s{theta(p).theta + Real(extra(rng)) + Real("1e-9"), Real(height(rng))};
    const auto r = stieltjes_crosscheck(p, form, s, pick_u(rng));
    if (r.residual > worst) worst = r.residual;
  }
  return {worst < limit, "20 samples at " + std::to_string(working_precision_bits()) +
                             " bits, worst residual " + format_real(worst, 4)};
}

Outcome check_render(const SuiteOptions& o, bool fault) {
  bool ok = true;
  std::ostringstream os;
  const auto i2 = build_image(Prime(2), 16);
  const auto i3 = build_image(Prime(3), 27);
  const std::uint64_t want2 = fault ? 82 : 81;
  ok = ok && popcount(i2) == want2 && popcount(i3) == 216;
  os << "popcounts " << popcount(i2) << ", " << popcount(i3) << "; ";
  if (o.golden_dir) {
    for (const auto& [image, name] : {std::pair{&i2, "pas2_16.pbm"}, std::pair{&i3, "pas3_27.pbm"}}) {
      std::ifstream in(*o.golden_dir / name, std::ios::binary);
      std::ostringstream text;
      if (in) text << in.rdbuf();
      const bool same = in && text.str() == to_pbm(*image);
      ok = ok && same;
      os << name << (same ? " matches" : " DIFFERS") << "; ";
    }
  } else {
    os << "golden files not configured; ";
  }
  bool similar = true;
  for (const std::uint32_t pv : {2U, 3U, 5U}) {
    std::uint64_t pk = 1;
    for (unsigned k = 0; k < 3; ++k, pk *= pv) {
      const auto small = build_image(Prime(pv), pk);
      const auto big = build_image(Prime(pv), pk * pv);
      for (std::uint64_t m = 0; m < pk; ++m) {
        for (std::uint64_t n = 0; n < pk; ++n) similar = similar && big.at(m, n) == small.at(m, n);
      }
    }
  }
  ok = ok && similar;
  os << "sub-block self-similarity " << (similar ? "holds" : "fails");
  return {ok, os.str()};
}

struct Entry {
  CheckSpec spec;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{1, "recurrence-exactness", "Digit recurrences for X+Y and X+pY", "phi(pq+r) in terms of phi(q), phi(q-1), ...", 10, 0},
       check_recurrences},
      {{2, "oracle-equivalence", "Fast evaluators agree with enumeration", "Lucas enumeration oracle", 60, 0},
       check_oracle},
      {{3, "closed-forms", "Closed forms at p^k q - 1", "powers of floor((p+1)/2); Fibonacci numbers", 0, 0},
       check_closed_forms},
      {{4, "scaling-laws", "Exact scaling of S(p^k u)", "S(pu) = p^theta S(u) - B_p phi(u-1)", 0, 0}, check_scaling},
      {{5, "accumulation-constants", "Accumulation points and the integer identity", "A(u) = C(u) - correction", 0, 0},
       check_constants},
      {{6, "convergence-rate", "Geometric convergence of C(3*2^k)", "C(p^k u) - A(u) = correction * 3^-k", 0, 0},
       check_convergence},
      {{7, "classical-bounds", "Stolarsky, Harborth and Wilson bounds", "bounds on S_2^X(u)/u^theta", 30, 0},
       check_classical},
      {{8, "ellipticity-cases", "T-ellipticity and T-positivity examples", "Y, X-1, XY+X, X+Y, X+2Y", 0, 0},
       check_ellipticity},
      {{9, "order-boundedness", "S(u) comparable to u^(theta/d)", "ratio window and norm sandwich", 0, 0}, check_order},
      {{10, "stieltjes-identity", "Summation by parts of the zeta partial sum", "Stieltjes integral against S", 0, 80},
       check_stieltjes},
      {{11, "renderer", "Golden images, popcounts and self-similarity", "PBM output of Pas(p)", 0, 0}, check_render},
  };
  return table;
}

CheckResult run_one(const Entry& entry, const SuiteOptions& options) {
  CheckResult result{entry.spec.id, entry.spec.key, entry.spec.title, entry.spec.ref, false, {}, 0, entry.spec.time_limit};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome outcome = entry.fn(options, options.inject_fault == entry.spec.key);
    result.passed = outcome.passed;
    result.detail = outcome.detail;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

const std::vector<CheckSpec>& suite_checks() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> out;
    for (const auto& e : entries()) out.push_back(e.spec);
    return out;
  }();
  return specs;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result) {
  std::mutex writer;
  auto report = [&](const CheckResult& r) {
    const std::lock_guard<std::mutex> guard(writer);
    if (on_result) on_result(r);
  };
  std::vector<CheckResult> results(entries().size());
  auto run_at = [&](std::size_t i) {
    const Entry& entry = entries()[i];
    std::optional<PrecisionScope> scope;
    if (entry.spec.precision_bits != 0) scope.emplace(entry.spec.precision_bits);
    results[i] = run_one(entry, options);
    report(results[i]);
  };
  if (!options.parallel) {
    for (std::size_t i = 0; i < entries().size(); ++i) run_at(i);
    return results;
  }
  std::vector<std::future<void>> pending;
  for (std::size_t i = 0; i < entries().size(); ++i) {
    if (entries()[i].spec.precision_bits == 0) pending.push_back(std::async(std::launch::async, run_at, i));
  }
  for (auto& f : pending) f.get();
  // Precision is process-wide, so these run alone.
  for (std::size_t i = 0; i < entries().size(); ++i) {
    if (entries()[i].spec.precision_bits != 0) run_at(i);
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return !results.empty();
}

}  // namespace pasfrac::tools
