#include <doctest.h>

#include "pasfrac/error.hpp"
#include "pasfrac/selfsim.hpp"
#include "support.hpp"

using namespace pasfrac;
using test_support::close;
using test_support::real;

TEST_CASE("diagonal accumulation points") {
  const Prime two(2);
  CHECK(close(accumulation_diagonal(two, 1).limit, real("0.5"), 1e-30));
  CHECK(close(accumulation_diagonal(two, 3).limit, real("0.525898530997455691831786944692"), 1e-28));
  CHECK(close(accumulation_diagonal(two, 17).limit, real("0.487836012882870319668689375973"), 1e-28));
  CHECK(close(accumulation_diagonal(Prime(3), 2).limit, real("0.484320087873823202454678173153"), 1e-28));
  CHECK(close(accumulation_diagonal(Prime(5), 2).limit, real("0.467279064346374373837034712058"), 1e-28));
  CHECK(close(accumulation_diagonal(Prime(7), 2).limit, real("0.457723454976339522084389776963"), 1e-28));
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) CHECK(close(accumulation_diagonal(Prime(p), 1).limit, real("0.5"), 1e-30));
}

TEST_CASE("skew accumulation points") {
  CHECK(close(accumulation_skew(1).limit, real("0.4"), 1e-30));
  CHECK(close(accumulation_skew(9).limit, real("0.39334295453195643042681938509"), 1e-28));
  CHECK(close(accumulation_skew(7).limit, real("0.384441783"), 1e-9));
  CHECK_THROWS_AS((void)accumulation(Prime(3), FormKind::Skew, 1), UnsupportedError);
  CHECK_THROWS_AS((void)accumulation(Prime(2), FormKind::Column, 1), UnsupportedError);
  CHECK_THROWS_AS((void)accumulation_skew(0), DomainError);
}

TEST_CASE("finite-k identities match direct coefficients") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Prime prime(p);
    for (unsigned u = 1; u <= 12; ++u) {
      for (unsigned k = 0; k <= 6; ++k) {
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
        const Real direct = coefficient(prime, FormSpec::diagonal(), pk * u);
        CHECK(close(finite_k_coefficient_diagonal(prime, u, k), direct, 1e-30));
      }
    }
  }
  for (unsigned u = 1; u <= 12; ++u) {
    for (unsigned k = 0; k <= 10; ++k) {
      const Real direct = coefficient(Prime(2), FormSpec::skew(), Integer(u) << k);
      CHECK(close(finite_k_coefficient_skew(u, k), direct, 1e-28));
    }
  }
}

TEST_CASE("error bounds dominate the actual distance") {
  for (unsigned u : {1U, 3U, 7U, 9U}) {
    const auto d = accumulation_diagonal(Prime(2), u);
    const auto s = accumulation_skew(u);
    for (unsigned k = 0; k <= 12; ++k) {
      const Real cd = coefficient(Prime(2), FormSpec::diagonal(), Integer(u) << k);
      const Real cs = coefficient(Prime(2), FormSpec::skew(), Integer(u) << k);
      CHECK(boost::multiprecision::abs(cd - d.limit) <= d.error_bound(k) * (1 + Real(1e-25)));
      CHECK(boost::multiprecision::abs(cs - s.limit) <= s.error_bound(k));
    }
  }
  const auto a = accumulation_diagonal(Prime(2), 3);
  CHECK(a.steps_for(Real("1e-5")) <= 13);
}

TEST_CASE("distinctness") {
  const auto v = distinctness_check(FormKind::Diagonal, Prime(2), 3, 17);
  CHECK(v.distinct);
  CHECK(close(v.gap, real("0.038062518114585372163097568719"), 1e-27));
  CHECK_FALSE(distinctness_check(FormKind::Diagonal, Prime(2), 3, 6).distinct);
  CHECK(distinctness_check(FormKind::Skew, Prime(2), 1, 9).distinct);
  CHECK_THROWS_AS((void)distinctness_check(FormKind::Diagonal, Prime(2), 1, 2, Real(0)), DomainError);
}

TEST_CASE("extrema scan") {
  const auto diag = scan_extrema(Prime(2), FormSpec::diagonal(), 20);
  REQUIRE(diag.limit_max.has_value());
  CHECK(close(*diag.limit_max, real("0.526319108"), 1e-9));
  CHECK(diag.limit_argmax == std::vector<std::uint64_t>{7, 14});
  CHECK(close(*diag.limit_min, real("0.487836012882870319668689375973"), 1e-28));
  CHECK(diag.limit_argmin == std::vector<std::uint64_t>{17});
  CHECK(diag.limits.size() == 20);
  CHECK(close(diag.limits[2], real("0.525898530997455691831786944692"), 1e-28));

  const auto skew = scan_extrema(Prime(2), FormSpec::skew(), 12);
  CHECK(skew.limit_argmin == std::vector<std::uint64_t>{7});
  CHECK(skew.limit_argmax == std::vector<std::uint64_t>{1, 2, 4, 8});

  const auto col = scan_extrema(Prime(2), FormSpec::column(), 64);
  CHECK_FALSE(col.limit_max.has_value());
  CHECK(col.coefficient_max == 1);
  CHECK(col.coefficient_argmax == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32, 64});
}

TEST_CASE("Wilson bounds") {
  const auto w2 = wilson_bounds(Prime(2));
  CHECK(close(w2.lower, real("0.80777005756266"), 1e-12));
  CHECK(close(w2.upper, real("1.01916858798437"), 1e-12));
  const auto w5 = wilson_bounds(Prime(5));
  CHECK(close(w5.lower, real("0.735625593488508"), 1e-12));
  CHECK(close(w5.upper, real("0.948145934280487"), 1e-12));
}

TEST_CASE("classical bounds on a small range") {
  const auto report = classical_bounds_check(5000, 31, 20);
  CHECK(report.passed());
  CHECK(report.checks.size() == 6);
  CHECK(report.min_column_coefficient >= Real(kHarborthLower));
}
