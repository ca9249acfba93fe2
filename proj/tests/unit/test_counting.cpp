#include <doctest.h>

#include <vector>

#include "pasfrac/counting.hpp"
#include "pasfrac/error.hpp"
#include "support.hpp"

using namespace pasfrac;

namespace {

std::vector<std::uint64_t> first_values(Prime p, const FormSpec& form, std::uint64_t count) {
  std::vector<std::uint64_t> out;
  for (const auto& v : phi_table(p, form, count)) out.push_back(v.get_ui());
  return out;
}

}  // namespace

TEST_CASE("phi tables match the independent oracle") {
  const Prime two(2);
  const Prime three(3);
  CHECK(first_values(two, FormSpec::diagonal(), 17) ==
        std::vector<std::uint64_t>{1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5});
  CHECK(first_values(two, FormSpec::skew(), 17) ==
        std::vector<std::uint64_t>{1, 1, 1, 2, 1, 2, 2, 3, 1, 3, 2, 3, 2, 4, 3, 5, 1});
  CHECK(first_values(three, FormSpec::skew(), 17) ==
        std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2, 1, 2, 3, 1, 2, 3, 2, 3, 4, 2, 4});
  CHECK(first_values(three, FormSpec::linear(2, 1), 17) ==
        std::vector<std::uint64_t>{1, 0, 1, 1, 1, 1, 2, 0, 1, 2, 1, 2, 3, 1, 2, 3, 1});
}

TEST_CASE("single values from every route") {
  const Prime two(2);
  CHECK(phi_diagonal(two, 4) == 3);
  CHECK(phi_skew(two, 7) == 3);
  CHECK(phi_skew(two, 3) == 2);
  CHECK(phi_skew(two, 8) == 1);
  CHECK(phi_column(two, 5) == 4);
  CHECK(phi_column(Prime(3), 8) == 9);
  CHECK(phi_diagonal(Prime(3), 8) == 4);
  CHECK(phi_linear_dp(two, 1, 1, 4) == 3);
  CHECK(phi_bruteforce(two, FormSpec::diagonal(), 4) == 3);
  CHECK(phi_bruteforce(two, FormSpec::general(Polynomial::parse("x+2y")), 7) == 3);
}

TEST_CASE("negative arguments count nothing") {
  const Prime two(2);
  CHECK(phi_diagonal(two, -1) == 0);
  CHECK(phi_skew(two, -3) == 0);
  CHECK(phi_column(two, -1) == 0);
  CHECK(phi_linear_dp(two, 2, 3, -5) == 0);
  CHECK(phi_bruteforce(two, FormSpec::diagonal(), -1) == 0);
}

TEST_CASE("fast routes agree with enumeration") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Prime prime(p);
    for (const FormSpec& form : {FormSpec::column(), FormSpec::diagonal(), FormSpec::skew(), FormSpec::linear(2, 3)}) {
      const auto table = phi_table(prime, form, 300);
      for (std::uint64_t q = 0; q < 300; ++q) {
        CHECK(table[q] == phi_bruteforce(prime, form, Integer(q)));
      }
    }
  }
}

TEST_CASE("summatory values") {
  const Prime two(2);
  CHECK(summatory(two, FormSpec::diagonal(), 4) == 5);
  CHECK(summatory(two, FormSpec::skew(), 9) == 14);
  CHECK(summatory(two, FormSpec::skew(), 8) == 13);
  CHECK(summatory(Prime(3), FormSpec::diagonal(), 9) == 20);
  CHECK(summatory(Prime(3), FormSpec::skew(), 27) == 73);
  CHECK(summatory(Prime(5), FormSpec::diagonal(), 50) == 342);
  CHECK(summatory(two, FormSpec::column(), 16) == 81);
  CHECK(evaluate_summatory(two, FormSpec::diagonal(), 12).method == Method::Scaled);
  CHECK(evaluate_summatory(two, FormSpec::column(), 12).method == Method::Product);
  CHECK_THROWS_AS((void)summatory(two, FormSpec::diagonal(), 0), DomainError);
}

TEST_CASE("summatory table matches pointwise summatory") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const Prime prime(p);
    for (const FormSpec& form : {FormSpec::column(), FormSpec::diagonal(), FormSpec::skew(), FormSpec::linear(1, 2)}) {
      const auto table = summatory_table(prime, form, 200);
      CHECK(table[0] == 0);
      for (std::uint64_t u = 1; u < 200; ++u) CHECK(table[u] == summatory(prime, form, Integer(u)));
    }
  }
}

TEST_CASE("closed forms at p^k q - 1") {
  const Prime two(2);
  for (unsigned k = 0; k <= 20; ++k) {
    Integer fib;
    mpz_fib_ui(fib.get_mpz_t(), k + 1);
    CHECK(phi_skew(two, (Integer(1) << k) - 1) == fib);
    CHECK(phi_closed_form_pk(two, 1, k, FormKind::Skew) == fib);
  }
  CHECK_THROWS_AS((void)phi_closed_form_pk(Prime(3), 2, 1, FormKind::Skew), UnsupportedError);
  CHECK_THROWS_AS((void)phi_closed_form_pk(two, 0, 1, FormKind::Diagonal), DomainError);
}

TEST_CASE("skew tail vector tracks direct evaluation") {
  for (std::uint32_t p : {3U, 5U}) {
    const Prime prime(p);
    for (unsigned u = 1; u <= 10; ++u) {
      for (unsigned k = 0; k <= 4; ++k) {
        const auto tail = skew_tail_vector(prime, u, k);
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
        for (std::size_t i = 0; i < tail.size(); ++i) {
          CHECK(tail[i] == phi_skew(prime, pk * u - static_cast<long>(i + 1)));
        }
      }
    }
  }
}

TEST_CASE("exact powers of theta") {
  const Prime two(2);
  CHECK(pow_theta(two, Integer(1) << 10) == 59049);
  CHECK(coefficient(two, FormSpec::column(), Integer(1) << 20) == 1);
  CHECK(test_support::close(coefficient(two, FormSpec::diagonal(), 2), test_support::real("0.666666666666666666666666666667"), 1e-28));
  CHECK(growth_base(Prime(5)) == 15);
}

TEST_CASE("count record carries methods") {
  const auto r = count_record(Prime(2), FormSpec::skew(), 9);
  CHECK(r.phi == 3);
  CHECK(r.summatory == 14);
  CHECK(r.phi_method == Method::Recurrence);
  CHECK(method_name(r.summatory_method) == "prefix-sum");
}
