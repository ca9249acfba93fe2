#include <doctest.h>

#include "pasfrac/error.hpp"
#include "pasfrac/form.hpp"

using namespace pasfrac;

TEST_CASE("polynomial parsing and evaluation") {
  const Polynomial p = Polynomial::parse("x^2+y^2");
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Integer(3), Integer(4)) == 25);
  const Polynomial q = Polynomial::parse("x*y+x");
  CHECK(q.evaluate(Integer(2), Integer(5)) == 12);
  CHECK(q.top_part() == Polynomial::parse("xy"));
  CHECK(q.lower_part() == Polynomial::parse("x"));
  const Polynomial r = Polynomial::parse("2x+3y");
  CHECK(r.evaluate(Integer(1), Integer(1)) == 5);
  const Polynomial s = Polynomial::parse("x-1");
  CHECK_FALSE(s.has_nonnegative_coefficients());
  CHECK(s.coefficient_norm() == 2);
  CHECK(s.shifted(1) == Polynomial::parse("x"));
  CHECK(Polynomial::parse("x+x-2x").is_zero());
  CHECK_THROWS_AS((void)Polynomial::parse("x+"), DomainError);
  CHECK_THROWS_AS((void)Polynomial::parse("z"), DomainError);
}

TEST_CASE("form selectors") {
  const Prime two(2);
  CHECK(FormSpec::parse("x").kind() == FormKind::Column);
  CHECK(FormSpec::parse("xy").kind() == FormKind::Diagonal);
  CHECK(FormSpec::parse("xpy").kind() == FormKind::Skew);
  const FormSpec lin = FormSpec::parse("linear:2,3");
  CHECK(lin.kind() == FormKind::Linear);
  CHECK(lin.linear_coeffs(two)->a == 2);
  CHECK(lin.linear_coeffs(two)->b == 3);
  CHECK(FormSpec::skew().linear_coeffs(Prime(5))->b == 5);
  CHECK(FormSpec::skew().as_polynomial(two) == Polynomial::parse("x+2y"));
  const FormSpec gen = FormSpec::parse("poly:x^2+y^2");
  CHECK(gen.kind() == FormKind::General);
  CHECK(gen.degree() == 2);
  CHECK_FALSE(gen.linear_coeffs(two).has_value());
  CHECK_THROWS_AS((void)FormSpec::parse("linear:0,1"), DomainError);
  CHECK_THROWS_AS((void)FormSpec::parse("poly:7"), DomainError);
  CHECK_THROWS_AS((void)FormSpec::parse("bogus"), DomainError);
}
