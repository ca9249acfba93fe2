#include <doctest.h>

#include <cmath>

#include "pasfrac/ellipticity.hpp"
#include "pasfrac/error.hpp"

using namespace pasfrac;

namespace {

EllipticityCertificate cert(const char* text) { return check_t_elliptic(Polynomial::parse(text)); }

}  // namespace

TEST_CASE("remark cases") {
  const auto y = cert("y");
  CHECK(y.elliptic == Verdict::No);
  CHECK(y.positive == Verdict::Yes);
  REQUIRE(y.witness.has_value());
  CHECK(y.witness->y == 0.0L);

  const auto shifted = cert("x-1");
  CHECK(shifted.elliptic == Verdict::Yes);
  CHECK(shifted.positive == Verdict::No);
  const auto pos = check_t_positive(Polynomial::parse("x-1"));
  REQUIRE(pos.witness.has_value());
  CHECK(pos.witness->x == 0.0L);
  CHECK(pos.witness->y == 0.0L);
  CHECK(check_t_positive(Polynomial::parse("x-1").shifted(1)).positive == Verdict::Yes);

  CHECK(cert("xy+x").elliptic == Verdict::No);
  for (const char* text : {"x+y", "x+2y", "x^2+y^2"}) {
    const auto c = cert(text);
    CHECK(c.elliptic == Verdict::Yes);
    CHECK(c.positive == Verdict::Yes);
  }
}

TEST_CASE("positivity with lower-order terms") {
  // (x-1)^2 touches zero, which a margin-based certificate cannot settle.
  CHECK(check_t_positive(Polynomial::parse("x^2-2x+1")).positive == Verdict::Indeterminate);
  CHECK(check_t_positive(Polynomial::parse("x^2-2x+2")).positive == Verdict::Yes);
  CHECK(check_t_positive(Polynomial::parse("x^2-3x+2")).positive == Verdict::No);
  CHECK(check_t_positive(Polynomial::parse("x^2+y^2-4x+5")).positive == Verdict::Yes);
  CHECK_THROWS_AS((void)check_t_elliptic(Polynomial::parse("3")), DomainError);
}

TEST_CASE("norm comparison constants") {
  const auto xy = ellipticity_constants(Polynomial::parse("x+y"));
  CHECK(std::abs(xy.c1 - 1.0L) < 1e-9L);
  CHECK(std::abs(xy.c2 - std::sqrt(2.0L)) < 1e-9L);
  CHECK(xy.c1 <= 1.0L);

  const auto x2y = ellipticity_constants(Polynomial::parse("x+2y"));
  CHECK(std::abs(x2y.c1 - 1.0L) < 1e-9L);
  CHECK(std::abs(x2y.c2 - 2.1213203435596425732L) < 1e-9L);

  const auto norm = ellipticity_constants(Polynomial::parse("x^2+y^2"));
  CHECK(std::abs(norm.c1 - 1.0L) < 1e-9L);
  CHECK(std::abs(norm.c2 - 1.0L) < 1e-9L);

  CHECK_THROWS_AS((void)ellipticity_constants(Polynomial::parse("xy+x")), DomainError);
}

TEST_CASE("constants hold on lattice points of T(R)") {
  for (const char* text : {"x+y", "x+2y", "x^2+xy+y^2", "x^2-xy+y^2+3x-7"}) {
    const Polynomial poly = Polynomial::parse(text);
    const NormBounds b = ellipticity_constants(poly);
    const long double d = poly.degree();
    for (long m = 0; m <= 1000; m += 7) {
      for (long n = 0; n <= m; n += 3) {
        const long double norm = std::hypot(static_cast<long double>(m), static_cast<long double>(n));
        if (norm < b.R || norm > 1000) continue;
        const long double v = poly.evaluate(static_cast<long double>(m), static_cast<long double>(n));
        CHECK(v >= b.c1 * std::pow(norm, d) * (1 - 1e-15L));
        CHECK(v <= b.c2 * std::pow(norm, d) * (1 + 1e-15L));
      }
    }
  }
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::Yes) == "yes");
  CHECK(verdict_name(Verdict::Indeterminate) == "indeterminate");
}
