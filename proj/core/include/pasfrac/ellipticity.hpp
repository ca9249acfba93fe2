#pragma once

// Certified T-ellipticity / T-positivity on the cone T = {x >= y >= 0}.
//
// Ellipticity only concerns the top-degree part P_d, which by homogeneity is
// positive on T \ {0} iff g(t) = P_d(1, t) > 0 on [0, 1]. g is evaluated
// exactly at dyadic points (integer arithmetic on P_d(N, i)) and a Lipschitz
// bound on g closes the gaps between samples. Certification failures are
// reported as Indeterminate, never as a silent "no".

#include <cstdint>
#include <optional>
#include <string_view>

#include "pasfrac/form.hpp"

namespace pasfrac {

enum class Verdict { Yes, No, Indeterminate };

[[nodiscard]] std::string_view verdict_name(Verdict v) noexcept;

struct PlanePoint {
  long double x = 0;
  long double y = 0;
};

/// c1 |(x,y)|^d <= P(x,y) <= c2 |(x,y)|^d on T(R) = {(x,y) in T : |(x,y)| >= R}.
struct NormBounds {
  long double c1 = 0;
  long double c2 = 0;
  long double R = 1;
};

struct EllipticityCertificate {
  Polynomial poly;
  Verdict elliptic = Verdict::Indeterminate;
  Verdict positive = Verdict::Indeterminate;
  /// Present when elliptic == Yes.
  std::optional<NormBounds> bounds;
  /// Angle in [0, pi/4] where P_d(cos phi, sin phi) is smallest.
  long double min_location = 0;
  /// Direction (1, t) in T where P_d <= 0, when elliptic == No.
  std::optional<PlanePoint> witness;
};

struct PositivityResult {
  Verdict positive = Verdict::Indeterminate;
  /// A point of T with P < 0, when positive == No.
  std::optional<PlanePoint> witness;
};

/// Throws DomainError for constant polynomials.
[[nodiscard]] EllipticityCertificate check_t_elliptic(const Polynomial& poly);
[[nodiscard]] EllipticityCertificate check_t_elliptic(const FormSpec& form, Prime p);

/// P >= 0 on T. region_bound caps the radius of the compact region that is
/// searched or certified.
[[nodiscard]] PositivityResult check_t_positive(const Polynomial& poly, std::uint64_t region_bound = 1000);

/// Throws DomainError unless the polynomial is certified T-elliptic.
/// Homogeneous P gives the sharp extrema of P on the unit arc; otherwise
/// c1 is halved and R absorbs the lower-order terms.
[[nodiscard]] NormBounds ellipticity_constants(const Polynomial& poly);
[[nodiscard]] NormBounds ellipticity_constants(const FormSpec& form, Prime p);

}  // namespace pasfrac
