#pragma once

#include "pasfrac/digits.hpp"
#include "pasfrac/numeric.hpp"

namespace pasfrac {

/// Growth exponent theta_p = log(p(p+1)/2) / log p, so p^theta_p = p(p+1)/2.
struct ThetaValue {
  Prime p;
  Real theta;
};

/// theta_p at the working precision.
[[nodiscard]] ThetaValue theta(Prime p);

}  // namespace pasfrac
