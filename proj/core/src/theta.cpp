#include "pasfrac/theta.hpp"

namespace pasfrac {

ThetaValue theta(Prime p) {
  const Real base = Real(p.value());
  const Real growth = Real(static_cast<std::uint64_t>(p.value()) * (p.value() + 1ULL) / 2);
  return {p, boost::multiprecision::log(growth) / boost::multiprecision::log(base)};
}

}  // namespace pasfrac
