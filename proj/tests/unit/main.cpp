#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "pasfrac/numeric.hpp"

int main(int argc, char** argv) {
  const pasfrac::PrecisionScope precision(pasfrac::kDefaultPrecisionBits);
  doctest::Context context(argc, argv);
  return context.run();
}
