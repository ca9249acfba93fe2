#include <pasfrac/pasfrac.hpp>

int main() {
  const pasfrac::PrecisionScope precision(128);
  return pasfrac::phi_diagonal(pasfrac::Prime(2), pasfrac::Integer(4)) == 3 ? 0 : 1;
}
