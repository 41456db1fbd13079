// Walks through the Z_n x Z_n family: which classes k give a simple twisted
// group algebra, and what its center looks like otherwise.

#include <iostream>
#include <numeric>

#include "twisted/twisted.hpp"

int main() {
  using namespace twisted;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      const Multiplier sigma = klein(n, k);
      const auto report = regular_classes(sigma);
      const auto numeric = center_dimension_numeric(sigma);
      std::cout << "n=" << n << " k=" << k << "  gcd=" << std::gcd(n, k)
                << "  condition K: " << (report.condition_k ? "yes" : "no ")
                << "  center dim " << report.regular_class_count() << " (numeric " << numeric << ")";
      if (auto m = identify_matrix_algebra(sigma)) std::cout << "  = M_" << *m << "(C)";
      std::cout << '\n';
    }
  }

  // The Z^4 torus with t12 = t23 = t34 = t and t14 = 1 - t.
  IrrationalBasis basis;
  const auto t = basis.add("t", 0.6180339887498949);
  Theta theta(4, basis);
  const auto x = RotationNumber::irrational(t);
  theta.set(0, 1, x);
  theta.set(1, 2, x);
  theta.set(2, 3, x);
  theta.set(0, 3, RotationNumber::rational(1) - x);
  const LatticeDecision d = condition_k_lattice(theta);
  std::cout << "Z^4 torus: condition K " << (d.condition_k ? "holds" : "fails");
  if (d.witness) {
    std::cout << ", regular point (";
    for (std::size_t i = 0; i < d.witness->size(); ++i) std::cout << (i ? "," : "") << (*d.witness)[i];
    std::cout << ")";
  }
  std::cout << '\n';
}
