// Counts the roots of a polynomial on an interval by both methods and shows
// the per-point data: sign variations V(a) and the negative inertia index
// q(S(a)) of the evaluated Sturm matrix.

#include <iostream>

#include "sturmint/sturmint.hpp"

int main(int argc, char** argv) try {
  using namespace sturmint;
  const std::string text = argc > 1 ? argv[1] : "(x-1)^2*(x+2)*x";
  const Polynomial f = parse_poly(text);
  const SturmSystem sys(f, derivative(f));

  std::cout << "f(x) = " << f << "\n";
  for (long a = -3; a <= 3; ++a) {
    const Rational x(a);
    std::cout << "x = " << x << ":  V = " << sys.variation_at(x) << ",  q = " << sys.q_at(x)
              << "\n";
  }
  const auto report = count_report(f, Rational(-3), Rational(3));
  std::cout << "roots in (-3, 3]: inertia " << report.count_inertia;
  if (report.count_variation) std::cout << ", variation " << *report.count_variation;
  std::cout << "\n";
  return 0;
} catch (const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return 1;
}
