// Isolates the 20 roots of W(x) = (x-1)(x-2)...(x-20) in exact arithmetic.
// The huge coefficients make this polynomial a classic stress test for
// floating-point root finders; with rational arithmetic every count is exact.

#include <iostream>

#include "sturmint/sturmint.hpp"

int main() {
  using namespace sturmint;
  Polynomial w = Polynomial::constant(Rational(1));
  for (long i = 1; i <= 20; ++i) w = w * Polynomial{Rational(-i), Rational(1)};

  std::cout << "W(x) has " << count_all_roots(w) << " distinct real roots\n";
  for (const auto& iv : isolate_roots(w))
    std::cout << "(" << iv.lo << ", " << iv.hi << "]\n";
  return 0;
}
