// Minimal use of the library: the same constant 1/3 three ways.

#include <cstdio>
#include <numbers>

#include "stabsign/stabsign.hpp"

int main() {
  using namespace stabsign;
  const double alpha = 1.2;

  const double integral = quadrature::pv_integrate_I1(alpha, 1e-8).value;
  const McEstimate mc = estimate_pair_product(Alpha(alpha), 1'000'000, 7);
  const ExactRational exact = paintbox::all_even_probability(2);

  std::printf("(2/pi^2) * PV integral : %.10f\n",
              2.0 / (std::numbers::pi * std::numbers::pi) * integral);
  std::printf("E[sgn X1 sgn X2] (MC)  : %.4f +- %.4f\n", mc.mean, mc.std_error);
  std::printf("paintbox p_2 (exact)   : %s\n", to_string(exact).c_str());
  return 0;
}
