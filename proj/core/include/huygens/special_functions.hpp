#ifndef HUYGENS_SPECIAL_FUNCTIONS_HPP_
#define HUYGENS_SPECIAL_FUNCTIONS_HPP_

namespace huygens {

// Bessel function of the first kind J_order(x), real order, x > 0.
double bessel_j(double order, double x);

// Bessel function of the second kind Y_order(x), real order, x > 0.
double bessel_y(double order, double x);

// Real dilogarithm Li_2(x) for x <= 1.
double dilog(double x);

}  // namespace huygens

#endif  // HUYGENS_SPECIAL_FUNCTIONS_HPP_
