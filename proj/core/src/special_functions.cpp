#include "huygens/special_functions.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace huygens {

double bessel_j(double order, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("bessel_j: x must be positive, got " +
                            std::to_string(x));
  }
  return boost::math::cyl_bessel_j(order, x);
}

double bessel_y(double order, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("bessel_y: x must be positive, got " +
                            std::to_string(x));
  }
  return boost::math::cyl_neumann(order, x);
}

namespace {

constexpr double kPi2Over6 = 1.6449340668482264365;  // pi^2/6

// Maclaurin series, adequate for |x| <= 1/2.
double dilog_series(double x) {
  double term = x;
  double sum = x;
  for (int n = 2; n < 80; ++n) {
    term *= x;
    const double add = term / (static_cast<double>(n) * n);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

}  // namespace

// Series on [-1/2, 1/2]; reflection Li2(x) + Li2(1-x) = pi^2/6 - ln(x)ln(1-x)
// for (1/2, 1]; Landen Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2 on [-1, -1/2);
// inversion Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x) below -1. Each identity
// lands the series argument inside [-1/2, 1/2].
double dilog(double x) {
  if (x > 1.0) {
    throw std::domain_error("dilog: argument must be <= 1, got " +
                            std::to_string(x));
  }
  if (x == 1.0) return kPi2Over6;
  if (x >= 0.5) {
    const double y = 1.0 - x;
    return kPi2Over6 - std::log(x) * std::log(y) - dilog_series(y);
  }
  if (x >= -0.5) return dilog_series(x);
  if (x >= -1.0) {
    const double u = x / (x - 1.0);  // in (1/3, 1/2]
    const double l = std::log1p(-x);
    return -dilog_series(u) - 0.5 * l * l;
  }
  const double inv = 1.0 / x;  // in (-1, 0)
  const double l = std::log(-x);
  const double inner =
      (inv >= -0.5) ? dilog_series(inv)
                    : (-dilog_series(inv / (inv - 1.0)) -
                       0.5 * std::log1p(-inv) * std::log1p(-inv));
  return -kPi2Over6 - 0.5 * l * l - inner;
}

}  // namespace huygens
