#ifndef HUYGENS_QUADRATURE_HPP_
#define HUYGENS_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace huygens {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Thrown when a quadrature fails to meet its tolerance within budget.
// Carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best_estimate() const { return best_; }

 private:
  QuadResult best_;
};

// Thrown by oscillatory_tail_quad when partial sums grow instead of settling.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Globally adaptive Gauss(7)/Kronrod(15) integration of f over [a, b].
// Tolerance is mixed: the run succeeds once the accumulated error estimate
// drops below tol * max(1, |integral|). Integrals near zero therefore get an
// absolute floor, everything else a relative target.
QuadResult adaptive_quad(const std::function<double(double)>& f, double a,
                         double b, double tol);

// Estimates  integral_a^inf  envelope(k) * sin(phase_rate * k) dk  by
// partitioning [a, inf) at the sine zeros k_n = n*pi/phase_rate, integrating
// each panel adaptively, and accelerating the sequence of partial sums with a
// windowed Wynn epsilon (Shanks) table. The envelope may itself oscillate; it
// only needs to decay. Requires a > 0, phase_rate > 0.
QuadResult oscillatory_tail_quad(const std::function<double(double)>& envelope,
                                 double phase_rate, double a, double tol);

}  // namespace huygens

#endif  // HUYGENS_QUADRATURE_HPP_
