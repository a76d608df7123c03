#ifndef HUYGENS_DETECTOR_HPP_
#define HUYGENS_DETECTOR_HPP_

#include <complex>

namespace huygens {

// A detector switching interval mapped to conformal time.
struct ConformalWindow {
  double eta_i = 0.0;
  double eta_f = 0.0;
};

// Throws std::invalid_argument unless 0 < eta_i < eta_f.
void validate(const ConformalWindow& w);

// Initial qubit state alpha|e> + beta|g>.
struct QubitAmplitudes {
  std::complex<double> excited{1.0, 0.0};  // alpha
  std::complex<double> ground{0.0, 0.0};   // beta
};

// One comoving, pointlike, sharply switched detector. The gap must stay 0;
// the closed forms are derived for degenerate detectors.
struct DetectorSpec {
  double coupling = 1.0;  // lambda
  double t_on = 0.0;      // comoving switch-on, > 0
  double t_off = 0.0;     // comoving switch-off, > t_on
  QubitAmplitudes state;
  double gap = 0.0;  // Omega

  static DetectorSpec make(double coupling, double t_on, double t_off,
                           QubitAmplitudes state, double gap = 0.0);
};

// Re(alpha* beta) of a detector state (sender-side prefactor).
double re_alpha_beta(const QubitAmplitudes& s);

// Im(alpha* beta) of a detector state (receiver-side prefactor).
double im_alpha_beta(const QubitAmplitudes& s);

}  // namespace huygens

#endif  // HUYGENS_DETECTOR_HPP_
