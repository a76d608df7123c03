#ifndef HUYGENS_COMMUTATOR_HPP_
#define HUYGENS_COMMUTATOR_HPP_

#include "huygens/cosmology.hpp"
#include "huygens/detector.hpp"
#include "huygens/quadrature.hpp"

namespace huygens {

// Structured value of the matter-era (alpha = 3/2) field commutator at a pair
// of events, written as coefficients of the overall imaginary unit:
//
//   [phi, phi'] / i = delta_retarded_strength * delta(d_eta - R)
//                   + delta_advanced_strength * delta(d_eta + R)
//                   + interior_value                      (|d_eta| > R)
//
// with d_eta = eta - eta_p. The interior piece is the strong-Huygens
// violation: support strictly inside the light cone.
struct CommutatorValue {
  double delta_retarded_strength = 0.0;
  double delta_advanced_strength = 0.0;
  double interior_value = 0.0;
};

// Bessel mode kernel g_alpha(eta, eta', k) as the rational function of
// J_alpha and Y_alpha it is defined by (numerators J(k eta)Y(k eta') and
// Y(k eta)J(k eta') over the mixed Bessel-bracket denominators). Antisymmetric
// under eta <-> eta'.
double mode_kernel_g(double alpha, double eta, double eta_p, double k);

// Same kernel with the denominator replaced by its analytic Wronskian value
// -4/(pi k eta'):
//   g = (pi k / 4) sqrt(eta eta') [Y(k eta)J(k eta') - J(k eta)Y(k eta')].
// Cheaper and free of denominator roundoff; used by the window integrator.
double mode_kernel_g_reduced(double alpha, double eta, double eta_p, double k);

// Matter-era commutator, Big Bang normalization (eta > 0 both legs).
// Requires params.alpha == 3/2; throws UnsupportedError otherwise.
CommutatorValue commutator_matter(double eta, double eta_p, double R,
                                  const CosmologyParams& params);

// Mode-sum commutator integrated against both switching windows with the
// worldline measure (the a-factors cancel):
//
//   M = integral_0^inf dk  sin(kR)/(pi^2 R) * W(k),
//   W(k) = integral_A integral_B s(eta, eta') g_alpha(eta, eta', k),
//   s = theta(eta' - eta) - theta(eta - eta').
//
// Sign convention: for windows in strict timelike contact at alpha = 3/2 this
// reproduces -(1/4pi) ln(eta_fA/eta_iA) ln(eta_fB/eta_iB); the signalling
// estimator is S2 = -4 Re(a*b)_A Im(a*b)_B M, which matches the closed form
// with a positive fully-timelike theta-term.
//
// The k-integrand decays like 1/k^2 only because the windows are integrated
// first; the small-k part is handled by adaptive_quad on [0, k_c] with
// k_c = max(2pi/R, 2pi/eta_fB) and the tail by oscillatory_tail_quad at
// phase rate R.
QuadResult window_integrated_commutator(double alpha, const ConformalWindow& window_a,
                                        const ConformalWindow& window_b, double R,
                                        double tol);

}  // namespace huygens

#endif  // HUYGENS_COMMUTATOR_HPP_
