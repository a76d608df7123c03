#ifndef HUYGENS_SIGNALLING_HPP_
#define HUYGENS_SIGNALLING_HPP_

#include <utility>

#include "huygens/cosmology.hpp"
#include "huygens/detector.hpp"

namespace huygens {

// The six causal configurations of the two switching windows relative to
// light-cone contact (sender A, receiver B, comoving separation R):
//   1: eta_fB <= eta_iA + R                      no contact yet
//   2: eta_iB < eta_iA + R < eta_fB <= eta_fA + R
//   3: eta_iB >= eta_iA + R,  eta_fB <= eta_fA + R
//   4: eta_fB > eta_fA + R > eta_iB >= eta_iA + R
//   5: eta_iB >= eta_fA + R                      strictly timelike
//   6: eta_iB < eta_iA + R,  eta_fB > eta_fA + R
enum class CausalCase { k1 = 1, k2 = 2, k3 = 3, k4 = 4, k5 = 5, k6 = 6 };

inline int label(CausalCase c) { return static_cast<int>(c); }

// Full result of one channel evaluation.
struct SignalBreakdown {
  CausalCase case_label = CausalCase::k1;
  double s_delta = 0.0;
  double s_theta = 0.0;
  double s2 = 0.0;  // coupling-stripped leading-order estimator
  double capacity = 0.0;
  double capacity_delta_only = 0.0;
};

CausalCase classify_case(const ConformalWindow& window_a,
                         const ConformalWindow& window_b, double R);

// z1 = min(eta_fA + R, eta_fB)/R,  z2 = max(eta_iA + R, eta_iB)/R.
std::pair<double, double> z_bounds(const ConformalWindow& window_a,
                                   const ConformalWindow& window_b, double R);

// Light-cone contact term: max(z1 - z2, 0).
double s_delta(const ConformalWindow& window_a, const ConformalWindow& window_b,
               double R);

// Timelike-interior term. Case 5 gives ln(eta_fA/eta_iA) ln(eta_fB/eta_iB)
// (no R dependence at all); the other contact cases give
// [L(z1) - L(z2) + N(z1)] theta(z1 - z2) with
//   L(z) = ln(R(z-1)/eta_iA) ln(z) + Li2(1 - z),
//   N(z) = ln(R(z-1)/eta_iA) ln(eta_fB/(R z)).
double s_theta(const ConformalWindow& window_a, const ConformalWindow& window_b,
               double R);

// Capacity of the couple/don't-couple binary channel, quartic in couplings:
//   C = lambda_A^2 lambda_B^2 (2/ln 2) (s2 / (4 |alpha_B| |beta_B|))^2.
// s2_value is the coupling-stripped estimator. Throws std::domain_error when
// |alpha_B| |beta_B| = 0 (receiver measurement carries no signal).
double channel_capacity(double s2_value, const DetectorSpec& detector_a,
                        const DetectorSpec& detector_b);

// Closed-form channel evaluation for conformal windows at alpha = 3/2:
// S2 = (1/pi) Re(a* b)_A Im(a* b)_B [S_delta + S_theta].
SignalBreakdown s2_breakdown_windows(const QubitAmplitudes& state_a,
                                     const QubitAmplitudes& state_b,
                                     const ConformalWindow& window_a,
                                     const ConformalWindow& window_b, double R,
                                     double coupling_a, double coupling_b);

// Same, with the switching windows given in comoving time and mapped through
// the background. Requires params.alpha == 3/2 and zero gaps.
SignalBreakdown s2_breakdown(const DetectorSpec& detector_a,
                             const DetectorSpec& detector_b, double R,
                             const CosmologyParams& params);

// The state pair that maximizes the capacity:
// |alpha| = |beta| = 1/sqrt(2) for both, phase difference pi on the sender,
// pi/2 on the receiver.
std::pair<QubitAmplitudes, QubitAmplitudes> optimal_detector_states();

}  // namespace huygens

#endif  // HUYGENS_SIGNALLING_HPP_
