#ifndef HUYGENS_ORACLE_HPP_
#define HUYGENS_ORACLE_HPP_

#include "huygens/cosmology.hpp"
#include "huygens/detector.hpp"

namespace huygens {

enum class OracleMethod {
  kClosedFormCommutatorQuad,  // double quadrature of the alpha = 3/2 commutator
  kModeSum,                   // Bessel mode sum, any alpha in (-1.49, 10]
};

struct OracleReport {
  double s_delta_numeric = 0.0;
  double s_theta_numeric = 0.0;
  double s2_numeric = 0.0;
  double quadrature_error = 0.0;
  OracleMethod method = OracleMethod::kClosedFormCommutatorQuad;
};

// Brute-force S2 for the matter era: the light-cone delta branch is the exact
// length of the contact segment eta' = eta + R inside the window rectangle
// (divided by R), and the timelike theta term is the iterated quadrature of
// 1/(eta eta') over {eta in A, eta' in B, eta' - eta > R}. Only the
// A-signals-B orientation enters, matching the closed form.
OracleReport s2_oracle_matter_windows(const QubitAmplitudes& state_a,
                                      const QubitAmplitudes& state_b,
                                      const ConformalWindow& window_a,
                                      const ConformalWindow& window_b, double R,
                                      double tol);

OracleReport s2_oracle_matter(const DetectorSpec& detector_a,
                              const DetectorSpec& detector_b, double R,
                              const CosmologyParams& params, double tol);

// General-alpha S2 through the window-integrated Bessel mode sum. Slower and
// looser than the closed-form route; refuses alpha outside (-1.49, 10]. The
// s_delta_numeric field reports the conformal-coupling (light-cone) reference
// value, which is alpha-independent; s_theta_numeric is NaN away from
// alpha = 3/2 where no delta/theta split of the total is defined.
OracleReport s2_oracle_mode_sum_windows(const QubitAmplitudes& state_a,
                                        const QubitAmplitudes& state_b,
                                        const ConformalWindow& window_a,
                                        const ConformalWindow& window_b,
                                        double R, double alpha, double tol);

OracleReport s2_oracle_mode_sum(const DetectorSpec& detector_a,
                                const DetectorSpec& detector_b, double R,
                                double alpha, double tol,
                                const CosmologyParams& params);

}  // namespace huygens

#endif  // HUYGENS_ORACLE_HPP_
