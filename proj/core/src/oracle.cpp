#include "huygens/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "huygens/commutator.hpp"
#include "huygens/errors.hpp"
#include "huygens/quadrature.hpp"
#include "huygens/signalling.hpp"

namespace huygens {

namespace {

ConformalWindow to_conformal(const DetectorSpec& d, const CosmologyParams& params) {
  return {conformal_from_comoving(d.t_on, params),
          conformal_from_comoving(d.t_off, params)};
}

void check_gap(const DetectorSpec& d) {
  if (d.gap != 0.0) {
    throw UnsupportedError("oracle: only zero-gap detectors are supported");
  }
}

}  // namespace

OracleReport s2_oracle_matter_windows(const QubitAmplitudes& state_a,
                                      const QubitAmplitudes& state_b,
                                      const ConformalWindow& window_a,
                                      const ConformalWindow& window_b, double R,
                                      double tol) {
  validate(window_a);
  validate(window_b);
  if (!(R > 0.0)) throw std::invalid_argument("oracle: R must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("oracle: tol must be positive");

  OracleReport report;
  report.method = OracleMethod::kClosedFormCommutatorQuad;

  // Light-cone branch: the commutator delta integrates to the length of the
  // contact segment eta' = eta + R inside the window rectangle, over R.
  const double contact_lo = std::max(window_a.eta_i, window_b.eta_i - R);
  const double contact_hi = std::min(window_a.eta_f, window_b.eta_f - R);
  report.s_delta_numeric = std::max(contact_hi - contact_lo, 0.0) / R;

  // Timelike branch: iterated quadrature of 1/(eta eta') over
  // {eta in A, eta' in B, eta' - eta > R}, split at the kink where the inner
  // lower limit switches from eta_iB to eta + R.
  double theta_total = 0.0;
  double error = 0.0;
  const double eta_hi = std::min(window_a.eta_f, window_b.eta_f - R);
  if (eta_hi > window_a.eta_i) {
    const double inner_tol = 0.1 * tol;
    auto strip = [&](double eta) {
      const double lo = std::max(window_b.eta_i, eta + R);
      if (!(lo < window_b.eta_f)) return 0.0;
      const QuadResult inner = adaptive_quad(
          [](double eta_p) { return 1.0 / eta_p; }, lo, window_b.eta_f, inner_tol);
      return inner.value / eta;
    };
    const double kink =
        std::clamp(window_b.eta_i - R, window_a.eta_i, eta_hi);
    for (const auto& [lo, hi] : {std::pair{window_a.eta_i, kink}, std::pair{kink, eta_hi}}) {
      if (!(hi > lo)) continue;
      const QuadResult part = adaptive_quad(strip, lo, hi, 0.25 * tol);
      theta_total += part.value;
      error += part.error_estimate;
    }
  }
  report.s_theta_numeric = theta_total;

  const double prefactor = re_alpha_beta(state_a) * im_alpha_beta(state_b) / M_PI;
  report.s2_numeric = prefactor * (report.s_delta_numeric + report.s_theta_numeric);
  report.quadrature_error = std::abs(prefactor) * error;
  return report;
}

OracleReport s2_oracle_matter(const DetectorSpec& detector_a,
                              const DetectorSpec& detector_b, double R,
                              const CosmologyParams& params, double tol) {
  if (std::abs(params.alpha() - 1.5) > 1e-12) {
    throw UnsupportedError("s2_oracle_matter: requires alpha = 3/2, got " +
                           std::to_string(params.alpha()));
  }
  check_gap(detector_a);
  check_gap(detector_b);
  return s2_oracle_matter_windows(detector_a.state, detector_b.state,
                                  to_conformal(detector_a, params),
                                  to_conformal(detector_b, params), R, tol);
}

OracleReport s2_oracle_mode_sum_windows(const QubitAmplitudes& state_a,
                                        const QubitAmplitudes& state_b,
                                        const ConformalWindow& window_a,
                                        const ConformalWindow& window_b,
                                        double R, double alpha, double tol) {
  if (!(alpha > -1.49) || !(alpha <= 10.0)) {
    throw UnsupportedError(
        "s2_oracle_mode_sum: supported mode-index range is (-1.49, 10], got " +
        std::to_string(alpha));
  }
  const QuadResult mode_sum =
      window_integrated_commutator(alpha, window_a, window_b, R, tol);

  OracleReport report;
  report.method = OracleMethod::kModeSum;
  const double sender = re_alpha_beta(state_a);
  const double receiver = im_alpha_beta(state_b);
  report.s2_numeric = -4.0 * sender * receiver * mode_sum.value;
  report.quadrature_error = 4.0 * std::abs(sender * receiver) * mode_sum.error_estimate;
  report.s_delta_numeric = s_delta(window_a, window_b, R);
  report.s_theta_numeric =
      std::abs(alpha - 1.5) <= 1e-12
          ? -4.0 * M_PI * mode_sum.value - report.s_delta_numeric
          : std::numeric_limits<double>::quiet_NaN();
  return report;
}

OracleReport s2_oracle_mode_sum(const DetectorSpec& detector_a,
                                const DetectorSpec& detector_b, double R,
                                double alpha, double tol,
                                const CosmologyParams& params) {
  check_gap(detector_a);
  check_gap(detector_b);
  return s2_oracle_mode_sum_windows(detector_a.state, detector_b.state,
                                    to_conformal(detector_a, params),
                                    to_conformal(detector_b, params), R, alpha,
                                    tol);
}

}  // namespace huygens
