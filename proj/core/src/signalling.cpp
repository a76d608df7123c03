#include "huygens/signalling.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "huygens/errors.hpp"
#include "huygens/special_functions.hpp"

namespace huygens {

void validate(const ConformalWindow& w) {
  if (!(w.eta_i > 0.0) || !(w.eta_i < w.eta_f)) {
    throw std::invalid_argument("conformal window requires 0 < eta_i < eta_f, got [" +
                                std::to_string(w.eta_i) + ", " +
                                std::to_string(w.eta_f) + "]");
  }
}

DetectorSpec DetectorSpec::make(double coupling, double t_on, double t_off,
                                QubitAmplitudes state, double gap) {
  if (!(coupling >= 0.0)) {
    throw std::invalid_argument("detector coupling must be non-negative");
  }
  if (!(t_on > 0.0) || !(t_on < t_off)) {
    throw std::invalid_argument("detector requires 0 < t_on < t_off");
  }
  const double norm = std::norm(state.excited) + std::norm(state.ground);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("detector state must be normalized, |a|^2+|b|^2 = " +
                                std::to_string(norm));
  }
  DetectorSpec d;
  d.coupling = coupling;
  d.t_on = t_on;
  d.t_off = t_off;
  d.state = state;
  d.gap = gap;
  return d;
}

double re_alpha_beta(const QubitAmplitudes& s) {
  return (std::conj(s.excited) * s.ground).real();
}

double im_alpha_beta(const QubitAmplitudes& s) {
  return (std::conj(s.excited) * s.ground).imag();
}

CausalCase classify_case(const ConformalWindow& window_a,
                         const ConformalWindow& window_b, double R) {
  validate(window_a);
  validate(window_b);
  if (!(R > 0.0)) throw std::invalid_argument("classify_case: R must be positive");
  const double lead_i = window_a.eta_i + R;  // light cone of A's switch-on
  const double lead_f = window_a.eta_f + R;  // light cone of A's switch-off
  if (window_b.eta_f <= lead_i) return CausalCase::k1;
  if (window_b.eta_i < lead_i) {
    return window_b.eta_f <= lead_f ? CausalCase::k2 : CausalCase::k6;
  }
  if (window_b.eta_i >= lead_f) return CausalCase::k5;
  return window_b.eta_f <= lead_f ? CausalCase::k3 : CausalCase::k4;
}

std::pair<double, double> z_bounds(const ConformalWindow& window_a,
                                   const ConformalWindow& window_b, double R) {
  const double z1 = std::min(window_a.eta_f + R, window_b.eta_f) / R;
  const double z2 = std::max(window_a.eta_i + R, window_b.eta_i) / R;
  return {z1, z2};
}

double s_delta(const ConformalWindow& window_a, const ConformalWindow& window_b,
               double R) {
  const auto [z1, z2] = z_bounds(window_a, window_b, R);
  return std::max(z1 - z2, 0.0);
}

namespace {

// L(z) = ln(R(z-1)/eta_iA) ln(z) + Li2(1-z)
double bracket_l(double z, double R, double eta_ia) {
  return std::log(R * (z - 1.0) / eta_ia) * std::log(z) + dilog(1.0 - z);
}

// N(z) = ln(R(z-1)/eta_iA) ln(eta_fB/(R z))
double bracket_n(double z, double R, double eta_ia, double eta_fb) {
  return std::log(R * (z - 1.0) / eta_ia) * std::log(eta_fb / (R * z));
}

}  // namespace

double s_theta(const ConformalWindow& window_a, const ConformalWindow& window_b,
               double R) {
  const CausalCase c = classify_case(window_a, window_b, R);
  if (c == CausalCase::k1) return 0.0;
  if (c == CausalCase::k5) {
    return std::log(window_a.eta_f / window_a.eta_i) *
           std::log(window_b.eta_f / window_b.eta_i);
  }
  const auto [z1, z2] = z_bounds(window_a, window_b, R);
  if (!(z1 > z2)) return 0.0;
  return bracket_l(z1, R, window_a.eta_i) - bracket_l(z2, R, window_a.eta_i) +
         bracket_n(z1, R, window_a.eta_i, window_b.eta_f);
}

namespace {

double capacity_from(double s2_value, double lambda_a, double lambda_b,
                     const QubitAmplitudes& state_b) {
  const double mod_product = std::abs(state_b.excited) * std::abs(state_b.ground);
  if (mod_product == 0.0) {
    throw std::domain_error(
        "channel_capacity: |alpha_B||beta_B| = 0, receiver measurement carries "
        "no signal at leading order");
  }
  const double lam2 = lambda_a * lambda_a * lambda_b * lambda_b;
  const double ratio = s2_value / (4.0 * mod_product);
  return lam2 * (2.0 / std::log(2.0)) * ratio * ratio;
}

}  // namespace

double channel_capacity(double s2_value, const DetectorSpec& detector_a,
                        const DetectorSpec& detector_b) {
  return capacity_from(s2_value, detector_a.coupling, detector_b.coupling,
                       detector_b.state);
}

SignalBreakdown s2_breakdown_windows(const QubitAmplitudes& state_a,
                                     const QubitAmplitudes& state_b,
                                     const ConformalWindow& window_a,
                                     const ConformalWindow& window_b, double R,
                                     double coupling_a, double coupling_b) {
  SignalBreakdown out;
  out.case_label = classify_case(window_a, window_b, R);
  out.s_delta = s_delta(window_a, window_b, R);
  out.s_theta = s_theta(window_a, window_b, R);
  const double prefactor = re_alpha_beta(state_a) * im_alpha_beta(state_b) / M_PI;
  out.s2 = prefactor * (out.s_delta + out.s_theta);
  out.capacity = capacity_from(out.s2, coupling_a, coupling_b, state_b);
  out.capacity_delta_only =
      capacity_from(prefactor * out.s_delta, coupling_a, coupling_b, state_b);
  return out;
}

SignalBreakdown s2_breakdown(const DetectorSpec& detector_a,
                             const DetectorSpec& detector_b, double R,
                             const CosmologyParams& params) {
  if (std::abs(params.alpha() - 1.5) > 1e-12) {
    throw UnsupportedError(
        "s2_breakdown: closed form exists only at alpha = 3/2; use the mode-sum "
        "oracle for alpha = " +
        std::to_string(params.alpha()));
  }
  if (detector_a.gap != 0.0 || detector_b.gap != 0.0) {
    throw UnsupportedError("s2_breakdown: closed form requires zero-gap detectors");
  }
  const ConformalWindow wa{conformal_from_comoving(detector_a.t_on, params),
                           conformal_from_comoving(detector_a.t_off, params)};
  const ConformalWindow wb{conformal_from_comoving(detector_b.t_on, params),
                           conformal_from_comoving(detector_b.t_off, params)};
  return s2_breakdown_windows(detector_a.state, detector_b.state, wa, wb, R,
                              detector_a.coupling, detector_b.coupling);
}

std::pair<QubitAmplitudes, QubitAmplitudes> optimal_detector_states() {
  const double r = 1.0 / std::sqrt(2.0);
  QubitAmplitudes sender;
  sender.excited = {-r, 0.0};  // arg(alpha) - arg(beta) = pi
  sender.ground = {r, 0.0};
  QubitAmplitudes receiver;
  receiver.excited = {0.0, r};  // arg(alpha) - arg(beta) = pi/2
  receiver.ground = {r, 0.0};
  return {sender, receiver};
}

}  // namespace huygens
