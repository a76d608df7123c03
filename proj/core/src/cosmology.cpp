#include "huygens/cosmology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace huygens {

namespace {

void check_eta_star(double eta_star) {
  if (!(eta_star > 0.0)) {
    throw std::domain_error("eta_star must be positive, got " +
                            std::to_string(eta_star));
  }
}

}  // namespace

double alpha_from_w(double w) {
  if (!(w > -1.0)) {
    throw std::domain_error(
        "w <= -1: no Big Bang cosmology of this family (w = " +
        std::to_string(w) + ")");
  }
  const double denom = 6.0 * w + 2.0;
  if (denom == 0.0) {
    throw std::domain_error("w = -1/3 is the singular point of the w -> alpha map");
  }
  const double alpha = (3.0 - 3.0 * w) / denom;
  // w in (-1, -1/3) lands at alpha <= -3/2, outside the mode-index range the
  // Bessel kernel is defined on.
  if (!(alpha > -1.5)) {
    throw std::domain_error("w = " + std::to_string(w) +
                            " gives alpha = " + std::to_string(alpha) +
                            " <= -3/2, outside the supported family");
  }
  return alpha;
}

double w_from_alpha(double alpha) {
  const double denom = 3.0 + 6.0 * alpha;
  if (!(denom > 0.0)) {
    throw std::domain_error("alpha must exceed -1/2 for a finite equation of state, got " +
                            std::to_string(alpha));
  }
  return (3.0 - 2.0 * alpha) / denom;
}

CosmologyParams CosmologyParams::from_w(double w, double eta_star) {
  check_eta_star(eta_star);
  return CosmologyParams(w, alpha_from_w(w), eta_star);
}

CosmologyParams CosmologyParams::from_alpha(double alpha, double eta_star) {
  check_eta_star(eta_star);
  return CosmologyParams(w_from_alpha(alpha), alpha, eta_star);
}

double scale_factor(double eta, const CosmologyParams& params) {
  if (!(eta > 0.0)) {
    throw std::domain_error("eta must be positive (Big Bang at eta = 0), got " +
                            std::to_string(eta));
  }
  return std::pow(eta / params.eta_star(), params.alpha() + 0.5);
}

double conformal_from_comoving(double t, const CosmologyParams& params) {
  if (!(t > 0.0)) {
    throw std::domain_error("comoving time must be positive, got " +
                            std::to_string(t));
  }
  const double p = params.alpha() + 1.5;
  return params.eta_star() * std::pow(p * t / params.eta_star(), 1.0 / p);
}

double comoving_from_conformal(double eta, const CosmologyParams& params) {
  if (!(eta > 0.0)) {
    throw std::domain_error("eta must be positive, got " + std::to_string(eta));
  }
  const double p = params.alpha() + 1.5;
  return params.eta_star() / p * std::pow(eta / params.eta_star(), p);
}

}  // namespace huygens
