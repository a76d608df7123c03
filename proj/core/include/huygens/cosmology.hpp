#ifndef HUYGENS_COSMOLOGY_HPP_
#define HUYGENS_COSMOLOGY_HPP_

namespace huygens {

// Mode index of the Bessel kernel for a perfect fluid with pressure-to-density
// ratio w:  alpha = (3 - 3w) / (6w + 2).  Valid for w > -1/3 (the invariant
// alpha > -3/2 fails on (-1, -1/3], and the map is singular at w = -1/3).
double alpha_from_w(double w);

// Inverse map, w = (3 - 2*alpha) / (3 + 6*alpha), valid for alpha > -1/2.
double w_from_alpha(double alpha);

// Spatially flat FRW background with a(eta) = (eta/eta_star)^(alpha + 1/2).
// eta_star is a free normalization; all signalling outputs depend only on
// conformal window positions and the comoving separation, not on eta_star.
class CosmologyParams {
 public:
  static CosmologyParams from_w(double w, double eta_star = 1.0);
  static CosmologyParams from_alpha(double alpha, double eta_star = 1.0);

  double w() const { return w_; }
  double alpha() const { return alpha_; }
  double eta_star() const { return eta_star_; }

 private:
  CosmologyParams(double w, double alpha, double eta_star)
      : w_(w), alpha_(alpha), eta_star_(eta_star) {}
  double w_;
  double alpha_;
  double eta_star_;
};

// a(eta) = (eta/eta_star)^(alpha + 1/2), eta > 0.
double scale_factor(double eta, const CosmologyParams& params);

// Conformal time of the comoving instant t > 0, with the Big Bang at
// eta = t = 0:  t = eta_star/(alpha + 3/2) * (eta/eta_star)^(alpha + 3/2).
double conformal_from_comoving(double t, const CosmologyParams& params);

// Exact inverse of conformal_from_comoving.
double comoving_from_conformal(double eta, const CosmologyParams& params);

}  // namespace huygens

#endif  // HUYGENS_COSMOLOGY_HPP_
