#include "huygens/commutator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "huygens/errors.hpp"
#include "huygens/special_functions.hpp"

namespace huygens {

namespace {

constexpr double kAlphaFloor = -1.495;  // -3/2 + epsilon

void check_kernel_args(double alpha, double eta, double eta_p, double k) {
  if (!(alpha > kAlphaFloor)) {
    throw std::domain_error("mode kernel: alpha must exceed -3/2, got " +
                            std::to_string(alpha));
  }
  if (!(eta > 0.0) || !(eta_p > 0.0) || !(k > 0.0)) {
    throw std::domain_error("mode kernel: eta, eta', k must all be positive");
  }
}

}  // namespace

double mode_kernel_g(double alpha, double eta, double eta_p, double k) {
  check_kernel_args(alpha, eta, eta_p, k);
  const double x = k * eta;
  const double xp = k * eta_p;
  const double j = bessel_j(alpha, x);
  const double y = bessel_y(alpha, x);
  const double jp = bessel_j(alpha, xp);
  const double yp = bessel_y(alpha, xp);
  const double lj = bessel_j(alpha - 1.0, xp) - bessel_j(alpha + 1.0, xp);
  const double ly = bessel_y(alpha - 1.0, xp) - bessel_y(alpha + 1.0, xp);
  const double denom_jy = yp * lj - jp * ly;  // analytically -4/(pi k eta')
  const double g_jy = j * yp / denom_jy;
  const double g_yj = y * jp / (jp * ly - yp * lj);
  return std::sqrt(eta / eta_p) * (g_jy + g_yj);
}

double mode_kernel_g_reduced(double alpha, double eta, double eta_p, double k) {
  check_kernel_args(alpha, eta, eta_p, k);
  const double x = k * eta;
  const double xp = k * eta_p;
  const double bracket =
      bessel_y(alpha, x) * bessel_j(alpha, xp) - bessel_j(alpha, x) * bessel_y(alpha, xp);
  return 0.25 * M_PI * k * std::sqrt(eta * eta_p) * bracket;
}

CommutatorValue commutator_matter(double eta, double eta_p, double R,
                                  const CosmologyParams& params) {
  if (std::abs(params.alpha() - 1.5) > 1e-12) {
    throw UnsupportedError(
        "commutator_matter: closed form exists only at alpha = 3/2, got alpha = " +
        std::to_string(params.alpha()));
  }
  if (!(eta > 0.0) || !(eta_p > 0.0)) {
    throw std::domain_error("commutator_matter: eta, eta' must be positive");
  }
  if (!(R > 0.0)) {
    throw std::domain_error("commutator_matter: R must be positive");
  }
  const double base =
      1.0 / (4.0 * M_PI * scale_factor(eta, params) * scale_factor(eta_p, params));
  CommutatorValue value;
  value.delta_retarded_strength = -base / R;
  value.delta_advanced_strength = base / R;
  const double d_eta = eta - eta_p;
  if (d_eta > R) {
    value.interior_value = -base / (eta * eta_p);
  } else if (d_eta < -R) {
    value.interior_value = base / (eta * eta_p);
  } else {
    value.interior_value = 0.0;
  }
  return value;
}

namespace {

struct Interval {
  double lo = 0.0, hi = 0.0;
  bool empty() const { return !(hi > lo); }
  double mid() const { return 0.5 * (lo + hi); }
};

// A x B carved into sub-rectangles on which the time-ordering sign is
// constant (so the Bessel bracket separates into products of 1D integrals),
// plus at most one diagonal square [c,d]^2 from the window overlap.
struct Decomposition {
  std::vector<Interval> segments;  // distinct eta sub-intervals
  struct Rect {
    int seg_a = 0, seg_b = 0;
    double sign = 1.0;  // theta(eta'-eta) - theta(eta-eta') on the rectangle
  };
  std::vector<Rect> rects;
  std::optional<Interval> diagonal;
};

Decomposition decompose(const ConformalWindow& a, const ConformalWindow& b) {
  Decomposition out;
  auto add_segment = [&](Interval seg) {
    out.segments.push_back(seg);
    return static_cast<int>(out.segments.size()) - 1;
  };
  const double c = std::max(a.eta_i, b.eta_i);
  const double d = std::min(a.eta_f, b.eta_f);
  if (!(c < d)) {  // disjoint windows: one rectangle, constant sign
    const int ia = add_segment({a.eta_i, a.eta_f});
    const int ib = add_segment({b.eta_i, b.eta_f});
    out.rects.push_back({ia, ib, a.eta_f <= b.eta_i ? 1.0 : -1.0});
    return out;
  }
  auto split = [&](const ConformalWindow& w) {
    std::vector<int> parts;
    const Interval left{w.eta_i, c}, mid{c, d}, right{d, w.eta_f};
    if (!left.empty()) parts.push_back(add_segment(left));
    parts.push_back(add_segment(mid));
    if (!right.empty()) parts.push_back(add_segment(right));
    return parts;
  };
  const auto parts_a = split(a);
  const auto parts_b = split(b);
  for (int ia : parts_a) {
    for (int ib : parts_b) {
      const Interval& sa = out.segments[ia];
      const Interval& sb = out.segments[ib];
      if (sa.lo == c && sa.hi == d && sb.lo == c && sb.hi == d) {
        out.diagonal = Interval{c, d};
      } else {
        out.rects.push_back({ia, ib, sa.mid() < sb.mid() ? 1.0 : -1.0});
      }
    }
  }
  return out;
}

// Runs a quadrature but treats tolerance misses as soft: the best estimate is
// used and its error folded into the running error budget, so that inner-quad
// shortfalls never unwind an outer integration.
double soft_quad(const std::function<double(double)>& f, double lo, double hi,
                 double tol, std::size_t& evaluations, double& error_accum) {
  try {
    const QuadResult r = adaptive_quad(f, lo, hi, tol);
    evaluations += r.evaluations;
    error_accum += r.error_estimate;
    return r.value;
  } catch (const ConvergenceError& e) {
    const QuadResult& r = e.best_estimate();
    evaluations += r.evaluations;
    error_accum += r.error_estimate;
    return r.value;
  }
}

// W(k) = int_A int_B s(eta,eta') g_alpha(eta,eta',k), evaluated through the
// Wronskian-reduced kernel. Rectangle terms separate into four 1D integrals
// P_X^Z = int_X sqrt(u) Z_alpha(k u) du; the diagonal square costs an
// iterated (triangle) quadrature.
class WindowKernel {
 public:
  WindowKernel(double alpha, const ConformalWindow& a, const ConformalWindow& b,
               double tol)
      : alpha_(alpha), decomp_(decompose(a, b)), tol_(tol) {}

  double operator()(double k) const {
    std::vector<std::array<double, 2>> p(decomp_.segments.size(),
                                         {std::nan(""), std::nan("")});
    auto profile = [&](int seg, int kind) {
      double& slot = p[static_cast<std::size_t>(seg)][static_cast<std::size_t>(kind)];
      if (std::isnan(slot)) {
        const Interval s = decomp_.segments[static_cast<std::size_t>(seg)];
        slot = soft_quad(
            [&](double u) {
              const double z = kind == 0 ? bessel_j(alpha_, k * u)
                                         : bessel_y(alpha_, k * u);
              return std::sqrt(u) * z;
            },
            s.lo, s.hi, tol_, evaluations_, inner_error_);
      }
      return slot;
    };

    double bracket_sum = 0.0;
    for (const auto& rect : decomp_.rects) {
      bracket_sum += rect.sign * (profile(rect.seg_a, 1) * profile(rect.seg_b, 0) -
                                  profile(rect.seg_a, 0) * profile(rect.seg_b, 1));
    }
    if (decomp_.diagonal) {
      bracket_sum += 2.0 * triangle(*decomp_.diagonal, k);
    }
    return 0.25 * M_PI * k * bracket_sum;
  }

  std::size_t evaluations() const { return evaluations_; }
  double inner_error() const { return inner_error_; }

 private:
  // int_{c <= eta < eta' <= d} sqrt(eta eta') [Y(k eta)J(k eta') -
  // J(k eta)Y(k eta')]; the upper triangle carries s = +1 and equals the
  // lower one after the symmetrization already applied by the caller.
  double triangle(Interval sq, double k) const {
    auto outer = [&](double eta_p) {
      if (!(eta_p > sq.lo)) return 0.0;
      const double jp = bessel_j(alpha_, k * eta_p);
      const double yp = bessel_y(alpha_, k * eta_p);
      const double qy = soft_quad(
          [&](double u) { return std::sqrt(u) * bessel_y(alpha_, k * u); },
          sq.lo, eta_p, tol_, evaluations_, inner_error_);
      const double qj = soft_quad(
          [&](double u) { return std::sqrt(u) * bessel_j(alpha_, k * u); },
          sq.lo, eta_p, tol_, evaluations_, inner_error_);
      return std::sqrt(eta_p) * (jp * qy - yp * qj);
    };
    return soft_quad(outer, sq.lo, sq.hi, tol_, evaluations_, inner_error_);
  }

  double alpha_;
  Decomposition decomp_;
  double tol_;
  mutable std::size_t evaluations_ = 0;
  mutable double inner_error_ = 0.0;
};

}  // namespace

QuadResult window_integrated_commutator(double alpha, const ConformalWindow& window_a,
                                        const ConformalWindow& window_b, double R,
                                        double tol) {
  validate(window_a);
  validate(window_b);
  if (!(R > 0.0)) {
    throw std::domain_error("window_integrated_commutator: R must be positive");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("window_integrated_commutator: tol must be positive");
  }
  if (!(alpha > kAlphaFloor)) {
    throw std::domain_error(
        "window_integrated_commutator: alpha must exceed -3/2, got " +
        std::to_string(alpha));
  }

  const double inner_tol = std::clamp(1e-3 * tol, 1e-12, 1e-7);
  WindowKernel w_of_k(alpha, window_a, window_b, inner_tol);
  const double norm = 1.0 / (M_PI * M_PI * R);

  const double k_c = std::max(2.0 * M_PI / R, 2.0 * M_PI / window_b.eta_f);

  std::size_t evaluations = 0;
  double error = 0.0;
  double value = 0.0;

  {
    const QuadResult low = adaptive_quad(
        [&](double k) { return std::sin(k * R) * w_of_k(k) * norm; }, 0.0, k_c,
        0.5 * tol);
    value += low.value;
    error += low.error_estimate;
    evaluations += low.evaluations;
  }
  {
    const QuadResult tail = oscillatory_tail_quad(
        [&](double k) { return w_of_k(k) * norm; }, R, k_c, 0.5 * tol);
    value += tail.value;
    error += tail.error_estimate;
    evaluations += tail.evaluations;
  }
  return {value, error, evaluations + w_of_k.evaluations()};
}

}  // namespace huygens
