#include "huygens/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <vector>

namespace huygens {

namespace {

// Gauss 7 / Kronrod 15 pair on [-1, 1]. Even indices of the Kronrod abscissa
// are the Gauss nodes.
struct Gk15 {
  const std::array<double, 8>& xk =
      boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
  const std::array<double, 8>& wk =
      boost::math::quadrature::gauss_kronrod<double, 15>::weights();
  const std::array<double, 4>& wg =
      boost::math::quadrature::gauss<double, 7>::weights();
};

struct PanelEstimate {
  double kronrod = 0.0;
  double error = 0.0;
};

PanelEstimate gk15_panel(const std::function<double(double)>& f, double a,
                         double b, std::size_t& evaluations) {
  static const Gk15 rule;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (std::size_t i = 0; i < rule.xk.size(); ++i) {
    const double x = rule.xk[i];
    double fsum;
    if (x == 0.0) {
      fsum = f(mid);
      ++evaluations;
    } else {
      fsum = f(mid - half * x) + f(mid + half * x);
      evaluations += 2;
    }
    kronrod += rule.wk[i] * fsum;
    if (i % 2 == 0) gauss += rule.wg[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

struct Segment {
  double a, b, value, error;
};

struct WorseError {
  bool operator()(const Segment& lhs, const Segment& rhs) const {
    return lhs.error < rhs.error;
  }
};

constexpr std::size_t kMaxSegments = 20000;

}  // namespace

QuadResult adaptive_quad(const std::function<double(double)>& f, double a,
                         double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("adaptive_quad: requires a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("adaptive_quad: requires tol > 0");

  std::size_t evaluations = 0;
  std::priority_queue<Segment, std::vector<Segment>, WorseError> segments;
  auto first = gk15_panel(f, a, b, evaluations);
  segments.push({a, b, first.kronrod, first.error});
  double total = first.kronrod;
  double total_error = first.error;

  const double min_width = 8.0 * std::numeric_limits<double>::epsilon() * (b - a);
  while (total_error > tol * std::max(1.0, std::abs(total))) {
    if (segments.size() >= kMaxSegments || segments.top().b - segments.top().a < min_width) {
      throw ConvergenceError("adaptive_quad: tolerance not met within budget",
                             {total, total_error, evaluations});
    }
    const Segment worst = segments.top();
    segments.pop();
    const double m = 0.5 * (worst.a + worst.b);
    const auto left = gk15_panel(f, worst.a, m, evaluations);
    const auto right = gk15_panel(f, m, worst.b, evaluations);
    total += left.kronrod + right.kronrod - worst.value;
    total_error += left.error + right.error - worst.error;
    segments.push({worst.a, m, left.kronrod, left.error});
    segments.push({m, worst.b, right.kronrod, right.error});
  }
  return {total, total_error, evaluations};
}

namespace {

// Wynn epsilon acceleration of the trailing window of a partial-sum sequence.
// Returns the highest even-column entry that could be formed stably.
double wynn_epsilon(const std::deque<double>& sums) {
  const std::size_t n = sums.size();
  std::vector<double> prev_prev(n + 1, 0.0);         // epsilon_{-1} column
  std::vector<double> prev(sums.begin(), sums.end());  // epsilon_0 column
  double best = prev.back();
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<double> cur(n - col);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const double diff = prev[i + 1] - prev[i];
      if (std::abs(diff) < 1e-305) return best;
      cur[i] = prev_prev[i + 1] + 1.0 / diff;
    }
    if (col % 2 == 0 && !cur.empty()) best = cur.back();
    prev_prev = std::move(prev);
    prev = std::move(cur);
  }
  return best;
}

// The epsilon table resolves at most (window-1)/2 geometric transients; the
// windowed mode sums carry up to a dozen beat frequencies (two phases each),
// so the window must stay comfortably above ~50.
constexpr std::size_t kEpsilonWindow = 128;
constexpr std::size_t kMaxPanels = 4000;

}  // namespace

QuadResult oscillatory_tail_quad(const std::function<double(double)>& envelope,
                                 double phase_rate, double a, double tol) {
  if (!(phase_rate > 0.0)) {
    throw std::invalid_argument("oscillatory_tail_quad: requires phase_rate > 0");
  }
  if (!(a > 0.0)) throw std::invalid_argument("oscillatory_tail_quad: requires a > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("oscillatory_tail_quad: requires tol > 0");

  const auto integrand = [&](double k) {
    return envelope(k) * std::sin(phase_rate * k);
  };
  const double period = M_PI / phase_rate;

  std::size_t evaluations = 0;
  double panel_error_sum = 0.0;
  double partial = 0.0;
  std::deque<double> sums;
  std::deque<double> recent_estimates;
  double estimate = 0.0;
  double prev_estimate = std::numeric_limits<double>::quiet_NaN();
  int settled = 0;
  double peak_term = 0.0;
  double initial_scale = 0.0;
  int growth_streak = 0;

  auto spread = [&]() {
    double lo = recent_estimates.front(), hi = lo;
    for (double e : recent_estimates) {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    return hi - lo;
  };

  // First boundary: the next sine zero at or after a.
  double lo = a;
  double hi = std::ceil(a / period) * period;
  if (hi <= lo + 1e-12 * period) hi = lo + period;

  for (std::size_t n = 0; n < kMaxPanels; ++n) {
    double panel_value = 0.0;
    try {
      const QuadResult panel = adaptive_quad(integrand, lo, hi, 0.05 * tol);
      panel_value = panel.value;
      panel_error_sum += panel.error_estimate;
      evaluations += panel.evaluations;
    } catch (const ConvergenceError& e) {
      panel_value = e.best_estimate().value;
      panel_error_sum += e.best_estimate().error_estimate;
      evaluations += e.best_estimate().evaluations;
    }

    // Divergence: a long run of panels that each exceed every earlier panel
    // cannot happen for a decaying envelope (beats stay under the old peak).
    const double mag = std::abs(panel_value);
    if (n < 4) {
      initial_scale = std::max(initial_scale, mag);
    } else if (mag > peak_term) {
      if (++growth_streak >= 8 && mag > 2.0 * std::max(initial_scale, tol)) {
        throw DivergenceError(
            "oscillatory_tail_quad: panel integrals are growing; envelope does "
            "not decay");
      }
    } else {
      growth_streak = 0;
    }
    peak_term = std::max(peak_term, mag);

    partial += panel_value;
    sums.push_back(partial);
    if (sums.size() > kEpsilonWindow) sums.pop_front();

    if (sums.size() >= 6) {
      estimate = wynn_epsilon(sums);
      recent_estimates.push_back(estimate);
      if (recent_estimates.size() > 8) recent_estimates.pop_front();
      const double scale = std::max(1.0, std::abs(estimate));
      if (!std::isnan(prev_estimate) &&
          std::abs(estimate - prev_estimate) < 0.25 * tol * scale) {
        if (++settled >= 4 && recent_estimates.size() >= 8 &&
            spread() < tol * scale) {
          return {estimate, spread() + 0.1 * panel_error_sum, evaluations};
        }
      } else {
        settled = 0;
      }
      prev_estimate = estimate;
    }

    lo = hi;
    hi += period;
  }
  throw ConvergenceError(
      "oscillatory_tail_quad: acceleration did not settle within panel budget",
      {estimate,
       (recent_estimates.empty() ? std::abs(estimate) : spread()) +
           0.1 * panel_error_sum,
       evaluations});
}

}  // namespace huygens
