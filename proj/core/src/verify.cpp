#include "huygens/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "huygens/oracle.hpp"

namespace huygens {

namespace {

constexpr double kEtaLo = 0.1, kEtaHi = 100.0;
constexpr double kRLo = 0.01, kRHi = 50.0;
constexpr long kMaxAttempts = 10'000'000;

class GeometryDraw {
 public:
  explicit GeometryDraw(std::uint64_t seed) : rng_(seed) {}

  // One rejection attempt; false when the windows came out inverted.
  bool next(GeometrySample& out) {
    const double a1 = log_uniform(kEtaLo, kEtaHi);
    const double a2 = log_uniform(kEtaLo, kEtaHi);
    const double b1 = log_uniform(kEtaLo, kEtaHi);
    const double b2 = log_uniform(kEtaLo, kEtaHi);
    const double r = log_uniform(kRLo, kRHi);
    if (!(a1 < a2) || !(b1 < b2)) return false;
    out.window_a = {a1, a2};
    out.window_b = {b1, b2};
    out.R = r;
    out.causal_case = classify_case(out.window_a, out.window_b, r);
    return true;
  }

 private:
  double log_uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng_));
  }
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<GeometrySample> sample_geometries(std::uint64_t seed, int per_case) {
  if (per_case < 1) throw std::invalid_argument("sample_geometries: per_case must be >= 1");
  GeometryDraw draw(seed);
  std::vector<std::vector<GeometrySample>> buckets(6);
  int filled = 0;
  for (long attempt = 0; attempt < kMaxAttempts && filled < 6 * per_case; ++attempt) {
    GeometrySample g;
    if (!draw.next(g)) continue;
    auto& bucket = buckets[static_cast<std::size_t>(label(g.causal_case)) - 1];
    if (static_cast<int>(bucket.size()) < per_case) {
      bucket.push_back(g);
      ++filled;
    }
  }
  if (filled < 6 * per_case) {
    throw std::runtime_error("sample_geometries: attempt budget exhausted");
  }
  std::vector<GeometrySample> out;
  out.reserve(static_cast<std::size_t>(6 * per_case));
  for (const auto& bucket : buckets) {
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

std::vector<GeometrySample> sample_geometries_of_case(std::uint64_t seed,
                                                      CausalCase wanted,
                                                      int count) {
  if (count < 1) throw std::invalid_argument("sample_geometries_of_case: count must be >= 1");
  GeometryDraw draw(seed);
  std::vector<GeometrySample> out;
  for (long attempt = 0; attempt < kMaxAttempts &&
                         static_cast<int>(out.size()) < count;
       ++attempt) {
    GeometrySample g;
    if (draw.next(g) && g.causal_case == wanted) out.push_back(g);
  }
  if (static_cast<int>(out.size()) < count) {
    throw std::runtime_error("sample_geometries_of_case: attempt budget exhausted");
  }
  return out;
}

VerifyReport run_verify(std::uint64_t seed, int per_case, double tol) {
  if (per_case < 1) throw std::invalid_argument("run_verify: per_case must be >= 1");
  if (!(tol >= 0.0)) throw std::invalid_argument("run_verify: tol must be >= 0");

  const auto [state_a, state_b] = optimal_detector_states();
  const double quad_tol = std::max(0.02 * tol, 1e-9);

  VerifyReport report;
  for (const GeometrySample& g : sample_geometries(seed, per_case)) {
    VerifyRow row;
    row.geometry = g;
    const SignalBreakdown closed = s2_breakdown_windows(
        state_a, state_b, g.window_a, g.window_b, g.R, 1.0, 1.0);
    const OracleReport oracle = s2_oracle_matter_windows(
        state_a, state_b, g.window_a, g.window_b, g.R, quad_tol);
    row.s2_closed = closed.s2;
    row.s2_oracle = oracle.s2_numeric;
    row.deviation = std::abs(closed.s2 - oracle.s2_numeric);
    // relative bound, with the absolute floor reserved for exact zeros
    row.bound = closed.s2 == 0.0 ? 1e-10 : tol * std::abs(closed.s2);
    row.pass = row.deviation <= row.bound;
    report.all_pass = report.all_pass && row.pass;
    report.max_relative_deviation =
        std::max(report.max_relative_deviation,
                 row.deviation / std::max(std::abs(closed.s2), 1e-10));
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace huygens
