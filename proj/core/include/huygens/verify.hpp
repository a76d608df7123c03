#ifndef HUYGENS_VERIFY_HPP_
#define HUYGENS_VERIFY_HPP_

#include <cstdint>
#include <vector>

#include "huygens/detector.hpp"
#include "huygens/signalling.hpp"

namespace huygens {

// A randomized window/separation geometry with its causal classification.
struct GeometrySample {
  ConformalWindow window_a;
  ConformalWindow window_b;
  double R = 0.0;
  CausalCase causal_case = CausalCase::k1;
};

// Rejection-samples `per_case` geometries for each causal case 1..6:
// window edges log-uniform in [0.1, 100], R log-uniform in [0.01, 50].
// Deterministic for a fixed seed.
std::vector<GeometrySample> sample_geometries(std::uint64_t seed, int per_case);

// Draws geometries of one specific case only.
std::vector<GeometrySample> sample_geometries_of_case(std::uint64_t seed,
                                                      CausalCase wanted,
                                                      int count);

struct VerifyRow {
  GeometrySample geometry;
  double s2_closed = 0.0;
  double s2_oracle = 0.0;
  double deviation = 0.0;  // |closed - oracle|
  double bound = 0.0;      // max(tol*|closed|, abs floor)
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_pass = true;
  double max_relative_deviation = 0.0;
};

// Compares the closed-form estimator against the matter-era quadrature oracle
// on per_case geometries of every case, at relative tolerance tol with a
// 1e-10 absolute floor for exact zeros. Throws std::invalid_argument when
// per_case < 1.
VerifyReport run_verify(std::uint64_t seed, int per_case, double tol);

}  // namespace huygens

#endif  // HUYGENS_VERIFY_HPP_
