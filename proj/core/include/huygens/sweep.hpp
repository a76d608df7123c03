#ifndef HUYGENS_SWEEP_HPP_
#define HUYGENS_SWEEP_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "huygens/cosmology.hpp"
#include "huygens/detector.hpp"

namespace huygens {

enum class ReceiverPolicy {
  kFixedComovingDuration,   // T_fB - T_iB = delta always
  kFixedConformalDuration,  // eta_fB - eta_iB pinned to the reference window
  kFixedConformalRatio,     // eta_fB / eta_iB pinned to the reference window
};

enum class SweepVariable { kR, kTiB };

enum class OutputFormat { kCsv, kJson };

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool log_spacing = false;
};

struct SweepConfig {
  double w = 0.0;  // equation of state; alpha derived
  double eta_star = 1.0;
  double delta = 1.0;  // common comoving switching duration
  double t_ia = 0.0;   // Alice's comoving switch-on
  ReceiverPolicy policy = ReceiverPolicy::kFixedComovingDuration;
  SweepVariable vary = SweepVariable::kR;
  GridSpec grid;
  double fixed_value = 0.0;  // T_iB when varying R, R when varying T_iB
  double lambda_a = 1.0;
  double lambda_b = 1.0;
  QubitAmplitudes state_a;
  QubitAmplitudes state_b;
  std::string output_path = "-";
  OutputFormat format = OutputFormat::kCsv;
  double mode_sum_tol = 1e-3;  // used only away from alpha = 3/2
};

struct SweepRow {
  double varied_value = 0.0;
  int case_label = 0;
  double s_delta = 0.0;
  double s_theta = 0.0;
  double s2 = 0.0;
  double capacity = 0.0;
  double capacity_delta_only = 0.0;
  bool ok = true;
  std::string error;  // recorded in-row; the sweep never aborts on one point
};

struct SweepResult {
  std::string varied_name;  // "R" or "T_iB"
  std::vector<SweepRow> rows;
};

std::vector<double> make_grid(const GridSpec& grid);

// One row per grid point, in grid order. Per-point failures produce NaN-filled
// rows carrying the error message.
SweepResult run_sweep(const SweepConfig& config);

// Fixed column order:
// varied_name,varied_value,case,s_delta,s_theta,s2,capacity,capacity_delta_only
// Floats with 17 significant digits; header row mandatory.
void write_csv(std::ostream& out, const SweepResult& result);
void write_json(std::ostream& out, const SweepResult& result);

// --- plain-text config files ("key = value", '#' comments) ---

using KeyValueMap = std::map<std::string, std::string>;

// Throws std::invalid_argument on malformed lines or duplicate keys.
KeyValueMap parse_key_values(std::istream& in);

// Validates and converts a key-value map into a SweepConfig. Unknown keys are
// rejected. Throws std::invalid_argument with a descriptive message.
SweepConfig sweep_config_from_keys(const KeyValueMap& kv);

ReceiverPolicy parse_receiver_policy(const std::string& name);

}  // namespace huygens

#endif  // HUYGENS_SWEEP_HPP_
