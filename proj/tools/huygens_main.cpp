// huygens: signalling estimator and channel capacity between comoving
// detectors in spatially flat FRW backgrounds.
//
// Subcommands:
//   sweep <config>     parameter sweep, CSV/JSON rows per grid point
//   verify             closed form vs quadrature oracle on random geometries
//   network <config>   receiver-lattice aggregation experiment
//   probe              commutator probe (pointwise or window-integrated)
//
// Exit codes: 0 success, 1 validation error, 2 computation/convergence
// failure (including verify mismatches).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "huygens/commutator.hpp"
#include "huygens/cosmology.hpp"
#include "huygens/errors.hpp"
#include "huygens/network.hpp"
#include "huygens/oracle.hpp"
#include "huygens/quadrature.hpp"
#include "huygens/signalling.hpp"
#include "huygens/sweep.hpp"
#include "huygens/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationError = 1;
constexpr int kComputationError = 2;

huygens::KeyValueMap load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  return huygens::parse_key_values(in);
}

// Writes to the configured path, or stdout for "-".
void emit(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + path + "'");
  }
  out << payload;
}

int cmd_sweep(const std::string& config_path) {
  const huygens::SweepConfig config =
      huygens::sweep_config_from_keys(load_config(config_path));
  const huygens::SweepResult result = huygens::run_sweep(config);
  for (const huygens::SweepRow& row : result.rows) {
    if (!row.ok) {
      std::cerr << "warning: " << result.varied_name << " = " << row.varied_value
                << ": " << row.error << "\n";
    }
  }
  std::ostringstream out;
  if (config.format == huygens::OutputFormat::kCsv) {
    huygens::write_csv(out, result);
  } else {
    huygens::write_json(out, result);
  }
  emit(config.output_path, out.str());
  return kOk;
}

int cmd_verify(std::uint64_t seed, int per_case, double tol) {
  const huygens::VerifyReport report = huygens::run_verify(seed, per_case, tol);
  for (const huygens::VerifyRow& row : report.rows) {
    const auto& g = row.geometry;
    std::printf(
        "case %d  A=[%.6g, %.6g]  B=[%.6g, %.6g]  R=%.6g  closed=% .10e  "
        "oracle=% .10e  dev=%.2e  bound=%.2e  %s\n",
        huygens::label(g.causal_case), g.window_a.eta_i, g.window_a.eta_f,
        g.window_b.eta_i, g.window_b.eta_f, g.R, row.s2_closed, row.s2_oracle,
        row.deviation, row.bound, row.pass ? "PASS" : "FAIL");
  }
  std::printf("verify: %zu geometries, max relative deviation %.3e -> %s\n",
              report.rows.size(), report.max_relative_deviation,
              report.all_pass ? "PASS" : "FAIL");
  return report.all_pass ? kOk : kComputationError;
}

int cmd_network(const std::string& config_path) {
  const huygens::NetworkConfig config =
      huygens::network_config_from_keys(load_config(config_path));
  const std::vector<huygens::NetworkResult> rows =
      huygens::run_network_slices(config);
  std::ostringstream out;
  if (config.format == huygens::OutputFormat::kCsv) {
    huygens::write_network_csv(out, rows);
  } else {
    huygens::write_network_json(out, rows);
  }
  emit(config.output_path, out.str());
  return kOk;
}

int cmd_probe(double alpha, double eta, double eta_p, double R, bool windowed,
              double eta2, double eta_p2, double tol) {
  if (!windowed) {
    const huygens::CosmologyParams params =
        huygens::CosmologyParams::from_alpha(alpha);
    const huygens::CommutatorValue v =
        huygens::commutator_matter(eta, eta_p, R, params);
    const double d_eta = eta - eta_p;
    std::printf("commutator at eta=%.10g eta'=%.10g R=%.10g (alpha=3/2):\n", eta,
                eta_p, R);
    std::printf("  delta(d_eta - R) coefficient: %.10e  (support at d_eta = %+.10g)\n",
                v.delta_retarded_strength, R);
    std::printf("  delta(d_eta + R) coefficient: %.10e  (support at d_eta = %+.10g)\n",
                v.delta_advanced_strength, -R);
    std::printf("  interior (theta) value:       %.10e  (d_eta = %+.10g, %s)\n",
                v.interior_value, d_eta,
                std::abs(d_eta) > R ? "timelike" : "spacelike or lightlike");
    return kOk;
  }
  const huygens::ConformalWindow wa{eta, eta2};
  const huygens::ConformalWindow wb{eta_p, eta_p2};
  const huygens::QuadResult m =
      huygens::window_integrated_commutator(alpha, wa, wb, R, tol);
  std::printf(
      "window-integrated commutator, alpha=%.10g A=[%.10g, %.10g] "
      "B=[%.10g, %.10g] R=%.10g:\n  M = %.10e  (error estimate %.2e, %zu "
      "evaluations)\n",
      alpha, wa.eta_i, wa.eta_f, wb.eta_i, wb.eta_f, R, m.value,
      m.error_estimate, m.evaluations);
  if (std::abs(alpha - 1.5) <= 1e-12) {
    const double closed = huygens::s_delta(wa, wb, R) + huygens::s_theta(wa, wb, R);
    const double mode_sum = -4.0 * M_PI * m.value;
    std::printf(
        "  closed form S_delta + S_theta = %.10e, mode sum -> %.10e, |dev| = "
        "%.2e\n",
        closed, mode_sum, std::abs(closed - mode_sum));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Timelike signalling estimator and channel capacity for comoving "
      "detectors in flat FRW universes"};
  app.require_subcommand(1);

  std::string sweep_config;
  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep from a config file");
  sweep->add_option("config", sweep_config, "plain-text key = value config")->required();

  std::uint64_t seed = 42;
  int per_case = 3;
  double verify_tol = 1e-6;
  CLI::App* verify =
      app.add_subcommand("verify", "closed form vs oracle on random geometries");
  verify->add_option("--seed", seed, "RNG seed (default 42)");
  verify->add_option("--per-case", per_case, "geometries per causal case (default 3)");
  verify->add_option("--tol", verify_tol, "relative tolerance (default 1e-6)");

  std::string network_config;
  CLI::App* network =
      app.add_subcommand("network", "receiver-lattice aggregation experiment");
  network->add_option("config", network_config, "plain-text key = value config")
      ->required();

  double alpha = 1.5, eta = 0.0, eta_p = 0.0, R = 0.0;
  double eta2 = 0.0, eta_p2 = 0.0, probe_tol = 1e-5;
  bool windowed = false;
  CLI::App* probe = app.add_subcommand("probe", "evaluate the field commutator");
  probe->add_option("--alpha", alpha, "mode index (pointwise probe needs 3/2)");
  probe->add_option("--eta", eta, "first event's conformal time, or window A start")
      ->required();
  probe->add_option("--eta-p", eta_p, "second event's conformal time, or window B start")
      ->required();
  probe->add_option("--R", R, "comoving separation")->required();
  probe->add_flag("--windowed", windowed, "integrate over windows instead");
  probe->add_option("--eta2", eta2, "window A end (with --windowed)");
  probe->add_option("--eta-p2", eta_p2, "window B end (with --windowed)");
  probe->add_option("--tol", probe_tol, "window integration tolerance (default 1e-5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return cmd_sweep(sweep_config);
    if (verify->parsed()) return cmd_verify(seed, per_case, verify_tol);
    if (network->parsed()) return cmd_network(network_config);
    if (probe->parsed()) {
      return cmd_probe(alpha, eta, eta_p, R, windowed, eta2, eta_p2, probe_tol);
    }
  } catch (const huygens::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  } catch (const huygens::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kValidationError;
}
