#ifndef HUYGENS_NETWORK_HPP_
#define HUYGENS_NETWORK_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "huygens/detector.hpp"
#include "huygens/sweep.hpp"

namespace huygens {

// The receiver-network aggregation experiment: receivers on a cubic comoving
// lattice at a late time slice, one bit-gathering channel per receiver in
// strict timelike contact with the sender.
struct NetworkConfig {
  double w = 0.0;
  double eta_star = 1.0;
  double delta = 1.0;
  double t_ia = 0.0;
  double slice_t_ib = 0.0;     // base slice (comoving switch-on of receivers)
  int slice_count = 1;         // successive slices emitted
  double slice_factor = 2.0;   // multiplicative step between slices
  double lattice_spacing = 1.0;
  ReceiverPolicy policy = ReceiverPolicy::kFixedComovingDuration;
  double lambda_a = 1.0;
  double lambda_b = 1.0;
  QubitAmplitudes state_a;
  QubitAmplitudes state_b;
  std::string output_path = "-";
  OutputFormat format = OutputFormat::kCsv;
};

struct NetworkResult {
  double slice_t_ib = 0.0;
  double eta_ib = 0.0;
  double contact_radius = 0.0;  // eta_iB - eta_fA
  std::size_t receiver_count = 0;
  double per_receiver_capacity = 0.0;
  double total_bits = 0.0;
};

// Counts lattice sites (i,j,l) != 0 with spacing*|(i,j,l)| strictly inside
// the contact radius; the sender's own site is excluded. Every such receiver
// is in case 5, whose capacity is R-independent, so
// total = count * per-receiver capacity. Zero receivers is a valid result.
NetworkResult run_network(double slice_t_ib, double delta,
                          double lattice_spacing, ReceiverPolicy policy,
                          const NetworkConfig& config);

// Runs slice_count slices starting at config.slice_t_ib, advancing by
// config.slice_factor each step.
std::vector<NetworkResult> run_network_slices(const NetworkConfig& config);

NetworkConfig network_config_from_keys(const KeyValueMap& kv);

void write_network_csv(std::ostream& out, const std::vector<NetworkResult>& rows);
void write_network_json(std::ostream& out, const std::vector<NetworkResult>& rows);

}  // namespace huygens

#endif  // HUYGENS_NETWORK_HPP_
