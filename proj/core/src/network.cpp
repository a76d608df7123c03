#include "huygens/network.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "config_detail.hpp"
#include "huygens/cosmology.hpp"
#include "huygens/signalling.hpp"

namespace huygens {

namespace {

std::size_t count_lattice_receivers(double radius, double spacing) {
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("network: lattice_spacing must be positive");
  }
  if (!(radius > 0.0)) return 0;
  const double r2 = (radius / spacing) * (radius / spacing);
  const long n_max = static_cast<long>(std::floor(radius / spacing));
  std::size_t count = 0;
  for (long i = -n_max; i <= n_max; ++i) {
    for (long j = -n_max; j <= n_max; ++j) {
      for (long l = -n_max; l <= n_max; ++l) {
        const double s = static_cast<double>(i * i + j * j + l * l);
        if (s > 0.0 && s < r2) ++count;  // sender's own site excluded
      }
    }
  }
  return count;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

NetworkResult run_network(double slice_t_ib, double delta,
                          double lattice_spacing, ReceiverPolicy policy,
                          const NetworkConfig& config) {
  const CosmologyParams params = CosmologyParams::from_w(config.w, config.eta_star);
  if (std::abs(params.alpha() - 1.5) > 1e-12) {
    throw std::invalid_argument("network: requires the matter era (alpha = 3/2)");
  }
  if (!(slice_t_ib > 0.0) || !(delta > 0.0)) {
    throw std::invalid_argument("network: slice_t_ib and delta must be positive");
  }

  const ConformalWindow window_a{
      conformal_from_comoving(config.t_ia, params),
      conformal_from_comoving(config.t_ia + delta, params)};

  const double eta_ib = conformal_from_comoving(slice_t_ib, params);
  const double ref_i = conformal_from_comoving(config.slice_t_ib, params);
  const double ref_f = conformal_from_comoving(config.slice_t_ib + delta, params);
  ConformalWindow window_b{eta_ib, 0.0};
  switch (policy) {
    case ReceiverPolicy::kFixedComovingDuration:
      window_b.eta_f = conformal_from_comoving(slice_t_ib + delta, params);
      break;
    case ReceiverPolicy::kFixedConformalDuration:
      window_b.eta_f = eta_ib + (ref_f - ref_i);
      break;
    case ReceiverPolicy::kFixedConformalRatio:
      window_b.eta_f = eta_ib * (ref_f / ref_i);
      break;
  }

  NetworkResult out;
  out.slice_t_ib = slice_t_ib;
  out.eta_ib = eta_ib;
  out.contact_radius = eta_ib - window_a.eta_f;
  out.receiver_count = count_lattice_receivers(out.contact_radius, lattice_spacing);
  if (out.contact_radius > 0.0) {
    // any strictly timelike radius gives the same case-5 capacity
    const SignalBreakdown b = s2_breakdown_windows(
        config.state_a, config.state_b, window_a, window_b,
        0.5 * out.contact_radius, config.lambda_a, config.lambda_b);
    out.per_receiver_capacity = b.capacity;
  }
  out.total_bits = static_cast<double>(out.receiver_count) * out.per_receiver_capacity;
  return out;
}

std::vector<NetworkResult> run_network_slices(const NetworkConfig& config) {
  if (config.slice_count < 1) {
    throw std::invalid_argument("network: slice_count must be >= 1");
  }
  if (!(config.slice_factor > 1.0)) {
    throw std::invalid_argument("network: slice_factor must be > 1");
  }
  std::vector<NetworkResult> rows;
  double t = config.slice_t_ib;
  for (int i = 0; i < config.slice_count; ++i) {
    rows.push_back(run_network(t, config.delta, config.lattice_spacing,
                               config.policy, config));
    t *= config.slice_factor;
  }
  return rows;
}

NetworkConfig network_config_from_keys(const KeyValueMap& kv) {
  detail::KeyReader r(kv);
  NetworkConfig c;
  c.w = detail::read_w(r);
  c.eta_star = r.num("eta_star", 1.0);
  if (!(c.eta_star > 0.0)) throw std::invalid_argument("config: eta_star must be > 0");
  c.delta = r.required_num("delta");
  if (!(c.delta > 0.0)) throw std::invalid_argument("config: delta must be > 0");
  c.t_ia = r.required_num("t_ia");
  if (!(c.t_ia > 0.0)) throw std::invalid_argument("config: t_ia must be > 0");
  c.slice_t_ib = r.required_num("slice_t_ib");
  if (!(c.slice_t_ib > 0.0)) {
    throw std::invalid_argument("config: slice_t_ib must be > 0");
  }
  c.slice_count = r.integer("slice_count", 1);
  if (c.slice_count < 1) {
    throw std::invalid_argument("config: slice_count must be >= 1");
  }
  c.slice_factor = r.num("slice_factor", 2.0);
  if (!(c.slice_factor > 1.0)) {
    throw std::invalid_argument("config: slice_factor must be > 1");
  }
  c.lattice_spacing = r.required_num("lattice_spacing");
  if (!(c.lattice_spacing > 0.0)) {
    throw std::invalid_argument("config: lattice_spacing must be > 0");
  }
  c.policy = parse_receiver_policy(
      r.str("receiver_policy", "fixed-comoving-duration"));
  c.lambda_a = r.num("lambda_a", 1.0);
  c.lambda_b = r.num("lambda_b", 1.0);
  detail::read_states(r, c.state_a, c.state_b);
  c.output_path = r.str("output", "-");
  c.format = detail::read_format(r);
  r.reject_unknown();
  return c;
}

void write_network_csv(std::ostream& out, const std::vector<NetworkResult>& rows) {
  out << "slice_t_ib,eta_ib,contact_radius,receiver_count,per_receiver_capacity,"
         "total_bits\n";
  for (const NetworkResult& r : rows) {
    out << fmt17(r.slice_t_ib) << ',' << fmt17(r.eta_ib) << ','
        << fmt17(r.contact_radius) << ',' << r.receiver_count << ','
        << fmt17(r.per_receiver_capacity) << ',' << fmt17(r.total_bits) << '\n';
  }
}

void write_network_json(std::ostream& out, const std::vector<NetworkResult>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const NetworkResult& r : rows) {
    arr.push_back({{"slice_t_ib", r.slice_t_ib},
                   {"eta_ib", r.eta_ib},
                   {"contact_radius", r.contact_radius},
                   {"receiver_count", r.receiver_count},
                   {"per_receiver_capacity", r.per_receiver_capacity},
                   {"total_bits", r.total_bits}});
  }
  out << arr.dump(2) << '\n';
}

}  // namespace huygens
