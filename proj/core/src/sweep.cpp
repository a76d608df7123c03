#include "huygens/sweep.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "config_detail.hpp"
#include "huygens/oracle.hpp"
#include "huygens/signalling.hpp"

namespace huygens {

std::vector<double> make_grid(const GridSpec& grid) {
  if (grid.points < 1) throw std::invalid_argument("grid: points must be >= 1");
  if (grid.points == 1) {
    if (!(grid.min <= grid.max)) throw std::invalid_argument("grid: min must be <= max");
    return {grid.min};
  }
  if (!(grid.min < grid.max)) throw std::invalid_argument("grid: min must be < max");
  std::vector<double> values(static_cast<std::size_t>(grid.points));
  if (grid.log_spacing) {
    if (!(grid.min > 0.0)) throw std::invalid_argument("grid: log spacing requires min > 0");
    const double l0 = std::log(grid.min);
    const double l1 = std::log(grid.max);
    for (int i = 0; i < grid.points; ++i) {
      values[static_cast<std::size_t>(i)] =
          std::exp(l0 + (l1 - l0) * i / (grid.points - 1));
    }
  } else {
    for (int i = 0; i < grid.points; ++i) {
      values[static_cast<std::size_t>(i)] =
          grid.min + (grid.max - grid.min) * i / (grid.points - 1);
    }
  }
  values.front() = grid.min;
  values.back() = grid.max;
  return values;
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Builds Bob's conformal window for a given switch-on time under the
// configured duration policy; the reference window anchors the two
// conformal policies.
struct BWindowBuilder {
  const CosmologyParams& params;
  double delta;
  ReceiverPolicy policy;
  double ref_len = 0.0;
  double ref_ratio = 0.0;

  BWindowBuilder(const CosmologyParams& p, double d, ReceiverPolicy pol,
                 double ref_t_ib)
      : params(p), delta(d), policy(pol) {
    const double i = conformal_from_comoving(ref_t_ib, p);
    const double f = conformal_from_comoving(ref_t_ib + d, p);
    ref_len = f - i;
    ref_ratio = f / i;
  }

  ConformalWindow window(double t_ib) const {
    const double eta_i = conformal_from_comoving(t_ib, params);
    switch (policy) {
      case ReceiverPolicy::kFixedComovingDuration:
        return {eta_i, conformal_from_comoving(t_ib + delta, params)};
      case ReceiverPolicy::kFixedConformalDuration:
        return {eta_i, eta_i + ref_len};
      case ReceiverPolicy::kFixedConformalRatio:
        return {eta_i, eta_i * ref_ratio};
    }
    throw std::logic_error("unreachable receiver policy");
  }
};

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  const CosmologyParams params = CosmologyParams::from_w(config.w, config.eta_star);
  const bool matter = std::abs(params.alpha() - 1.5) <= 1e-12;
  const std::vector<double> grid = make_grid(config.grid);

  SweepResult result;
  result.varied_name = config.vary == SweepVariable::kR ? "R" : "T_iB";

  const ConformalWindow window_a{
      conformal_from_comoving(config.t_ia, params),
      conformal_from_comoving(config.t_ia + config.delta, params)};

  const double ref_t_ib =
      config.vary == SweepVariable::kTiB ? grid.front() : config.fixed_value;
  const BWindowBuilder b_builder(params, config.delta, config.policy, ref_t_ib);

  const double lam2 =
      config.lambda_a * config.lambda_a * config.lambda_b * config.lambda_b;
  const double mod_b =
      std::abs(config.state_b.excited) * std::abs(config.state_b.ground);

  result.rows.reserve(grid.size());
  for (const double value : grid) {
    SweepRow row;
    row.varied_value = value;
    const double R = config.vary == SweepVariable::kR ? value : config.fixed_value;
    const double t_ib = config.vary == SweepVariable::kTiB ? value : config.fixed_value;
    try {
      const ConformalWindow window_b = b_builder.window(t_ib);
      if (matter) {
        const SignalBreakdown b =
            s2_breakdown_windows(config.state_a, config.state_b, window_a,
                                 window_b, R, config.lambda_a, config.lambda_b);
        row.case_label = label(b.case_label);
        row.s_delta = b.s_delta;
        row.s_theta = b.s_theta;
        row.s2 = b.s2;
        row.capacity = b.capacity;
        row.capacity_delta_only = b.capacity_delta_only;
      } else {
        const OracleReport r = s2_oracle_mode_sum_windows(
            config.state_a, config.state_b, window_a, window_b, R,
            params.alpha(), config.mode_sum_tol);
        row.case_label = label(classify_case(window_a, window_b, R));
        row.s_delta = r.s_delta_numeric;
        row.s_theta = r.s_theta_numeric;
        row.s2 = r.s2_numeric;
        const double denom = 4.0 * mod_b;
        row.capacity = lam2 * (2.0 / std::log(2.0)) * (row.s2 / denom) *
                       (row.s2 / denom);
        const double s2_delta = re_alpha_beta(config.state_a) *
                                im_alpha_beta(config.state_b) / M_PI *
                                row.s_delta;
        row.capacity_delta_only =
            lam2 * (2.0 / std::log(2.0)) * (s2_delta / denom) * (s2_delta / denom);
      }
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      row.s_delta = row.s_theta = row.s2 = kNan;
      row.capacity = row.capacity_delta_only = kNan;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
  out << "varied_name,varied_value,case,s_delta,s_theta,s2,capacity,"
         "capacity_delta_only\n";
  for (const SweepRow& row : result.rows) {
    out << result.varied_name << ',' << fmt17(row.varied_value) << ','
        << row.case_label << ',' << fmt17(row.s_delta) << ','
        << fmt17(row.s_theta) << ',' << fmt17(row.s2) << ','
        << fmt17(row.capacity) << ',' << fmt17(row.capacity_delta_only) << '\n';
  }
}

void write_json(std::ostream& out, const SweepResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& row : result.rows) {
    rows.push_back({{"varied_name", result.varied_name},
                    {"varied_value", row.varied_value},
                    {"case", row.case_label},
                    {"s_delta", row.s_delta},
                    {"s_theta", row.s_theta},
                    {"s2", row.s2},
                    {"capacity", row.capacity},
                    {"capacity_delta_only", row.capacity_delta_only}});
  }
  out << rows.dump(2) << '\n';
}

KeyValueMap parse_key_values(std::istream& in) {
  KeyValueMap kv;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    if (!kv.emplace(key, value).second) {
      throw std::invalid_argument("config: duplicate key '" + key + "'");
    }
  }
  return kv;
}

namespace detail {

QubitAmplitudes read_state(KeyReader& r, const std::string& prefix,
                           const QubitAmplitudes& fallback) {
  QubitAmplitudes s = fallback;
  s.excited = {r.num(prefix + "_excited_re", s.excited.real()),
               r.num(prefix + "_excited_im", s.excited.imag())};
  s.ground = {r.num(prefix + "_ground_re", s.ground.real()),
              r.num(prefix + "_ground_im", s.ground.imag())};
  const double norm = std::norm(s.excited) + std::norm(s.ground);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("config: state '" + prefix +
                                "' is not normalized (|a|^2+|b|^2 = " +
                                std::to_string(norm) + ")");
  }
  return s;
}

double read_w(KeyReader& r) {
  const bool has_w = r.has("w");
  const bool has_alpha = r.has("alpha");
  if (has_w && has_alpha) {
    throw std::invalid_argument("config: specify either 'w' or 'alpha', not both");
  }
  if (has_alpha) return w_from_alpha(r.required_num("alpha"));
  return r.num("w", 0.0);
}

OutputFormat read_format(KeyReader& r) {
  const std::string f = r.str("format", "csv");
  if (f == "csv") return OutputFormat::kCsv;
  if (f == "json") return OutputFormat::kJson;
  throw std::invalid_argument("config: format must be 'csv' or 'json', got '" + f + "'");
}

void read_states(KeyReader& r, QubitAmplitudes& state_a, QubitAmplitudes& state_b) {
  const std::string states = r.str("states", "optimal");
  if (states == "optimal") {
    const auto [a, b] = optimal_detector_states();
    state_a = a;
    state_b = b;
  } else if (states == "custom") {
    state_a = read_state(r, "state_a", QubitAmplitudes{});
    state_b = read_state(r, "state_b", QubitAmplitudes{});
  } else {
    throw std::invalid_argument("config: states must be 'optimal' or 'custom'");
  }
}

}  // namespace detail

ReceiverPolicy parse_receiver_policy(const std::string& name) {
  if (name == "fixed-comoving-duration") return ReceiverPolicy::kFixedComovingDuration;
  if (name == "fixed-conformal-duration") return ReceiverPolicy::kFixedConformalDuration;
  if (name == "fixed-conformal-ratio") return ReceiverPolicy::kFixedConformalRatio;
  throw std::invalid_argument("unknown receiver policy '" + name + "'");
}

SweepConfig sweep_config_from_keys(const KeyValueMap& kv) {
  detail::KeyReader r(kv);
  SweepConfig c;
  c.w = detail::read_w(r);
  c.eta_star = r.num("eta_star", 1.0);
  if (!(c.eta_star > 0.0)) throw std::invalid_argument("config: eta_star must be > 0");
  c.delta = r.required_num("delta");
  if (!(c.delta > 0.0)) throw std::invalid_argument("config: delta must be > 0");
  c.t_ia = r.required_num("t_ia");
  if (!(c.t_ia > 0.0)) throw std::invalid_argument("config: t_ia must be > 0");

  const std::string vary = r.str("vary", "R");
  if (vary == "R") {
    c.vary = SweepVariable::kR;
    c.fixed_value = r.required_num("t_ib");
  } else if (vary == "T_iB") {
    c.vary = SweepVariable::kTiB;
    c.fixed_value = r.required_num("R");
  } else {
    throw std::invalid_argument("config: vary must be 'R' or 'T_iB', got '" + vary + "'");
  }
  if (!(c.fixed_value > 0.0)) {
    throw std::invalid_argument("config: the fixed sweep parameter must be > 0");
  }

  c.grid.min = r.required_num("grid_min");
  c.grid.max = r.required_num("grid_max");
  c.grid.points = r.integer("grid_points", 0);
  if (c.grid.points < 1) {
    throw std::invalid_argument("config: grid_points must be >= 1");
  }
  const std::string spacing = r.str("grid_spacing", "linear");
  if (spacing == "linear") {
    c.grid.log_spacing = false;
  } else if (spacing == "log") {
    c.grid.log_spacing = true;
  } else {
    throw std::invalid_argument("config: grid_spacing must be 'linear' or 'log'");
  }

  c.policy = parse_receiver_policy(
      r.str("receiver_policy", "fixed-comoving-duration"));
  c.lambda_a = r.num("lambda_a", 1.0);
  c.lambda_b = r.num("lambda_b", 1.0);
  detail::read_states(r, c.state_a, c.state_b);

  c.output_path = r.str("output", "-");
  c.format = detail::read_format(r);
  c.mode_sum_tol = r.num("mode_sum_tol", 1e-3);
  if (!(c.mode_sum_tol > 0.0)) {
    throw std::invalid_argument("config: mode_sum_tol must be > 0");
  }
  r.reject_unknown();

  // surface grid errors at parse time rather than mid-run
  make_grid(c.grid);
  return c;
}

}  // namespace huygens
