// Internal helpers shared by the sweep and network config readers.
#ifndef HUYGENS_SRC_CONFIG_DETAIL_HPP_
#define HUYGENS_SRC_CONFIG_DETAIL_HPP_

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "huygens/cosmology.hpp"
#include "huygens/detector.hpp"
#include "huygens/sweep.hpp"

namespace huygens::detail {

inline double to_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key + "' is not a number: '" +
                                value + "'");
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config: key '" + key + "' has trailing junk: '" +
                                value + "'");
  }
  return v;
}

inline int to_int(const std::string& key, const std::string& value) {
  const double v = to_double(key, value);
  if (v != std::floor(v)) {
    throw std::invalid_argument("config: key '" + key + "' must be an integer");
  }
  return static_cast<int>(v);
}

// Tracks which keys were consulted so the reader can reject typos.
class KeyReader {
 public:
  explicit KeyReader(const KeyValueMap& kv) : kv_(kv) {}

  bool has(const std::string& key) {
    seen_.insert(key);
    return kv_.count(key) > 0;
  }
  std::string str(const std::string& key, const std::string& fallback = "") {
    seen_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
  }
  double num(const std::string& key, double fallback) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : to_double(key, it->second);
  }
  double required_num(const std::string& key) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) {
      throw std::invalid_argument("config: missing required key '" + key + "'");
    }
    return to_double(key, it->second);
  }
  int integer(const std::string& key, int fallback) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : to_int(key, it->second);
  }
  void reject_unknown() const {
    for (const auto& [key, value] : kv_) {
      if (!seen_.count(key)) {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    }
  }

 private:
  const KeyValueMap& kv_;
  std::set<std::string> seen_;
};

QubitAmplitudes read_state(KeyReader& r, const std::string& prefix,
                           const QubitAmplitudes& fallback);
double read_w(KeyReader& r);
OutputFormat read_format(KeyReader& r);
void read_states(KeyReader& r, QubitAmplitudes& state_a, QubitAmplitudes& state_b);

}  // namespace huygens::detail

#endif  // HUYGENS_SRC_CONFIG_DETAIL_HPP_
