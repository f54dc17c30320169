#include "drt/harness/settings.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "drt/errors.hpp"

namespace drt::harness {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

unsigned long long to_number(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value[0] == '-') throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
  return v;
}

unsigned to_unsigned(const std::string& key, const std::string& value) {
  const auto v = to_number(key, value);
  if (v > 0xFFFFFFFFULL) throw ConfigError(key + ": value too large");
  return static_cast<unsigned>(v);
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw ConfigError(key + ": expected a number, got '" + value + "'");
  return v;
}

}  // namespace

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = {
      "cipher",          "variant",           "methods",        "length",   "sequence_length",
      "max_sequences",   "alpha",             "uniformity_threshold",       "block_frequency_m",
      "non_overlapping_m", "overlapping_m",   "serial_m",       "approximate_entropy_m",
      "linear_complexity_m", "universal_l",   "tests",          "jobs",     "fixtures"};
  return keys;
}

Settings parse_settings(std::string_view text) {
  Settings out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (unsigned n = 1; std::getline(in, line); ++n) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(n) + ": expected key = value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    const auto& keys = setting_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("line " + std::to_string(n) + ": unknown key '" + key + "'");
    }
    out[key] = value;
  }
  return out;
}

Settings load_settings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_settings(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& value) {
  try {
    if (key == "cipher") {
      c.cipher = ciphers::parse_cipher(value);
    } else if (key == "variant") {
      if (value == "both") c.variants = {"rot", "drt"};
      else if (value == "rot" || value == "drt") c.variants = {value};
      else throw ConfigError("variant: expected rot, drt or both, got '" + value + "'");
    } else if (key == "methods") {
      c.methods = parse_methods(value);
    } else if (key == "length") {
      c.stream_bytes = parse_size(value);
    } else if (key == "sequence_length") {
      c.suite.sequence_length = static_cast<std::size_t>(to_number(key, value));
    } else if (key == "max_sequences") {
      c.suite.max_sequences = static_cast<std::size_t>(to_number(key, value));
    } else if (key == "alpha") {
      c.suite.alpha = to_double(key, value);
    } else if (key == "uniformity_threshold") {
      c.suite.uniformity_threshold = to_double(key, value);
    } else if (key == "block_frequency_m") {
      c.suite.block_frequency_m = to_unsigned(key, value);
    } else if (key == "non_overlapping_m") {
      c.suite.non_overlapping_m = to_unsigned(key, value);
    } else if (key == "overlapping_m") {
      c.suite.overlapping_m = to_unsigned(key, value);
    } else if (key == "serial_m") {
      c.suite.serial_m = to_unsigned(key, value);
    } else if (key == "approximate_entropy_m") {
      c.suite.approximate_entropy_m = to_unsigned(key, value);
    } else if (key == "linear_complexity_m") {
      c.suite.linear_complexity_m = to_unsigned(key, value);
    } else if (key == "universal_l") {
      c.suite.universal_l = to_unsigned(key, value);
    } else if (key == "tests") {
      c.suite.tests.clear();
      std::stringstream ss(value);
      for (std::string part; std::getline(ss, part, ',');) {
        part = trim(part);
        if (part == "all") c.suite.tests.assign(sts::kAllTests.begin(), sts::kAllTests.end());
        else c.suite.tests.push_back(sts::parse_test_id(part));
      }
    } else if (key == "jobs") {
      c.jobs = to_unsigned(key, value);
      if (c.jobs == 0) throw ConfigError("jobs must be at least 1");
    } else if (key == "fixtures") {
      c.fixtures = value;
    } else {
      throw ConfigError("unknown setting '" + key + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

ExperimentConfig build_config(const std::vector<Settings>& layers) {
  Settings merged;
  for (const auto& layer : layers) {
    for (const auto& [k, v] : layer) merged[k] = v;
  }
  ExperimentConfig c;
  for (const auto& [k, v] : merged) apply_setting(c, k, v);
  c.suite.validate();
  return c;
}

}  // namespace drt::harness
