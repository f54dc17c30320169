#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "drt/harness/experiment.hpp"

namespace drt::harness {

/// Ordered key=value settings. Later sources override earlier ones.
using Settings = std::map<std::string, std::string>;

/// Every key accepted in a config file or as a CLI override.
const std::vector<std::string>& setting_keys();

/// Parses "key = value" lines; '#' starts a comment, blank lines are
/// skipped. Throws ConfigError on malformed lines or unknown keys.
Settings parse_settings(std::string_view text);
/// Throws IoError when unreadable.
Settings load_settings(const std::filesystem::path& path);

/// Applies one setting; throws ConfigError naming the key on a bad value.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);
/// Defaults, then each settings map in order.
ExperimentConfig build_config(const std::vector<Settings>& layers);

}  // namespace drt::harness
