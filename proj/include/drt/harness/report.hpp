#pragma once

#include <string>

#include "drt/harness/experiment.hpp"

namespace drt::harness {

enum class ReportFormat { Json, Markdown, Csv };

/// "json", "md"/"markdown", "csv". Throws ParameterError.
ReportFormat parse_format(const std::string& text);

/// {cipher, variant, config, methods, totals, ratios} for one variant.
std::string render_json(const ExperimentResult& result, const VariantReport& variant);
/// Summary table and A, B1/B per variant, followed by per-method case grids,
/// one grid per method, all variants side by side.
std::string render_markdown(const ExperimentResult& result);
/// One row per case.
std::string render_csv(const ExperimentResult& result);
/// Plain-text A/B, B1, B2, B3 table for the terminal.
std::string render_summary(const ExperimentResult& result);
/// Lists every case with its completion status and error, if any.
std::string render_manifest(const ExperimentResult& result);
/// The effective configuration as key=value lines (config file syntax).
std::string render_config(const ExperimentConfig& config);

}  // namespace drt::harness
