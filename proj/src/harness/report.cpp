#include "drt/harness/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "drt/errors.hpp"
#include "drt/hex.hpp"
#include "json.hpp"

namespace drt::harness {

namespace {

using json = nlohmann::ordered_json;

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

json summary_json(const SummaryRow& r) {
  return json{{"A", r.a}, {"B", r.b}, {"B1", r.b1}, {"B2", r.b2}, {"B3", r.b3}};
}

std::string methods_text(const std::vector<int>& methods) {
  std::string s;
  for (int m : methods) s += (s.empty() ? "" : ",") + std::to_string(m);
  return s;
}

std::string tests_text(const std::vector<sts::TestId>& tests) {
  std::string s;
  for (auto id : tests) s += (s.empty() ? "" : ",") + std::string(sts::abbreviation(id));
  return s;
}

json config_json(const ExperimentConfig& c) {
  const auto& s = c.suite;
  json tests = json::array();
  for (auto id : s.tests) tests.push_back(std::string(sts::abbreviation(id)));
  return json{{"stream_bytes", c.stream_bytes},
              {"sequence_length", s.sequence_length},
              {"sequences_per_case", sts::sequence_count(static_cast<std::size_t>(c.stream_bytes * 8), s)},
              {"max_sequences", s.max_sequences},
              {"alpha", s.alpha},
              {"uniformity_threshold", s.uniformity_threshold},
              {"block_frequency_m", s.block_frequency_m},
              {"non_overlapping_m", s.non_overlapping_m},
              {"overlapping_m", s.overlapping_m},
              {"serial_m", s.serial_m},
              {"approximate_entropy_m", s.approximate_entropy_m},
              {"linear_complexity_m", s.linear_complexity_m},
              {"universal_l", s.universal_l},
              {"tests", tests},
              {"methods", c.methods}};
}

std::string byte_hex(std::uint8_t b) { return "0x" + to_hex_bytes(std::span(&b, 1)); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

ReportFormat parse_format(const std::string& text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "md" || text == "markdown") return ReportFormat::Markdown;
  if (text == "csv") return ReportFormat::Csv;
  throw ParameterError("unknown format '" + text + "' (json, md, csv)");
}

std::string render_json(const ExperimentResult& result, const VariantReport& variant) {
  json methods = json::array();
  for (const auto& m : variant.methods) {
    json cases = json::array();
    for (const auto& c : m.cases) {
      json faults = json::array();
      for (const auto& [id, count] : c.record.faults) faults.push_back({{"test", sts::abbreviation(id)}, {"count", count}});
      json jc{{"index", c.test_case.index},
              {"key_hex", to_hex_bytes(c.test_case.kiv.key)},
              {"iv_hex", to_hex_bytes(c.test_case.kiv.iv)},
              {"faults", faults},
              {"fault_total", c.record.fault_total},
              {"cell", c.complete ? cell_text(c.record, result.config.suite) : "?"},
              {"sequences", c.sequences}};
      if (!c.complete) {
        jc["complete"] = false;
        jc["error"] = c.error;
      }
      cases.push_back(std::move(jc));
    }
    const bool done = std::all_of(m.cases.begin(), m.cases.end(), [](const auto& c) { return c.complete; });
    methods.push_back({{"method", m.method}, {"cases", cases}, {"summary", done ? summary_json(m.summary) : json()}});
  }
  json doc{{"cipher", ciphers::cipher_name(variant.cipher)},
           {"variant", variant.variant},
           {"config", config_json(result.config)},
           {"methods", methods},
           {"totals", summary_json(variant.total)},
           {"ratios", {{"B1/B", ratio_text(b1_ratio_percent(variant.total))}}},
           {"complete", variant.complete()}};
  return doc.dump(2) + "\n";
}

std::string render_summary(const ExperimentResult& result) {
  std::ostringstream out;
  out << ciphers::cipher_name(result.config.cipher) << "\n";
  out << std::left << std::setw(10) << "";
  for (const auto& v : result.variants) {
    out << std::setw(36) << ("Using " + upper(v.variant));
  }
  out << "\n" << std::setw(10) << "";
  for (std::size_t i = 0; i < result.variants.size(); ++i) {
    out << std::setw(9) << "A/B" << std::setw(9) << "B1" << std::setw(9) << "B2" << std::setw(9) << "B3";
  }
  out << "\n";
  auto row = [&](const std::string& label, auto pick) {
    out << std::setw(10) << label;
    for (const auto& v : result.variants) {
      const auto [r, ok] = pick(v);
      if (ok) {
        out << std::setw(9) << a_over_b(r) << std::setw(9) << r.b1 << std::setw(9) << r.b2 << std::setw(9) << r.b3;
      } else {
        out << std::setw(36) << "incomplete";
      }
    }
    out << "\n";
  };
  for (std::size_t mi = 0; mi < result.config.methods.size(); ++mi) {
    row("method-" + std::to_string(result.config.methods[mi]), [&](const VariantReport& v) {
      const auto& m = v.methods[mi];
      const bool ok = std::all_of(m.cases.begin(), m.cases.end(), [](const auto& c) { return c.complete; });
      return std::pair{m.summary, ok};
    });
  }
  row("Total", [](const VariantReport& v) { return std::pair{v.total, v.complete()}; });
  out << std::setw(10) << "B1/B";
  for (const auto& v : result.variants) out << std::setw(36) << ratio_text(b1_ratio_percent(v.total));
  out << "\n";
  std::string s = out.str();
  // trim trailing spaces per line
  std::string trimmed;
  std::istringstream lines(s);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + "\n";
  }
  return trimmed;
}

std::string render_markdown(const ExperimentResult& result) {
  const auto& cfg = result.config;
  std::ostringstream out;
  out << "# " << ciphers::cipher_name(cfg.cipher) << " keystream quality\n\n";
  out << "Stream " << cfg.stream_bytes << " bytes per case, L = " << cfg.suite.sequence_length << " bits, S = "
      << sts::sequence_count(static_cast<std::size_t>(cfg.stream_bytes * 8), cfg.suite) << ", alpha = "
      << cfg.suite.alpha << ".\n\n";

  out << "## Summary\n\n|  |";
  for (const auto& v : result.variants) out << " " << upper(v.variant) << " A/B | B1 | B2 | B3 |";
  out << "\n|---|";
  for (std::size_t i = 0; i < result.variants.size(); ++i) out << "---|---|---|---|";
  out << "\n";
  auto cells = [](const SummaryRow& r, bool ok) {
    if (!ok) return std::string(" incomplete | | | |");
    return " " + a_over_b(r) + " | " + std::to_string(r.b1) + " | " + std::to_string(r.b2) + " | " +
           std::to_string(r.b3) + " |";
  };
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    out << "| method-" << cfg.methods[mi] << " |";
    for (const auto& v : result.variants) {
      const auto& m = v.methods[mi];
      const bool ok = std::all_of(m.cases.begin(), m.cases.end(), [](const auto& c) { return c.complete; });
      out << cells(m.summary, ok);
    }
    out << "\n";
  }
  out << "| Total |";
  for (const auto& v : result.variants) out << cells(v.total, v.complete());
  out << "\n\n| | A | B1/B |\n|---|---|---|\n";
  for (const auto& v : result.variants) {
    out << "| " << upper(v.variant) << " | " << v.total.a << " | " << ratio_text(b1_ratio_percent(v.total)) << " |\n";
  }

  auto cell = [&](const CaseResult& c) { return c.complete ? cell_text(c.record, cfg.suite) : std::string("?"); };
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    const int method = cfg.methods[mi];
    out << "\n## Method " << method << "\n\n";
    const auto& first = result.variants.front().methods[mi].cases;
    if (method == 5) {
      out << "| Series |";
      for (const auto& v : result.variants) out << " " << upper(v.variant) << " |";
      out << "\n|---|";
      for (std::size_t i = 0; i < result.variants.size(); ++i) out << "---|";
      out << "\n";
      for (std::size_t ci = 0; ci < first.size(); ++ci) {
        out << "| " << ci + 1 << " |";
        for (const auto& v : result.variants) out << " " << cell(v.methods[mi].cases[ci]) << " |";
        out << "\n";
      }
      continue;
    }
    const auto pos = positions(cfg.cipher);
    const bool keyed = method <= 2;
    const std::uint8_t fill = method == 2 || method == 4 ? 0xFF : 0x00;
    out << (keyed ? "| Key[u] | IV[v] |" : "| IV[v] |");
    for (const auto& [u, v] : pos) {
      for (const auto& var : result.variants) {
        out << " " << (keyed ? "u=" + std::to_string(u) + ", " : std::string()) << "v=" << v << " " << upper(var.variant)
            << " |";
      }
    }
    out << "\n|" << (keyed ? "---|---|" : "---|");
    for (std::size_t i = 0; i < pos.size() * result.variants.size(); ++i) out << "---|";
    out << "\n";
    for (unsigned k = 0; k < 8; ++k) {
      out << "|";
      if (keyed) out << " " << byte_hex(static_cast<std::uint8_t>(kKeyPattern[k] ^ fill)) << " |";
      out << " " << byte_hex(static_cast<std::uint8_t>(kIvPattern[k] ^ fill)) << " |";
      for (std::size_t p = 0; p < pos.size(); ++p) {
        for (const auto& v : result.variants) out << " " << cell(v.methods[mi].cases[p * 8 + k]) << " |";
      }
      out << "\n";
    }
    const std::string other = fill == 0 ? "0x00" : "0xff";
    out << "\nOther key bytes " << (keyed ? other : fill == 0 ? std::string("0x00 (whole key)") : std::string("0xff (whole key)"))
        << ", other iv bytes " << other << ".\n";
  }
  return out.str();
}

std::string render_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "cipher,variant,method,index,u,v,key_hex,iv_hex,fault_total,cell,complete\n";
  for (const auto& v : result.variants) {
    for (const auto& m : v.methods) {
      for (const auto& c : m.cases) {
        const auto& t = c.test_case;
        out << ciphers::cipher_name(v.cipher) << ',' << v.variant << ',' << m.method << ',' << t.index << ','
            << (t.u ? std::to_string(*t.u) : "") << ',' << (t.v ? std::to_string(*t.v) : "") << ','
            << to_hex_bytes(t.kiv.key) << ',' << to_hex_bytes(t.kiv.iv) << ',' << c.record.fault_total << ','
            << csv_field(c.complete ? cell_text(c.record, result.config.suite) : "?") << ','
            << (c.complete ? "true" : "false") << "\n";
      }
    }
  }
  return out.str();
}

std::string render_manifest(const ExperimentResult& result) {
  json cases = json::array();
  for (const auto& v : result.variants) {
    for (const auto& m : v.methods) {
      for (const auto& c : m.cases) {
        json jc{{"variant", v.variant}, {"method", m.method}, {"index", c.test_case.index}, {"id", c.test_case.id()},
                {"status", c.complete ? "complete" : "incomplete"}};
        if (!c.complete) jc["error"] = c.error;
        cases.push_back(std::move(jc));
      }
    }
  }
  return json{{"complete", result.complete()}, {"cases", cases}}.dump(2) + "\n";
}

std::string render_config(const ExperimentConfig& c) {
  std::ostringstream out;
  std::string variants;
  for (const auto& v : c.variants) variants += (variants.empty() ? "" : ",") + v;
  const auto& s = c.suite;
  out << "cipher = " << ciphers::cipher_name(c.cipher) << "\n"
      << "variant = " << (variants == "rot,drt" ? "both" : variants) << "\n"
      << "methods = " << methods_text(c.methods) << "\n"
      << "length = " << c.stream_bytes << "\n"
      << "sequence_length = " << s.sequence_length << "\n"
      << "max_sequences = " << s.max_sequences << "\n"
      << "alpha = " << s.alpha << "\n"
      << "uniformity_threshold = " << s.uniformity_threshold << "\n"
      << "block_frequency_m = " << s.block_frequency_m << "\n"
      << "non_overlapping_m = " << s.non_overlapping_m << "\n"
      << "overlapping_m = " << s.overlapping_m << "\n"
      << "serial_m = " << s.serial_m << "\n"
      << "approximate_entropy_m = " << s.approximate_entropy_m << "\n"
      << "linear_complexity_m = " << s.linear_complexity_m << "\n"
      << "universal_l = " << s.universal_l << "\n"
      << "tests = " << tests_text(s.tests) << "\n";
  return out.str();
}

}  // namespace drt::harness
