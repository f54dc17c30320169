#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "drt/ciphers/keystream.hpp"
#include "drt/ciphers/self_test.hpp"
#include "drt/core/analysis.hpp"
#include "drt/errors.hpp"
#include "drt/harness/report.hpp"
#include "drt/harness/settings.hpp"
#include "drt/hex.hpp"
#include "drt/sts/classify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kOther = 1, kUsage = 2, kConstraint = 3, kIo = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MapOptions {
  unsigned width = 32;
  std::string drt;
  std::string rot;
  bool unchecked = false;
};

void add_map_options(CLI::App* cmd, MapOptions& o, bool width_flag = true) {
  if (width_flag) cmd->add_option("--width", o.width, "Word width n: 8, 16, 32 or 64")->capture_default_str();
  auto* d = cmd->add_option("--drt", o.drt, "DRT shift pair 'a,b'");
  auto* r = cmd->add_option("--rot", o.rot, "ROT left rotation amount c");
  d->excludes(r);
}

drt::MapDescriptor make_map(const MapOptions& o, unsigned width) {
  const auto spec = drt::WordSpec::from_width(width);
  if (o.drt.empty() == o.rot.empty()) throw UsageError("give exactly one of --drt a,b or --rot c");
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("expected a number, got '" + s + "'");
    return static_cast<unsigned>(v);
  };
  if (!o.rot.empty()) return drt::MapDescriptor::rot(number(o.rot), spec);
  const auto comma = o.drt.find(',');
  if (comma == std::string::npos) throw UsageError("--drt expects 'a,b', got '" + o.drt + "'");
  const unsigned a = number(o.drt.substr(0, comma)), b = number(o.drt.substr(comma + 1));
  const auto pair = o.unchecked ? drt::ShiftPair::unchecked(a, b) : drt::ShiftPair::make(a, b, spec);
  return drt::MapDescriptor::drt(pair, spec);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw drt::IoError("cannot write " + path.string());
  out << text;
  if (!out) throw drt::IoError("write failed for " + path.string());
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- op
int cmd_op(const MapOptions& o, const std::string& input, bool inverse) {
  const auto map = make_map(o, o.width);
  const auto spec = map.spec();
  const drt::Word x = drt::parse_hex_word(input, spec);
  const drt::Word y = inverse ? drt::LinearInverse(map)(x) : map.apply(x);
  std::cout << drt::to_hex(y, spec) << "\n";
  return kOk;
}

// ---- analyze
int cmd_analyze(const MapOptions& o) {
  const auto map = make_map(o, o.width);
  const auto spec = map.spec();
  const auto report = drt::is_bijective(map);
  const auto profile = drt::dispersion_profile(map);
  json kernel = json::array();
  for (auto w : drt::kernel_basis(map)) kernel.push_back(drt::to_hex(w, spec));
  std::map<unsigned, unsigned> histogram;
  for (unsigned w : profile.avalanche) ++histogram[w];
  json hist = json::object();
  for (const auto& [weight, count] : histogram) hist[std::to_string(weight)] = count;
  json doc{{"map", map.name()},
           {"width", spec.n()},
           {"left_shift", map.left_shift()},
           {"right_shift", map.right_shift()},
           {"bijective", report.bijective},
           {"rank", report.rank},
           {"kernel_dimension", report.kernel_dimension},
           {"kernel_basis", kernel},
           {"exhaustive", report.exhaustive ? json(*report.exhaustive) : json()},
           {"dependency_count", profile.dependency_count},
           {"single_dependency_inputs", profile.single_dependency_inputs},
           {"preserved_pair_count", profile.preserved_pair_count},
           {"avalanche", profile.avalanche},
           {"avalanche_histogram", hist}};
  std::cout << doc.dump(2) << "\n";
  return kOk;
}

// ---- graph
int cmd_graph(const MapOptions& o, unsigned m, const std::string& format) {
  if (m < drt::WordSpec::kMinExponent || m > 4) throw drt::SizeLimitError("graph supports m = 3 or 4 (n <= 16)");
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  const auto map = make_map(o, 1u << m);
  const auto points = drt::graph_points(map);
  if (format == "csv") {
    std::string out = "x,y\n";
    for (const auto& [x, y] : points) out += std::to_string(x) + "," + std::to_string(y) + "\n";
    std::cout << out;
  } else {
    json pts = json::array();
    for (const auto& [x, y] : points) pts.push_back({x, y});
    std::cout << json{{"map", map.name()}, {"m", m}, {"points", pts}}.dump() << "\n";
  }
  return kOk;
}

// ---- keystream
struct KeystreamOptions {
  std::string cipher;
  std::string variant = "rot";
  std::string key;
  std::string iv;
  std::string length = "1KiB";
  std::string out = "-";
  bool hex = false;
};

int cmd_keystream(const KeystreamOptions& o) {
  const auto id = drt::ciphers::parse_cipher(o.cipher);
  drt::ciphers::KeyIv kiv;
  kiv.key = o.key.empty() ? std::vector<std::uint8_t>(drt::ciphers::key_length(id), 0) : drt::parse_hex_bytes(o.key);
  kiv.iv = o.iv.empty() ? std::vector<std::uint8_t>(drt::ciphers::iv_length(id), 0) : drt::parse_hex_bytes(o.iv);
  const auto variant = drt::harness::variant_by_tag(id, o.variant);
  auto gen = drt::ciphers::make_generator(variant, kiv);
  std::uint64_t remaining = drt::harness::parse_size(o.length);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (o.out != "-") {
    file.open(o.out, std::ios::binary);
    if (!file) throw drt::IoError("cannot write " + o.out);
    out = &file;
  }
  std::vector<std::uint8_t> buf(1 << 16);
  while (remaining > 0) {
    const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, buf.size()));
    gen->generate(std::span(buf).first(n));
    if (o.hex) {
      for (std::size_t i = 0; i < n; i += 32) {
        *out << drt::to_hex_bytes(std::span(buf).subspan(i, std::min<std::size_t>(32, n - i))) << "\n";
      }
    } else {
      out->write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(n));
    }
    remaining -= n;
  }
  out->flush();
  if (!*out) throw drt::IoError("write failed");
  return kOk;
}

// ---- nist
struct NistOptions {
  std::string input;
  std::string format = "md";
  std::string config;
};

int cmd_nist(const NistOptions& o, const drt::harness::Settings& flags) {
  std::vector<drt::harness::Settings> layers;
  if (!o.config.empty()) layers.push_back(drt::harness::load_settings(o.config));
  layers.push_back(flags);
  const auto config = drt::harness::build_config(layers).suite;

  std::unique_ptr<drt::sts::ByteSource> source;
  std::string data;
  if (o.input == "-") {
    data = read_all(std::cin);
    source = std::make_unique<drt::sts::MemorySource>(
        std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
  } else {
    source = std::make_unique<drt::sts::FileSource>(o.input);
  }
  drt::sts::SequenceReader reader(*source, config.sequence_length);
  drt::sts::SuiteAccumulator acc(config);
  drt::sts::Bits bits;
  while ((config.max_sequences == 0 || acc.sequences() < config.max_sequences) && reader.next(bits)) {
    acc.add(drt::sts::run_suite(bits, config));
  }
  if (acc.sequences() == 0) {
    throw drt::ParameterError("input is shorter than one " + std::to_string(config.sequence_length) + "-bit sequence");
  }
  const auto outcomes = acc.classify();
  const auto record = drt::sts::fault_record(outcomes);
  auto status = [](drt::sts::SubItemStatus s) {
    switch (s) {
      case drt::sts::SubItemStatus::Pass: return "pass";
      case drt::sts::SubItemStatus::Fail: return "fail";
      case drt::sts::SubItemStatus::NotApplicable: return "n/a";
    }
    return "?";
  };

  if (o.format == "json") {
    json tests = json::array();
    for (const auto& t : outcomes) {
      json items = json::array();
      for (const auto& s : t.sub_items) {
        items.push_back({{"label", s.label},
                         {"status", status(s.status)},
                         {"proportion", s.proportion},
                         {"uniformity_p", s.uniformity_p},
                         {"pass_count", s.pass_count},
                         {"sample_size", s.sample_size}});
      }
      tests.push_back({{"test", drt::sts::abbreviation(t.id)}, {"failed", t.failed_count}, {"sub_items", items}});
    }
    json faults = json::array();
    for (const auto& [id, n] : record.faults) faults.push_back({{"test", drt::sts::abbreviation(id)}, {"count", n}});
    std::cout << json{{"sequences", acc.sequences()},
                      {"sequence_length", config.sequence_length},
                      {"alpha", config.alpha},
                      {"tests", tests},
                      {"faults", faults},
                      {"fault_total", record.fault_total},
                      {"cell", drt::harness::cell_text(record, config)}}
                     .dump(2)
              << "\n";
  } else if (o.format == "csv") {
    std::cout << "test,sub_item,status,proportion,uniformity_p,pass_count,sample_size\n";
    for (const auto& t : outcomes) {
      for (const auto& s : t.sub_items) {
        std::cout << drt::sts::abbreviation(t.id) << ',' << s.label << ',' << status(s.status) << ',' << s.proportion
                  << ',' << s.uniformity_p << ',' << s.pass_count << ',' << s.sample_size << "\n";
      }
    }
  } else if (o.format == "md") {
    std::cout << "S = " << acc.sequences() << " sequences of " << config.sequence_length << " bits, alpha = "
              << config.alpha << "\n\n| Test | Sub-items | Failed | Min proportion | Min uniformity p |\n"
              << "|---|---|---|---|---|\n";
    for (const auto& t : outcomes) {
      double min_prop = 1.0, min_u = 1.0;
      std::size_t applicable = 0;
      for (const auto& s : t.sub_items) {
        if (s.status == drt::sts::SubItemStatus::NotApplicable) continue;
        ++applicable;
        min_prop = std::min(min_prop, s.proportion);
        min_u = std::min(min_u, s.uniformity_p);
      }
      std::cout << "| " << drt::sts::abbreviation(t.id) << " | " << t.sub_items.size() << " | " << t.failed_count
                << " | ";
      if (applicable == 0) {
        std::cout << "n/a | n/a |\n";
      } else {
        std::cout << min_prop << " | " << min_u << " |\n";
      }
    }
    std::cout << "\nResult: " << drt::harness::cell_text(record, config) << " (fault total " << record.fault_total
              << ")\n";
  } else {
    throw UsageError("--format must be json, md or csv");
  }
  return kOk;
}

// ---- experiment
struct ExperimentOptions {
  std::string config;
  std::string out = "results";
  std::string formats = "json,md";
  bool quiet = false;
};

int cmd_experiment(const ExperimentOptions& o, const drt::harness::Settings& flags) {
  using namespace drt::harness;
  std::vector<Settings> layers;
  if (!o.config.empty()) layers.push_back(load_settings(o.config));
  layers.push_back(flags);
  const auto config = build_config(layers);

  std::vector<ReportFormat> formats;
  {
    std::stringstream ss(o.formats);
    for (std::string f; std::getline(ss, f, ',');) formats.push_back(parse_format(f));
  }

  const auto start = std::chrono::steady_clock::now();
  std::size_t done = 0;
  const std::size_t total = config.variants.size() * config.methods.size() * kCasesPerMethod;
  const auto result = run_experiment(config, [&](const std::string& variant, const CaseResult& c) {
    ++done;
    if (o.quiet) return;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "[" << done << "/" << total << " " << static_cast<long>(secs) << "s] " << variant << " "
              << c.test_case.id() << " "
              << (c.complete ? cell_text(c.record, config.suite) : "ERROR " + c.error) << "\n";
  });

  fs::create_directories(o.out);
  const std::string stem = std::string(drt::ciphers::cipher_name(config.cipher));
  for (auto f : formats) {
    if (f == ReportFormat::Json) {
      for (const auto& v : result.variants) write_file(fs::path(o.out) / (stem + "_" + v.variant + ".json"), render_json(result, v));
    } else if (f == ReportFormat::Markdown) {
      write_file(fs::path(o.out) / (stem + "_report.md"), render_markdown(result));
    } else {
      write_file(fs::path(o.out) / (stem + "_cases.csv"), render_csv(result));
    }
  }
  write_file(fs::path(o.out) / (stem + "_config.txt"), render_config(config));
  write_file(fs::path(o.out) / (stem + "_manifest.json"), render_manifest(result));
  std::cout << render_summary(result);
  if (!result.complete()) {
    std::cerr << "some cases did not complete; see " << (fs::path(o.out) / (stem + "_manifest.json")).string() << "\n";
    return kOther;
  }
  return kOk;
}

// ---- self-test
int cmd_self_test(const std::string& cipher, const std::string& golden_dir) {
  std::vector<drt::ciphers::CipherId> ids;
  if (cipher.empty() || cipher == "all") ids.assign(std::begin(drt::ciphers::kAllCiphers), std::end(drt::ciphers::kAllCiphers));
  else ids.push_back(drt::ciphers::parse_cipher(cipher));
  const fs::path dir = golden_dir.empty() ? drt::ciphers::default_golden_dir() : fs::path(golden_dir);
  bool ok = true;
  for (auto id : ids) {
    const auto report = drt::ciphers::self_test(id, dir);
    for (const auto& v : report.vectors) {
      std::cout << (v.passed ? "PASS " : "FAIL ") << drt::ciphers::cipher_name(id) << " " << v.name;
      if (!v.passed) {
        std::cout << " (" << v.detail;
        if (v.mismatch_offset) std::cout << ", first mismatch at byte " << *v.mismatch_offset;
        std::cout << ")";
      }
      std::cout << "\n";
    }
    ok = ok && report.passed();
  }
  std::cout << (ok ? "self-test passed" : "self-test FAILED") << "\n";
  return ok ? kOk : kOther;
}

std::string version_text() {
  std::ostringstream ss;
  ss << "drt " << DRT_VERSION << " (" << DRT_BUILD_TYPE << ", " << __VERSION__ << ", C++ " << __cplusplus
     << ", built " << __DATE__ << ")";
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disperse rotation workbench: operator analysis, keystreams, statistical tests and experiments"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);

  MapOptions op_map;
  std::string op_in;
  bool op_inverse = false;
  auto* op = app.add_subcommand("op", "Apply ROT or DRT to one word");
  add_map_options(op, op_map);
  op->add_option("--in", op_in, "Input word in hex")->required();
  op->add_flag("--inverse", op_inverse, "Apply the inverse map instead");

  MapOptions an_map;
  auto* analyze = app.add_subcommand("analyze", "GF(2) analysis of a map as JSON");
  add_map_options(analyze, an_map);
  analyze->add_flag("--unchecked", an_map.unchecked, "Accept DRT pairs that violate a + b = 2^k < n");

  MapOptions gr_map;
  unsigned gr_m = 3;
  std::string gr_format = "csv";
  auto* graph = app.add_subcommand("graph", "All (x, y) points of a map on 2^m-bit words");
  add_map_options(graph, gr_map, false);
  graph->add_option("--m", gr_m, "Width exponent, n = 2^m (3 or 4)")->capture_default_str();
  graph->add_option("--format", gr_format, "csv or json")->capture_default_str();
  graph->add_flag("--unchecked", gr_map.unchecked, "Accept DRT pairs that violate a + b = 2^k < n");

  KeystreamOptions ks;
  auto* keystream = app.add_subcommand("keystream", "Write keystream bytes");
  keystream->add_option("--cipher", ks.cipher, "hc128, rabbit or salsa20")->required();
  keystream->add_option("--variant", ks.variant, "rot or drt")->capture_default_str();
  keystream->add_option("--key", ks.key, "Key in hex (default all zero)");
  keystream->add_option("--iv", ks.iv, "IV in hex (default all zero)");
  keystream->add_option("--length", ks.length, "Byte count, e.g. 4096, 1MiB, 128MByte")->capture_default_str();
  keystream->add_option("--out", ks.out, "Output file, '-' for standard output")->capture_default_str();
  keystream->add_flag("--hex", ks.hex, "Write hex lines of 32 bytes instead of raw bytes");

  // suite and experiment settings shared by nist and experiment
  std::map<std::string, std::string> setting_values;
  auto add_setting = [&](CLI::App* cmd, const std::string& key, const std::string& help) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    return cmd->add_option(flag, setting_values[key], help);
  };
  auto add_suite_settings = [&](CLI::App* cmd) {
    add_setting(cmd, "sequence_length", "Bits per sequence L (default 1000000)");
    add_setting(cmd, "max_sequences", "Cap on sequences S, 0 for all (default 0)");
    add_setting(cmd, "alpha", "Significance level (default 0.01)");
    add_setting(cmd, "uniformity_threshold", "Minimum uniformity p-value (default 0.0001)");
    add_setting(cmd, "block_frequency_m", "Block frequency block size (default 128)");
    add_setting(cmd, "non_overlapping_m", "Non-overlapping template length (default 9)");
    add_setting(cmd, "overlapping_m", "Overlapping template length (default 9)");
    add_setting(cmd, "serial_m", "Serial block length (default 16)");
    add_setting(cmd, "approximate_entropy_m", "Approximate entropy block length (default 10)");
    add_setting(cmd, "linear_complexity_m", "Linear complexity block size (default 500)");
    add_setting(cmd, "universal_l", "Universal block length, 0 to derive from L (default 0)");
    add_setting(cmd, "tests", "Comma-separated abbreviations or 'all' (default all)");
  };

  NistOptions ni;
  auto* nist = app.add_subcommand("nist", "Run the statistical suite on a bit stream file");
  nist->add_option("--in", ni.input, "Input file, '-' for standard input")->required();
  nist->add_option("--format", ni.format, "md, json or csv")->capture_default_str();
  nist->add_option("--config", ni.config, "key = value config file");
  add_suite_settings(nist);

  ExperimentOptions ex;
  auto* experiment = app.add_subcommand("experiment", "Run methods 1-5 for one cipher and write reports");
  add_setting(experiment, "cipher", "hc128, rabbit or salsa20 (default hc128)");
  add_setting(experiment, "variant", "rot, drt or both (default rot)");
  add_setting(experiment, "methods", "e.g. 1-5 or 1,3 (default 1-5)");
  add_setting(experiment, "length", "Keystream bytes per case, e.g. 1MiB, 128MByte (default 8MiB)");
  add_setting(experiment, "jobs", "Cases run in parallel (default 1)");
  add_setting(experiment, "fixtures", "Method-5 series file (default $DRT_FIXTURES, else the bundled file)");
  add_suite_settings(experiment);
  experiment->add_option("--config", ex.config, "key = value config file; flags override it");
  experiment->add_option("--out", ex.out, "Report directory")->capture_default_str();
  experiment->add_option("--formats", ex.formats, "Comma-separated: json, md, csv")->capture_default_str();
  experiment->add_flag("--quiet", ex.quiet, "No per-case progress on standard error");

  std::string st_cipher = "all", st_golden;
  auto* self_test = app.add_subcommand("self-test", "Known-answer and golden-file checks");
  self_test->add_option("--cipher", st_cipher, "hc128, rabbit, salsa20 or all")->capture_default_str();
  self_test->add_option("--golden-dir", st_golden, "Golden file directory (default $DRT_GOLDEN_DIR, else bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto given = [&](CLI::App* cmd) {
    drt::harness::Settings s;
    for (const auto& [key, value] : setting_values) {
      std::string flag = "--" + key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      const auto* opt = cmd->get_option_no_throw(flag);
      if (opt != nullptr && opt->count() > 0) s[key] = value;
    }
    return s;
  };

  try {
    if (*op) return cmd_op(op_map, op_in, op_inverse);
    if (*analyze) return cmd_analyze(an_map);
    if (*graph) return cmd_graph(gr_map, gr_m, gr_format);
    if (*keystream) return cmd_keystream(ks);
    if (*nist) return cmd_nist(ni, given(nist));
    if (*experiment) return cmd_experiment(ex, given(experiment));
    if (*self_test) return cmd_self_test(st_cipher, st_golden);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const drt::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const drt::ParameterError& e) {
    std::cerr << "constraint violation: " << e.what() << "\n";
    return kConstraint;
  } catch (const drt::ConfigError& e) {
    std::cerr << "constraint violation: " << e.what() << "\n";
    return kConstraint;
  } catch (const drt::SizeLimitError& e) {
    std::cerr << "constraint violation: " << e.what() << "\n";
    return kConstraint;
  } catch (const drt::NotInvertibleError& e) {
    std::cerr << "constraint violation: " << e.what() << "\n";
    return kConstraint;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
