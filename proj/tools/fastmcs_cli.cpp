// Command-line front end for the fastmcs shared library. Everything here
// goes through the public C API; diagnostics go to stderr, declared output
// to stdout or the requested files.
//
// Exit codes: 0 success, 1 input error, 2 invalid pair, 3 verification or
// agreement failure, 4 engine timeout.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fastmcs/fastmcs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInvalidPair = 2;
constexpr int kExitVerifyFailure = 3;
constexpr int kExitTimeout = 4;

int exit_code_for(fastmcs_status status) {
  switch (status) {
    case FASTMCS_OK: return kExitOk;
    case FASTMCS_ERROR_INVALID_PAIR: return kExitInvalidPair;
    case FASTMCS_ERROR_TIMEOUT: return kExitTimeout;
    default: return kExitInputError;
  }
}

[[nodiscard]] int fail(fastmcs_status status) {
  std::cerr << "error: " << fastmcs_last_error() << "\n";
  return exit_code_for(status);
}

struct StringOut {
  char* value = nullptr;
  ~StringOut() { fastmcs_string_free(value); }
  std::string str() const { return value != nullptr ? value : ""; }
};

using TopologyPtr = std::unique_ptr<fastmcs_topology, decltype(&fastmcs_topology_free)>;

TopologyPtr make_topology(fastmcs_topology* raw) {
  return TopologyPtr(raw, &fastmcs_topology_free);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return out.good();
}

std::string topology_name_from_path(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

fastmcs_format format_from_flag(const std::string& flag) {
  if (flag == "edgelist") return FASTMCS_FORMAT_EDGE_LIST;
  if (flag == "json") return FASTMCS_FORMAT_JSON;
  return FASTMCS_FORMAT_AUTO;
}

std::optional<TopologyPtr> load_topology(const std::string& path, const std::string& format_flag,
                                         fastmcs_status* status_out) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read \"" << path << "\"\n";
    *status_out = FASTMCS_ERROR_IO;
    return std::nullopt;
  }
  fastmcs_topology* raw = nullptr;
  const auto status =
      fastmcs_topology_parse(text->c_str(), text->size(), format_from_flag(format_flag),
                             topology_name_from_path(path).c_str(), &raw);
  if (status != FASTMCS_OK) {
    std::cerr << "error: " << path << ": " << fastmcs_last_error() << "\n";
    *status_out = status;
    return std::nullopt;
  }
  *status_out = FASTMCS_OK;
  return make_topology(raw);
}

struct GeneratorSpec {
  uint32_t nodes = 0;
  double probability = 0.25;
  uint64_t seed = 1;
};

// "n=17,p=0.25,seed=7"
std::optional<GeneratorSpec> parse_generator(const std::string& text) {
  GeneratorSpec spec;
  bool have_n = false;
  std::istringstream is(text);
  std::string item;
  try {
    while (std::getline(is, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) return std::nullopt;
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "n") {
        spec.nodes = static_cast<uint32_t>(std::stoul(value));
        have_n = true;
      } else if (key == "p") {
        spec.probability = std::stod(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else {
        return std::nullopt;
      }
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!have_n) return std::nullopt;
  return spec;
}

std::vector<fastmcs_method> parse_methods(const std::string& text, bool* ok) {
  std::vector<fastmcs_method> methods;
  std::istringstream is(text);
  std::string item;
  *ok = true;
  while (std::getline(is, item, ',')) {
    if (item == "fast") {
      methods.push_back(FASTMCS_METHOD_FAST);
    } else if (item == "shannon") {
      methods.push_back(FASTMCS_METHOD_SHANNON);
    } else if (item == "combinatorial") {
      methods.push_back(FASTMCS_METHOD_COMBINATORIAL);
    } else {
      *ok = false;
      return methods;
    }
  }
  if (methods.empty()) *ok = false;
  return methods;
}

uint32_t apply_thread_cap(uint32_t workers) {
  const char* env = std::getenv("FAST_MCS_THREADS");
  if (env == nullptr || *env == '\0') return workers;
  try {
    const unsigned long cap = std::stoul(env);
    if (cap >= 1 && cap < workers) return static_cast<uint32_t>(cap);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring unparsable FAST_MCS_THREADS\n";
  }
  return workers;
}

struct MpsArgs {
  std::string topology_path;
  std::string topo_format = "auto";
  std::string src;
  std::string dst;
  std::string format = "table";
  bool include_edges = false;
};

int run_mps(const MpsArgs& args) {
  fastmcs_status status = FASTMCS_OK;
  auto topo = load_topology(args.topology_path, args.topo_format, &status);
  if (!topo) return exit_code_for(status);

  fastmcs_mps* raw = nullptr;
  status = fastmcs_mps_compute(topo->get(), args.src.c_str(), args.dst.c_str(),
                               args.include_edges ? 1 : 0, &raw);
  if (status != FASTMCS_OK) return fail(status);
  std::unique_ptr<fastmcs_mps, decltype(&fastmcs_mps_free)> mps(raw, &fastmcs_mps_free);

  if (args.format == "json") {
    StringOut paths;
    if ((status = fastmcs_mps_paths_json(mps.get(), &paths.value)) != FASTMCS_OK) {
      return fail(status);
    }
    std::cout << paths.str() << "\n";
  } else {
    StringOut paths;
    StringOut interiors;
    if ((status = fastmcs_mps_paths_table(mps.get(), &paths.value)) != FASTMCS_OK ||
        (status = fastmcs_mps_interiors_json(mps.get(), &interiors.value)) != FASTMCS_OK) {
      return fail(status);
    }
    StringOut interior_table;
    if ((status = fastmcs_family_json_to_table(interiors.value, &interior_table.value)) !=
        FASTMCS_OK) {
      return fail(status);
    }
    std::cout << "paths (" << fastmcs_mps_num_paths(mps.get()) << "):\n"
              << paths.str() << "interior sets:\n"
              << interior_table.str();
  }
  return kExitOk;
}

struct McsArgs {
  std::string topology_path;
  std::string topo_format = "auto";
  std::string src;
  std::string dst;
  std::string method = "fast";
  std::string format = "json";
  double timeout_seconds = 0.0;
  bool include_edges = false;
  bool verify = false;
};

int run_mcs(const McsArgs& args) {
  if (args.verify && args.include_edges) {
    std::cerr << "error: --verify checks the node universe and cannot be combined with "
                 "--include-edges\n";
    return kExitInputError;
  }
  bool methods_ok = false;
  const auto methods = parse_methods(args.method, &methods_ok);
  if (!methods_ok || methods.size() != 1) {
    std::cerr << "error: --method must be one of fast, shannon, combinatorial\n";
    return kExitInputError;
  }

  fastmcs_status status = FASTMCS_OK;
  auto topo = load_topology(args.topology_path, args.topo_format, &status);
  if (!topo) return exit_code_for(status);

  StringOut mcs_json;
  uint64_t num_mcs = 0;
  status = fastmcs_mcs_compute(topo->get(), args.src.c_str(), args.dst.c_str(), methods[0],
                               args.include_edges ? 1 : 0,
                               static_cast<int64_t>(args.timeout_seconds * 1000.0),
                               &mcs_json.value, &num_mcs);
  if (status != FASTMCS_OK) return fail(status);

  const std::string json = mcs_json.str();
  if (args.format == "table") {
    StringOut table;
    if ((status = fastmcs_family_json_to_table(json.c_str(), &table.value)) != FASTMCS_OK) {
      return fail(status);
    }
    std::cout << table.str();
  } else {
    std::cout << json << "\n";
  }
  if (json == "[]") {
    std::cerr << "note: pair directly connected; no cut set over interior elements\n";
  } else if (json == "[[]]") {
    std::cerr << "note: pair already disconnected; the empty cut set applies\n";
  }

  if (args.verify) {
    int sound = 0;
    int complete = 0;
    status = fastmcs_mcs_verify(topo->get(), args.src.c_str(), args.dst.c_str(), json.c_str(),
                                &sound, &complete);
    if (status != FASTMCS_OK) return fail(status);
    std::cerr << "verify: " << (sound ? "sound" : "NOT SOUND") << ", "
              << (complete == 1   ? "complete"
                  : complete == 0 ? "INCOMPLETE"
                                  : "completeness skipped (universe too large)")
              << "\n";
    if (sound == 0 || complete == 0) return kExitVerifyFailure;
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> topology_paths;
  std::string topo_format = "auto";
  std::vector<std::string> generators;
  std::string methods = "fast";
  std::string pairs;
  double timeout_seconds = 30.0;
  uint32_t repetitions = 3;
  uint32_t workers = 1;
  bool include_edges = false;
  std::string out_path;
  std::string summary_path;
  std::string plot_path;
};

int run_bench_cmd(const BenchArgs& args) {
  bool methods_ok = false;
  const auto methods = parse_methods(args.methods, &methods_ok);
  if (!methods_ok) {
    std::cerr << "error: --methods must be a comma list of fast, shannon, combinatorial\n";
    return kExitInputError;
  }
  if (args.topology_paths.empty() && args.generators.empty()) {
    std::cerr << "error: no topologies: pass files or --generate\n";
    return kExitInputError;
  }

  std::vector<TopologyPtr> owned;
  fastmcs_status status = FASTMCS_OK;
  for (const auto& path : args.topology_paths) {
    auto topo = load_topology(path, args.topo_format, &status);
    if (!topo) return exit_code_for(status);
    owned.push_back(std::move(*topo));
  }
  for (const auto& text : args.generators) {
    const auto spec = parse_generator(text);
    if (!spec) {
      std::cerr << "error: bad --generate \"" << text << "\" (expected n=17,p=0.25,seed=7)\n";
      return kExitInputError;
    }
    fastmcs_topology* raw = nullptr;
    status = fastmcs_topology_generate(spec->nodes, spec->probability, spec->seed, &raw);
    if (status != FASTMCS_OK) return fail(status);
    owned.push_back(make_topology(raw));
  }

  std::vector<const fastmcs_topology*> topos;
  for (const auto& t : owned) topos.push_back(t.get());

  fastmcs_bench_options options = {};
  options.timeout_ms = static_cast<int64_t>(args.timeout_seconds * 1000.0);
  options.repetitions = args.repetitions;
  options.workers = apply_thread_cap(args.workers);
  options.pairs = args.pairs.empty() ? nullptr : args.pairs.c_str();
  options.include_edges = args.include_edges ? 1 : 0;

  fastmcs_bench* raw_bench = nullptr;
  status = fastmcs_bench_run(topos.data(), topos.size(), methods.data(), methods.size(),
                             &options, &raw_bench);
  if (status != FASTMCS_OK) return fail(status);
  std::unique_ptr<fastmcs_bench, decltype(&fastmcs_bench_free)> bench(raw_bench,
                                                                      &fastmcs_bench_free);

  StringOut csv;
  if ((status = fastmcs_bench_records_csv(bench.get(), &csv.value)) != FASTMCS_OK) {
    return fail(status);
  }
  if (args.out_path.empty()) {
    std::cout << csv.str();
  } else if (!write_file(args.out_path, csv.str())) {
    std::cerr << "error: cannot write \"" << args.out_path << "\"\n";
    return kExitInputError;
  }

  StringOut summary;
  if ((status = fastmcs_bench_summary_json(bench.get(), &summary.value)) != FASTMCS_OK) {
    return fail(status);
  }
  if (args.summary_path.empty()) {
    if (!args.out_path.empty()) std::cout << summary.str() << "\n";
  } else if (!write_file(args.summary_path, summary.str() + "\n")) {
    std::cerr << "error: cannot write \"" << args.summary_path << "\"\n";
    return kExitInputError;
  }

  if (!args.plot_path.empty()) {
    StringOut plot;
    if ((status = fastmcs_bench_plot_csv(bench.get(), &plot.value)) != FASTMCS_OK) {
      return fail(status);
    }
    if (!write_file(args.plot_path, plot.str())) {
      std::cerr << "error: cannot write \"" << args.plot_path << "\"\n";
      return kExitInputError;
    }
  }

  if (fastmcs_bench_all_agree(bench.get()) == 0) {
    std::cerr << "warning: methods disagreed on at least one pair\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

struct PlotArgs {
  std::string records_path;
  std::string out_path;
};

int run_plot_data(const PlotArgs& args) {
  const auto text = read_file(args.records_path);
  if (!text) {
    std::cerr << "error: cannot read \"" << args.records_path << "\"\n";
    return kExitInputError;
  }
  StringOut plot;
  StringOut notes;
  const auto status = fastmcs_plot_csv_from_records(text->c_str(), &plot.value, &notes.value);
  if (status != FASTMCS_OK) return fail(status);
  if (!notes.str().empty()) std::cerr << notes.str();
  if (args.out_path.empty()) {
    std::cout << plot.str();
  } else if (!write_file(args.out_path, plot.str())) {
    std::cerr << "error: cannot write \"" << args.out_path << "\"\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal path set / minimal cut set toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fastmcs_version()));

  MpsArgs mps_args;
  auto* mps_cmd = app.add_subcommand("mps", "enumerate minimal path sets for one pair");
  mps_cmd->add_option("topology", mps_args.topology_path, "topology file")->required();
  mps_cmd->add_option("--src", mps_args.src, "source node label")->required();
  mps_cmd->add_option("--dst", mps_args.dst, "destination node label")->required();
  mps_cmd->add_option("--topo-format", mps_args.topo_format, "topology file format")
      ->check(CLI::IsMember({"auto", "edgelist", "json"}))
      ->capture_default_str();
  mps_cmd->add_option("--format", mps_args.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  mps_cmd->add_flag("--include-edges", mps_args.include_edges,
                    "append traversed edges to the interior sets");

  McsArgs mcs_args;
  auto* mcs_cmd = app.add_subcommand("mcs", "compute minimal cut sets for one pair");
  mcs_cmd->add_option("topology", mcs_args.topology_path, "topology file")->required();
  mcs_cmd->add_option("--src", mcs_args.src, "source node label")->required();
  mcs_cmd->add_option("--dst", mcs_args.dst, "destination node label")->required();
  mcs_cmd->add_option("--method", mcs_args.method, "engine: fast, shannon or combinatorial")
      ->capture_default_str();
  mcs_cmd->add_option("--topo-format", mcs_args.topo_format, "topology file format")
      ->check(CLI::IsMember({"auto", "edgelist", "json"}))
      ->capture_default_str();
  mcs_cmd->add_option("--format", mcs_args.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  mcs_cmd->add_option("--timeout", mcs_args.timeout_seconds,
                      "engine budget in seconds (0 = unlimited)")
      ->capture_default_str();
  mcs_cmd->add_flag("--include-edges", mcs_args.include_edges,
                    "cut sets over nodes and edges");
  mcs_cmd->add_flag("--verify", mcs_args.verify,
                    "re-check the family against the connectivity definition");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "time every engine over source-destination pairs");
  bench_cmd->add_option("topologies", bench_args.topology_paths, "topology files");
  bench_cmd->add_option("--generate", bench_args.generators,
                        "generate a seeded random graph, e.g. n=17,p=0.25,seed=7");
  bench_cmd->add_option("--methods", bench_args.methods, "comma list of engines")
      ->capture_default_str();
  bench_cmd->add_option("--pairs", bench_args.pairs,
                        "explicit SRC:DST pairs, comma separated (default: all pairs)");
  bench_cmd->add_option("--topo-format", bench_args.topo_format, "topology file format")
      ->check(CLI::IsMember({"auto", "edgelist", "json"}))
      ->capture_default_str();
  bench_cmd->add_option("--timeout", bench_args.timeout_seconds, "per-engine budget in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--repetitions", bench_args.repetitions,
                        "median-of-N engine timing")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench_args.workers,
                        "pair-level worker pool size (capped by FAST_MCS_THREADS)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_flag("--include-edges", bench_args.include_edges,
                      "cut sets over nodes and edges");
  bench_cmd->add_option("--out", bench_args.out_path, "records CSV path (default: stdout)");
  bench_cmd->add_option("--summary", bench_args.summary_path,
                        "summary JSON path (default: stdout)");
  bench_cmd->add_option("--plot-out", bench_args.plot_path, "plot-data CSV path");

  PlotArgs plot_args;
  auto* plot_cmd = app.add_subcommand("plot-data", "aggregate a records CSV for plotting");
  plot_cmd->add_option("records", plot_args.records_path, "records CSV file")->required();
  plot_cmd->add_option("--out", plot_args.out_path, "plot-data CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (mps_cmd->parsed()) return run_mps(mps_args);
  if (mcs_cmd->parsed()) return run_mcs(mcs_args);
  if (bench_cmd->parsed()) return run_bench_cmd(bench_args);
  if (plot_cmd->parsed()) return run_plot_data(plot_args);
  return kExitInputError;
}
