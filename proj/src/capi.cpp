#include "fastmcs/fastmcs.h"

#include <chrono>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "fastmcs/bench.hpp"
#include "fastmcs/budget.hpp"
#include "fastmcs/mcs_baselines.hpp"
#include "fastmcs/mcs_fast.hpp"
#include "fastmcs/mps.hpp"
#include "fastmcs/random_graph.hpp"
#include "fastmcs/serialize.hpp"
#include "fastmcs/set_family.hpp"
#include "fastmcs/topology.hpp"

struct fastmcs_topology {
  std::shared_ptr<const fastmcs::Topology> impl;
};

struct fastmcs_mps {
  std::shared_ptr<const fastmcs::Topology> topology;
  fastmcs::MpsResult result;
};

struct fastmcs_bench {
  std::vector<fastmcs::BenchRecord> records;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

/// Runs the body, mapping C++ failures onto status codes.
template <typename F>
fastmcs_status guarded(F&& body) {
  try {
    return body();
  } catch (const fastmcs::BudgetExceeded& e) {
    set_error(e.what());
    return FASTMCS_ERROR_TIMEOUT;
  } catch (const fastmcs::ParseError& e) {
    set_error(e.what());
    return FASTMCS_ERROR_PARSE;
  } catch (const fastmcs::InvalidPairError& e) {
    set_error(e.what());
    return FASTMCS_ERROR_INVALID_PAIR;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return FASTMCS_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return FASTMCS_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FASTMCS_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fastmcs_status require(bool condition, const char* message) {
  if (condition) return FASTMCS_OK;
  set_error(message);
  return FASTMCS_ERROR_INVALID_ARGUMENT;
}

fastmcs::TopologyFormat to_format(fastmcs_format f) {
  switch (f) {
    case FASTMCS_FORMAT_EDGE_LIST: return fastmcs::TopologyFormat::edge_list;
    case FASTMCS_FORMAT_JSON: return fastmcs::TopologyFormat::json;
    case FASTMCS_FORMAT_AUTO:
    default: return fastmcs::TopologyFormat::auto_detect;
  }
}

fastmcs::Method to_method(fastmcs_method m) {
  switch (m) {
    case FASTMCS_METHOD_SHANNON: return fastmcs::Method::shannon;
    case FASTMCS_METHOD_COMBINATORIAL: return fastmcs::Method::combinatorial;
    case FASTMCS_METHOD_FAST:
    default: return fastmcs::Method::fast;
  }
}

std::uint32_t resolve_node(const fastmcs::Topology& t, const char* label) {
  const auto idx = t.node_index(label);
  if (!idx) {
    throw fastmcs::InvalidPairError("node \"" + std::string(label) + "\" is not in topology \"" +
                                    t.name() + "\"");
  }
  return *idx;
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const char* spec) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream is(spec);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
      throw std::invalid_argument("pair \"" + item + "\" is not of the form SRC:DST");
    }
    pairs.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  if (pairs.empty()) throw std::invalid_argument("empty pair list");
  return pairs;
}

}  // namespace

extern "C" {

const char* fastmcs_version(void) { return "0.1.0"; }

const char* fastmcs_last_error(void) { return g_last_error.c_str(); }

void fastmcs_string_free(char* s) { delete[] s; }

fastmcs_status fastmcs_topology_parse(const char* text, size_t text_len, fastmcs_format format,
                                      const char* name, fastmcs_topology** out) {
  if (auto st = require(text != nullptr && out != nullptr, "text and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    auto topo = fastmcs::Topology::parse(std::string_view(text, text_len), to_format(format),
                                         name != nullptr ? name : "topology");
    *out = new fastmcs_topology{
        std::make_shared<const fastmcs::Topology>(std::move(topo))};
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_topology_generate(uint32_t num_nodes, double edge_probability,
                                         uint64_t seed, fastmcs_topology** out) {
  if (auto st = require(out != nullptr, "out must be non-NULL"); st) return st;
  return guarded([&] {
    auto topo = fastmcs::generate_connected_graph(num_nodes, edge_probability, seed);
    *out = new fastmcs_topology{
        std::make_shared<const fastmcs::Topology>(std::move(topo))};
    return FASTMCS_OK;
  });
}

void fastmcs_topology_free(fastmcs_topology* t) { delete t; }

const char* fastmcs_topology_name(const fastmcs_topology* t) { return t->impl->name().c_str(); }

uint32_t fastmcs_topology_num_nodes(const fastmcs_topology* t) { return t->impl->num_nodes(); }

uint32_t fastmcs_topology_num_edges(const fastmcs_topology* t) { return t->impl->num_edges(); }

fastmcs_status fastmcs_topology_to_json(const fastmcs_topology* t, char** out) {
  if (auto st = require(t != nullptr && out != nullptr, "t and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    *out = copy_string(t->impl->to_json());
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_mps_compute(const fastmcs_topology* t, const char* src, const char* dst,
                                   int include_edges, fastmcs_mps** out) {
  if (auto st = require(t != nullptr && src != nullptr && dst != nullptr && out != nullptr,
                        "t, src, dst and out must be non-NULL");
      st)
    return st;
  return guarded([&] {
    const auto s = resolve_node(*t->impl, src);
    const auto d = resolve_node(*t->impl, dst);
    auto result = fastmcs::find_mps(*t->impl, s, d, include_edges != 0);
    *out = new fastmcs_mps{t->impl, std::move(result)};
    return FASTMCS_OK;
  });
}

void fastmcs_mps_free(fastmcs_mps* m) { delete m; }

uint64_t fastmcs_mps_num_paths(const fastmcs_mps* m) { return m->result.paths.size(); }

fastmcs_status fastmcs_mps_paths_json(const fastmcs_mps* m, char** out) {
  if (auto st = require(m != nullptr && out != nullptr, "m and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    *out = copy_string(fastmcs::paths_to_json(*m->topology, m->result.paths));
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_mps_interiors_json(const fastmcs_mps* m, char** out) {
  if (auto st = require(m != nullptr && out != nullptr, "m and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    *out = copy_string(fastmcs::family_to_json(*m->topology, m->result.interiors));
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_mps_paths_table(const fastmcs_mps* m, char** out) {
  if (auto st = require(m != nullptr && out != nullptr, "m and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    *out = copy_string(fastmcs::paths_to_table(*m->topology, m->result.paths));
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_mcs_compute(const fastmcs_topology* t, const char* src, const char* dst,
                                   fastmcs_method method, int include_edges, int64_t timeout_ms,
                                   char** mcs_json, uint64_t* num_mcs) {
  if (auto st = require(t != nullptr && src != nullptr && dst != nullptr && mcs_json != nullptr,
                        "t, src, dst and mcs_json must be non-NULL");
      st)
    return st;
  return guarded([&] {
    const auto& topo = *t->impl;
    const auto s = resolve_node(topo, src);
    const auto d = resolve_node(topo, dst);

    std::optional<fastmcs::StepBudget> budget;
    if (timeout_ms > 0) {
      budget.emplace(fastmcs::StepBudget::deadline(std::chrono::milliseconds(timeout_ms)));
    }
    const fastmcs::StepBudget* bp = budget ? &*budget : nullptr;

    const auto mps = fastmcs::find_mps(topo, s, d, include_edges != 0, bp);
    fastmcs::SetFamily family;
    switch (to_method(method)) {
      case fastmcs::Method::fast:
        family = fastmcs::fast_mcs(mps.interiors, bp);
        break;
      case fastmcs::Method::shannon:
        family = fastmcs::shannon_mcs(fastmcs::SopSuccess{mps.interiors}, bp);
        break;
      case fastmcs::Method::combinatorial: {
        fastmcs::ElementSet universe;
        for (std::uint32_t v = 0; v < topo.num_nodes(); ++v) {
          if (v != s && v != d) universe.insert(topo.node_element(v));
        }
        if (include_edges != 0) {
          for (std::uint32_t e = 0; e < topo.num_edges(); ++e) {
            universe.insert(topo.edge_element(e));
          }
        }
        family = fastmcs::combinatorial_mcs(mps.interiors, universe, bp);
        break;
      }
    }
    *mcs_json = copy_string(fastmcs::family_to_json(topo, family));
    if (num_mcs != nullptr) *num_mcs = family.size();
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_family_json_to_table(const char* family_json, char** out) {
  if (auto st = require(family_json != nullptr && out != nullptr,
                        "family_json and out must be non-NULL");
      st)
    return st;
  return guarded([&] {
    *out = copy_string(fastmcs::family_json_to_table(family_json));
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_mcs_verify(const fastmcs_topology* t, const char* src, const char* dst,
                                  const char* mcs_json, int* sound, int* complete) {
  if (auto st = require(t != nullptr && src != nullptr && dst != nullptr &&
                            mcs_json != nullptr && sound != nullptr && complete != nullptr,
                        "all arguments must be non-NULL");
      st)
    return st;
  return guarded([&] {
    const auto& topo = *t->impl;
    const auto s = resolve_node(topo, src);
    const auto d = resolve_node(topo, dst);
    const auto family = fastmcs::family_from_json(topo, mcs_json);
    const auto report = fastmcs::verify_pair_report(topo, s, d, family);
    *sound = report.sound ? 1 : 0;
    switch (report.completeness) {
      case fastmcs::Completeness::verified: *complete = 1; break;
      case fastmcs::Completeness::failed: *complete = 0; break;
      case fastmcs::Completeness::skipped: *complete = -1; break;
    }
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_bench_run(const fastmcs_topology* const* topologies, size_t num_topologies,
                                 const fastmcs_method* methods, size_t num_methods,
                                 const fastmcs_bench_options* options, fastmcs_bench** out) {
  if (auto st = require(topologies != nullptr && num_topologies > 0 && methods != nullptr &&
                            num_methods > 0 && out != nullptr,
                        "topologies, methods and out must be non-NULL and non-empty");
      st)
    return st;
  return guarded([&] {
    std::vector<fastmcs::Topology> topos;
    topos.reserve(num_topologies);
    for (size_t i = 0; i < num_topologies; ++i) topos.push_back(*topologies[i]->impl);

    fastmcs::BenchOptions opts;
    opts.methods.clear();
    for (size_t i = 0; i < num_methods; ++i) opts.methods.push_back(to_method(methods[i]));
    if (options != nullptr) {
      if (options->timeout_ms > 0) opts.timeout = std::chrono::milliseconds(options->timeout_ms);
      if (options->repetitions > 0) opts.repetitions = options->repetitions;
      if (options->workers > 0) opts.workers = options->workers;
      if (options->pairs != nullptr) opts.pairs = parse_pairs(options->pairs);
      opts.include_edges = options->include_edges != 0;
    }
    auto records = fastmcs::run_bench(topos, opts);
    *out = new fastmcs_bench{std::move(records)};
    return FASTMCS_OK;
  });
}

void fastmcs_bench_free(fastmcs_bench* b) { delete b; }

int fastmcs_bench_all_agree(const fastmcs_bench* b) {
  for (const auto& rec : b->records) {
    if (!rec.agreement) return 0;
  }
  return 1;
}

fastmcs_status fastmcs_bench_records_csv(const fastmcs_bench* b, char** out) {
  if (auto st = require(b != nullptr && out != nullptr, "b and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    *out = copy_string(fastmcs::records_to_csv(b->records));
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_bench_summary_json(const fastmcs_bench* b, char** out) {
  if (auto st = require(b != nullptr && out != nullptr, "b and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    *out = copy_string(fastmcs::summary_to_json(fastmcs::summarize(b->records)));
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_bench_plot_csv(const fastmcs_bench* b, char** out) {
  if (auto st = require(b != nullptr && out != nullptr, "b and out must be non-NULL"); st)
    return st;
  return guarded([&] {
    *out = copy_string(fastmcs::plot_data_csv(b->records));
    return FASTMCS_OK;
  });
}

fastmcs_status fastmcs_plot_csv_from_records(const char* records_csv, char** plot_csv,
                                             char** notes) {
  if (auto st = require(records_csv != nullptr && plot_csv != nullptr,
                        "records_csv and plot_csv must be non-NULL");
      st)
    return st;
  return guarded([&] {
    const auto records = fastmcs::records_from_csv(records_csv);
    std::vector<std::string> note_lines;
    *plot_csv = copy_string(fastmcs::plot_data_csv(records, &note_lines));
    if (notes != nullptr) {
      std::string joined;
      for (const auto& line : note_lines) {
        joined += line;
        joined += '\n';
      }
      *notes = copy_string(joined);
    }
    return FASTMCS_OK;
  });
}

}  // extern "C"
