#ifndef FASTMCS_BENCH_HPP
#define FASTMCS_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fastmcs/set_family.hpp"
#include "fastmcs/topology.hpp"

namespace fastmcs {

enum class Method { fast, shannon, combinatorial };
enum class RunStatus { ok, timeout, error };

std::string to_string(Method m);
std::string to_string(RunStatus s);
std::optional<Method> method_from_string(std::string_view name);

/// One (topology, pair, method) measurement. The MPS phase is computed
/// once per pair and its time is shared by every method record of that
/// pair. status == timeout implies mcs_time_ns == budget and num_mcs
/// unset.
struct BenchRecord {
  std::string topology;
  std::uint32_t num_nodes = 0;
  std::uint32_t num_edges = 0;
  std::string src;
  std::string dst;
  Method method = Method::fast;
  RunStatus status = RunStatus::ok;
  std::int64_t mps_time_ns = 0;
  std::int64_t mcs_time_ns = 0;
  std::uint64_t num_mps = 0;
  std::optional<std::uint64_t> num_mcs;
  bool agreement = true;
};

struct BenchOptions {
  std::vector<Method> methods{Method::fast};
  /// nullopt: every unordered node pair; otherwise explicit (src,dst)
  /// label pairs applied to each topology.
  std::optional<std::vector<std::pair<std::string, std::string>>> pairs;
  /// Per-engine budget; zero means unlimited.
  std::chrono::nanoseconds timeout{0};
  std::uint32_t repetitions = 3;
  std::uint32_t workers = 1;
  bool include_edges = false;
};

/// Runs every requested engine on every pair of every topology. The MPS
/// phase runs once per pair; each engine is timed as the median of
/// `repetitions` runs. Agreement is judged against the fast engine (first
/// requested method when fast is absent). Engine timeouts and failures are
/// captured per record; records come back in deterministic
/// (topology, pair, method) order.
std::vector<BenchRecord> run_bench(const std::vector<Topology>& topologies,
                                   const BenchOptions& options);

struct MethodSummary {
  std::int64_t total_mps_time_ns = 0;
  /// Sum over ok records only; timeouts are counted, not totalled.
  std::int64_t total_mcs_time_ns = 0;
  std::uint64_t pair_count = 0;
  std::uint64_t timeout_count = 0;
};

struct TopologySummary {
  std::map<Method, MethodSummary> per_method;
  bool agreement = true;  // all records of the topology agree
};

struct BenchSummary {
  std::map<std::string, TopologySummary> per_topology;
};

BenchSummary summarize(const std::vector<BenchRecord>& records);
std::string summary_to_json(const BenchSummary& summary);

/// CSV with header
/// topology,num_nodes,num_edges,src,dst,method,status,mps_time_ns,mcs_time_ns,num_mps,num_mcs,agreement
std::string records_to_csv(const std::vector<BenchRecord>& records);
/// Inverse of records_to_csv; throws ParseError on malformed input.
std::vector<BenchRecord> records_from_csv(std::string_view csv);

/// Plot-ready aggregate, one row per (topology, method):
/// topology,method,total_mps_time_ns,total_mcs_time_ns
/// Non-ok records are excluded from the totals; when `notes` is non-null
/// a line per excluded record is appended to it.
std::string plot_data_csv(const std::vector<BenchRecord>& records,
                          std::vector<std::string>* notes = nullptr);

enum class Completeness { verified, failed, skipped };

struct VerifyReport {
  bool sound = false;  // every member disconnects the pair, minimally so
  Completeness completeness = Completeness::skipped;
  bool ok() const { return sound && completeness != Completeness::failed; }
};

/// Definition-level check of a claimed MCS family for a node pair: every
/// member must disconnect src/dst, dropping any single element must
/// reconnect, and (when the interior universe has at most
/// `completeness_limit` elements) the family must equal the combinatorial
/// reference; above the limit the completeness check is skipped and the
/// report says so.
VerifyReport verify_pair_report(const Topology& t, std::uint32_t src, std::uint32_t dst,
                                const SetFamily& family,
                                std::uint32_t completeness_limit = 18);
bool verify_pair(const Topology& t, std::uint32_t src, std::uint32_t dst,
                 const SetFamily& family, std::uint32_t completeness_limit = 18);

}  // namespace fastmcs

#endif  // FASTMCS_BENCH_HPP
