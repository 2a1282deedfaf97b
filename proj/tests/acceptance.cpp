// Acceptance suite: runs the project's fixed correctness and performance
// criteria and prints one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails. The optional external-data check is skipped when
// its input file is absent.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fastmcs/bench.hpp"
#include "fastmcs/mcs_baselines.hpp"
#include "fastmcs/mcs_fast.hpp"
#include "fastmcs/mps.hpp"
#include "fastmcs/random_graph.hpp"
#include "fastmcs/serialize.hpp"
#include "fastmcs/topology.hpp"

using namespace fastmcs;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  bool (*run)(std::ostream& detail);
  double budget_seconds;  // 0: no runtime requirement
};

std::filesystem::path g_data_dir = "data";

constexpr std::string_view kDemoEdgeList = "S A\nS C\nA B\nA D\nC D\nD B\nD E\nE F\nB T\nF T";

Topology demo_topology() {
  return Topology::parse(kDemoEdgeList, TopologyFormat::edge_list, "demo");
}

ElementSet label_set(const Topology& t, std::initializer_list<std::string_view> labels) {
  ElementSet s;
  for (auto l : labels) s.insert(t.node_element(*t.node_index(l)));
  return s;
}

SetFamily demo_expected_mcs(const Topology& t) {
  SetFamily f;
  f.push_back(label_set(t, {"A", "C"}));
  f.push_back(label_set(t, {"A", "D"}));
  f.push_back(label_set(t, {"B", "D"}));
  f.push_back(label_set(t, {"B", "E"}));
  f.push_back(label_set(t, {"B", "F"}));
  return f;
}

ElementSet interior_universe(const Topology& t, std::uint32_t src, std::uint32_t dst) {
  ElementSet u;
  for (std::uint32_t v = 0; v < t.num_nodes(); ++v) {
    if (v != src && v != dst) u.insert(t.node_element(v));
  }
  return u;
}

// 1. Golden fixture: exact paths and the exact cut family from all three
// engines.
bool golden_fixture(std::ostream& detail) {
  const Topology t = demo_topology();
  const std::uint32_t s = *t.node_index("S");
  const std::uint32_t d = *t.node_index("T");

  const MpsResult mps = find_mps(t, s, d);
  std::vector<std::string> got;
  for (const auto& p : mps.paths) {
    std::string line;
    for (std::size_t i = 0; i < p.size(); ++i) line += (i ? "-" : "") + t.label(p[i]);
    got.push_back(line);
  }
  std::sort(got.begin(), got.end());
  const std::vector<std::string> want = {"S-A-B-T", "S-A-D-E-F-T", "S-C-D-B-T", "S-C-D-E-F-T"};
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  if (got != sorted_want) {
    detail << "path mismatch";
    return false;
  }

  const SetFamily expected = demo_expected_mcs(t);
  const SetFamily by_fast = fast_mcs(mps.interiors);
  const SetFamily by_shannon = shannon_mcs(SopSuccess{mps.interiors});
  const SetFamily by_comb = combinatorial_mcs(mps.interiors, interior_universe(t, s, d));
  if (by_fast != expected || by_shannon != expected || by_comb != expected) {
    detail << "cut family mismatch";
    return false;
  }
  detail << "4 paths, 5 cut sets, three engines exact";
  return true;
}

// 2. First expansion step of the Shannon engine on the fixture family.
bool shannon_split_fidelity(std::ostream& detail) {
  const Topology t = demo_topology();
  const auto mps = find_mps(t, *t.node_index("S"), *t.node_index("T"));
  const auto step = shannon_split(mps.interiors);
  if (!step) {
    detail << "no split found";
    return false;
  }
  if (t.element_label(step->pivot) != "D") {
    detail << "pivot is " << t.element_label(step->pivot) << ", expected D";
    return false;
  }
  SetFamily one;
  one.push_back(label_set(t, {"A", "B"}));
  one.push_back(label_set(t, {"A", "E", "F"}));
  one.push_back(label_set(t, {"C", "E", "F"}));
  one.push_back(label_set(t, {"C", "B"}));
  SetFamily zero;
  zero.push_back(label_set(t, {"A", "B"}));
  if (step->cofactor_one != one || step->cofactor_zero != zero) {
    detail << "cofactor mismatch";
    return false;
  }
  detail << "pivot D, both cofactors exact";
  return true;
}

// 3. Pruned MPS search equals the exhaustive oracle.
bool mps_oracle_equivalence(std::ostream& detail) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::uint32_t> size(4, 10);
  std::uniform_real_distribution<double> density(0.25, 0.6);
  std::size_t pairs = 0;
  for (int g = 0; g < 200; ++g) {
    const std::uint32_t n = size(rng);
    const Topology t = generate_connected_graph(n, density(rng), 40000 + g);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) {
        const MpsResult r = find_mps(t, u, v);
        if (!r.interiors.is_antichain() || r.interiors != mps_oracle(t, u, v)) {
          detail << "mismatch on " << t.name() << " pair " << t.label(u) << ":" << t.label(v);
          return false;
        }
        ++pairs;
      }
    }
  }
  detail << "200 graphs, " << pairs << " pairs";
  return true;
}

// 4. Engine agreement plus definition-level verification.
bool mcs_oracle_equivalence(std::ostream& detail) {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::uint32_t> size(4, 12);
  std::uniform_real_distribution<double> density(0.25, 0.55);
  std::size_t pairs = 0;
  for (int g = 0; g < 100; ++g) {
    const std::uint32_t n = size(rng);
    const Topology t = generate_connected_graph(n, density(rng), 50000 + g);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) {
        const auto interiors = find_mps(t, u, v).interiors;
        const SetFamily fast = fast_mcs(interiors);
        if (shannon_mcs(SopSuccess{interiors}) != fast ||
            combinatorial_mcs(interiors, interior_universe(t, u, v)) != fast) {
          detail << "engine disagreement on " << t.name() << " " << t.label(u) << ":"
                 << t.label(v);
          return false;
        }
        const VerifyReport report = verify_pair_report(t, u, v, fast);
        if (!report.sound || report.completeness != Completeness::verified) {
          detail << "verification failed on " << t.name() << " " << t.label(u) << ":"
                 << t.label(v);
          return false;
        }
        ++pairs;
      }
    }
  }
  detail << "100 graphs, " << pairs << " pairs, three engines + verifier";
  return true;
}

// 5. Degenerate conventions.
bool degenerate_conventions(std::ostream& detail) {
  const Topology direct = Topology::parse("A B", TopologyFormat::edge_list);
  const auto direct_interiors = find_mps(direct, 0, 1).interiors;
  const SetFamily empty_family;
  const SetFamily unit = SetFamily::unit();

  if (fast_mcs(direct_interiors) != empty_family ||
      shannon_mcs(SopSuccess{direct_interiors}) != empty_family ||
      combinatorial_mcs(direct_interiors, ElementSet{}) != empty_family) {
    detail << "direct edge should yield the empty family";
    return false;
  }

  const Topology split_graph = Topology::parse(R"({"nodes":["A","B","C"],"edges":[["A","B"]]})",
                                               TopologyFormat::json);
  const auto disc_interiors =
      find_mps(split_graph, *split_graph.node_index("A"), *split_graph.node_index("C")).interiors;
  const ElementSet universe = interior_universe(
      split_graph, *split_graph.node_index("A"), *split_graph.node_index("C"));
  if (fast_mcs(disc_interiors) != unit || shannon_mcs(SopSuccess{disc_interiors}) != unit ||
      combinatorial_mcs(disc_interiors, universe) != unit) {
    detail << "disconnected pair should yield {∅}";
    return false;
  }
  detail << "direct edge -> {}, disconnected -> {∅}, all engines";
  return true;
}

// 6. Aggregate performance ordering on generated graphs (17 and 24 nodes,
// single worker, 30 s combinatorial budget; a timeout contributes its
// budget to the total).
bool performance_ordering(std::ostream& detail) {
  BenchOptions opts;
  opts.methods = {Method::fast, Method::shannon, Method::combinatorial};
  opts.timeout = std::chrono::seconds(30);
  opts.repetitions = 1;
  opts.workers = 1;
  const std::vector<Topology> topologies = {
      generate_connected_graph(17, 0.25, 7),
      generate_connected_graph(24, 0.18, 11),
  };
  const auto records = run_bench(topologies, opts);

  std::int64_t total_fast = 0;
  std::int64_t total_shannon = 0;
  std::int64_t total_comb = 0;
  std::size_t timeouts = 0;
  for (const auto& r : records) {
    if (r.status == RunStatus::error) {
      detail << "engine error on " << r.topology << " " << r.src << ":" << r.dst;
      return false;
    }
    if (r.status == RunStatus::timeout) ++timeouts;
    // Timeout records already carry mcs_time == budget.
    const std::int64_t total = r.mps_time_ns + r.mcs_time_ns;
    switch (r.method) {
      case Method::fast: total_fast += total; break;
      case Method::shannon: total_shannon += total; break;
      case Method::combinatorial: total_comb += total; break;
    }
  }
  detail << "fast " << total_fast / 1e6 << " ms, shannon " << total_shannon / 1e6
         << " ms, combinatorial " << total_comb / 1e6 << " ms (" << timeouts << " timeouts)";
  if (total_fast > total_shannon) {
    detail << "; fast slower than shannon";
    return false;
  }
  if (total_comb < 10 * total_fast) {
    detail << "; combinatorial less than 10x fast";
    return false;
  }
  return true;
}

// 7. Bench determinism modulo the timing columns.
bool bench_determinism(std::ostream& detail) {
  BenchOptions opts;
  opts.methods = {Method::fast, Method::shannon, Method::combinatorial};
  opts.repetitions = 1;
  const auto strip = [](const std::string& csv) {
    std::istringstream is(csv);
    std::ostringstream os;
    std::string line;
    while (std::getline(is, line)) {
      std::vector<std::string> fields;
      std::string f;
      std::istringstream ls(line);
      while (std::getline(ls, f, ',')) fields.push_back(f);
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i == 7 || i == 8) continue;
        os << fields[i] << ',';
      }
      os << '\n';
    }
    return os.str();
  };
  const std::string a = records_to_csv(run_bench({demo_topology()}, opts));
  const std::string b = records_to_csv(run_bench({demo_topology()}, opts));
  if (strip(a) != strip(b)) {
    detail << "stripped CSVs differ";
    return false;
  }
  detail << "two runs byte-identical after stripping timing";
  return true;
}

// 8. Optional external data: a user-supplied Germany_17 edge list.
bool germany17_present() {
  const char* env = std::getenv("FASTMCS_GERMANY17");
  if (env != nullptr && *env != '\0') return std::filesystem::exists(env);
  return std::filesystem::exists(g_data_dir / "germany_17.txt");
}

bool germany17_check(std::ostream& detail) {
  const char* env = std::getenv("FASTMCS_GERMANY17");
  const std::filesystem::path path =
      (env != nullptr && *env != '\0') ? std::filesystem::path(env)
                                       : g_data_dir / "germany_17.txt";
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Topology t = Topology::parse(buffer.str(), TopologyFormat::auto_detect, "Germany_17");

  const auto src = t.node_index("Ulm");
  const auto dst = t.node_index("Hamburg");
  if (!src || !dst) {
    detail << "file lacks Ulm/Hamburg labels";
    return false;
  }
  const SetFamily mcs = fast_mcs(find_mps(t, *src, *dst).interiors);
  const ElementSet small = label_set(t, {"Frankfurt", "Leipzig"});
  const ElementSet larger = label_set(t, {"Dortmund", "Hannover", "Leipzig"});
  if (!mcs.contains(small)) {
    detail << "{Frankfurt, Leipzig} missing";
    return false;
  }
  if (!mcs.contains(larger)) {
    detail << "{Dortmund, Hannover, Leipzig} missing";
    return false;
  }
  detail << "both documented Ulm-Hamburg cut sets present (" << mcs.size() << " total)";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--data-dir") g_data_dir = argv[i + 1];
  }

  const std::vector<Criterion> criteria = {
      {"golden fixture (4 paths, exact cut family, 3 engines)", golden_fixture, 1.0},
      {"shannon first split fidelity", shannon_split_fidelity, 0.0},
      {"MPS oracle equivalence (200 graphs <= 10 nodes)", mps_oracle_equivalence, 120.0},
      {"MCS oracle equivalence + verification (100 graphs <= 12 nodes)", mcs_oracle_equivalence,
       600.0},
      {"degenerate conventions", degenerate_conventions, 0.0},
      {"performance ordering (17/24-node graphs, single worker)", performance_ordering, 900.0},
      {"bench determinism modulo timing", bench_determinism, 0.0},
  };

  bool all_ok = true;
  int index = 1;
  std::cout << std::fixed << std::setprecision(2);
  for (const auto& c : criteria) {
    std::ostringstream detail;
    const auto start = Clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      detail << " [exceeded " << c.budget_seconds << " s budget]";
      ok = false;
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << c.name << " — "
              << detail.str() << " (" << seconds << " s)\n";
    all_ok = all_ok && ok;
    ++index;
  }

  if (germany17_present()) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = germany17_check(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index
              << ". external Germany_17 fixture — " << detail.str() << "\n";
    all_ok = all_ok && ok;
  } else {
    std::cout << "[SKIP] " << index
              << ". external Germany_17 fixture — no germany_17.txt (set FASTMCS_GERMANY17)\n";
  }

  return all_ok ? 0 : 1;
}
