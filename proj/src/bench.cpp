#include "fastmcs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fastmcs/budget.hpp"
#include "fastmcs/mcs_baselines.hpp"
#include "fastmcs/mcs_fast.hpp"
#include "fastmcs/mps.hpp"

namespace fastmcs {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

constexpr Method kMethodOrder[] = {Method::fast, Method::shannon, Method::combinatorial};

std::vector<Method> normalize_methods(const std::vector<Method>& methods) {
  std::vector<Method> out;
  for (Method m : kMethodOrder) {
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) out.push_back(m);
  }
  return out;
}

ElementSet interior_universe(const Topology& t, std::uint32_t src, std::uint32_t dst,
                             bool include_edges) {
  ElementSet u;
  for (std::uint32_t v = 0; v < t.num_nodes(); ++v) {
    if (v != src && v != dst) u.insert(t.node_element(v));
  }
  if (include_edges) {
    for (std::uint32_t e = 0; e < t.num_edges(); ++e) u.insert(t.edge_element(e));
  }
  return u;
}

SetFamily run_engine(Method method, const SetFamily& interiors, const ElementSet& universe,
                     const StepBudget* budget) {
  switch (method) {
    case Method::fast:
      return fast_mcs(interiors, budget);
    case Method::shannon:
      return shannon_mcs(SopSuccess{interiors}, budget);
    case Method::combinatorial:
      return combinatorial_mcs(interiors, universe, budget);
  }
  return SetFamily{};
}

struct PairTask {
  std::size_t topology_index;
  std::uint32_t src;
  std::uint32_t dst;
  std::size_t record_base;
};

// Minimal RFC-4180 quoting: only fields containing separators or quotes
// get wrapped.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) {
    throw ParseError("CSV line " + std::to_string(line_no) + ": unterminated quote");
  }
  fields.push_back(std::move(current));
  return fields;
}

constexpr std::string_view kCsvHeader =
    "topology,num_nodes,num_edges,src,dst,method,status,mps_time_ns,mcs_time_ns,"
    "num_mps,num_mcs,agreement";

template <typename T>
T parse_number(const std::string& field, std::size_t line_no) {
  try {
    if constexpr (std::is_signed_v<T>) {
      return static_cast<T>(std::stoll(field));
    } else {
      return static_cast<T>(std::stoull(field));
    }
  } catch (const std::exception&) {
    throw ParseError("CSV line " + std::to_string(line_no) + ": bad number \"" + field + "\"");
  }
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::fast: return "fast";
    case Method::shannon: return "shannon";
    case Method::combinatorial: return "combinatorial";
  }
  return "?";
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::ok: return "ok";
    case RunStatus::timeout: return "timeout";
    case RunStatus::error: return "error";
  }
  return "?";
}

std::optional<Method> method_from_string(std::string_view name) {
  if (name == "fast") return Method::fast;
  if (name == "shannon") return Method::shannon;
  if (name == "combinatorial") return Method::combinatorial;
  return std::nullopt;
}

std::vector<BenchRecord> run_bench(const std::vector<Topology>& topologies,
                                   const BenchOptions& options) {
  const std::vector<Method> methods = normalize_methods(options.methods);
  if (methods.empty()) throw std::invalid_argument("at least one method required");
  if (options.repetitions == 0) throw std::invalid_argument("repetitions must be positive");

  // Deterministic task list: topologies in input order, pairs in canonical
  // (u < v) node-index order.
  std::vector<PairTask> tasks;
  for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
    const Topology& t = topologies[ti];
    if (options.pairs) {
      for (const auto& [a, b] : *options.pairs) {
        const auto u = t.node_index(a);
        const auto v = t.node_index(b);
        if (!u || !v) {
          throw InvalidPairError("pair " + a + ":" + b + " names a node missing from topology \"" +
                                 t.name() + "\"");
        }
        if (*u == *v) throw InvalidPairError("pair endpoints must differ: " + a + ":" + b);
        tasks.push_back({ti, *u, *v, 0});
      }
    } else {
      for (std::uint32_t u = 0; u < t.num_nodes(); ++u) {
        for (std::uint32_t v = u + 1; v < t.num_nodes(); ++v) {
          tasks.push_back({ti, u, v, 0});
        }
      }
    }
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) tasks[i].record_base = i * methods.size();

  std::vector<BenchRecord> records(tasks.size() * methods.size());
  const std::int64_t budget_ns = options.timeout.count();

  const auto run_task = [&](const PairTask& task) {
    const Topology& t = topologies[task.topology_index];

    BenchRecord base;
    base.topology = t.name();
    base.num_nodes = t.num_nodes();
    base.num_edges = t.num_edges();
    base.src = t.label(task.src);
    base.dst = t.label(task.dst);

    // MPS phase: computed once, shared by every method of this pair.
    MpsResult mps;
    bool mps_ok = true;
    RunStatus mps_status = RunStatus::ok;
    std::int64_t mps_time = 0;
    try {
      std::optional<StepBudget> budget;
      if (budget_ns > 0) budget.emplace(StepBudget::deadline(options.timeout));
      const auto start = Clock::now();
      mps = find_mps(t, task.src, task.dst, options.include_edges,
                     budget ? &*budget : nullptr);
      mps_time = elapsed_ns(start);
    } catch (const BudgetExceeded&) {
      mps_ok = false;
      mps_status = RunStatus::timeout;
      mps_time = budget_ns;
    } catch (const std::exception&) {
      mps_ok = false;
      mps_status = RunStatus::error;
    }
    base.mps_time_ns = mps_time;
    base.num_mps = mps_ok ? mps.paths.size() : 0;

    const ElementSet universe =
        interior_universe(t, task.src, task.dst, options.include_edges);

    std::optional<SetFamily> reference;
    std::vector<std::optional<SetFamily>> results(methods.size());

    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      BenchRecord rec = base;
      rec.method = methods[mi];
      if (!mps_ok) {
        rec.status = mps_status;
        rec.mcs_time_ns = mps_status == RunStatus::timeout ? budget_ns : 0;
      } else {
        std::vector<std::int64_t> times;
        times.reserve(options.repetitions);
        SetFamily family;
        rec.status = RunStatus::ok;
        for (std::uint32_t rep = 0; rep < options.repetitions; ++rep) {
          try {
            std::optional<StepBudget> budget;
            if (budget_ns > 0) budget.emplace(StepBudget::deadline(options.timeout));
            const auto start = Clock::now();
            SetFamily out = run_engine(methods[mi], mps.interiors, universe,
                                       budget ? &*budget : nullptr);
            times.push_back(elapsed_ns(start));
            if (rep == 0) family = std::move(out);
          } catch (const BudgetExceeded&) {
            rec.status = RunStatus::timeout;
            rec.mcs_time_ns = budget_ns;
            break;
          } catch (const std::exception&) {
            rec.status = RunStatus::error;
            rec.mcs_time_ns = 0;
            break;
          }
        }
        if (rec.status == RunStatus::ok) {
          std::sort(times.begin(), times.end());
          rec.mcs_time_ns = times[(times.size() - 1) / 2];  // median (lower on ties)
          rec.num_mcs = family.size();
          results[mi] = std::move(family);
        }
      }
      records[task.record_base + mi] = std::move(rec);
    }

    // Agreement versus the fast engine (methods are normalized, so the
    // reference is the first requested method, fast when present).
    if (results[0]) reference = results[0];
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      BenchRecord& rec = records[task.record_base + mi];
      rec.agreement = !(reference && results[mi]) || *results[mi] == *reference;
    }
  };

  const std::uint32_t workers =
      std::max<std::uint32_t>(1, std::min<std::uint32_t>(options.workers,
                                                         static_cast<std::uint32_t>(tasks.size())));
  if (workers == 1) {
    for (const PairTask& task : tasks) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          run_task(tasks[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return records;
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
  BenchSummary summary;
  for (const auto& rec : records) {
    TopologySummary& topo = summary.per_topology[rec.topology];
    MethodSummary& ms = topo.per_method[rec.method];
    ms.total_mps_time_ns += rec.mps_time_ns;
    ms.pair_count += 1;
    if (rec.status == RunStatus::timeout) {
      ms.timeout_count += 1;
    } else if (rec.status == RunStatus::ok) {
      ms.total_mcs_time_ns += rec.mcs_time_ns;
    }
    topo.agreement = topo.agreement && rec.agreement;
  }
  return summary;
}

std::string summary_to_json(const BenchSummary& summary) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, topo] : summary.per_topology) {
    nlohmann::json methods = nlohmann::json::object();
    for (const auto& [method, ms] : topo.per_method) {
      methods[to_string(method)] = {
          {"total_mps_time_ns", ms.total_mps_time_ns},
          {"total_mcs_time_ns", ms.total_mcs_time_ns},
          {"pairs", ms.pair_count},
          {"timeouts", ms.timeout_count},
      };
    }
    j[name] = {{"agreement", topo.agreement}, {"methods", std::move(methods)}};
  }
  return j.dump(2);
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << csv_escape(r.topology) << ',' << r.num_nodes << ',' << r.num_edges << ','
       << csv_escape(r.src) << ',' << csv_escape(r.dst) << ',' << to_string(r.method) << ','
       << to_string(r.status) << ',' << r.mps_time_ns << ',' << r.mcs_time_ns << ','
       << r.num_mps << ',';
    if (r.num_mcs) os << *r.num_mcs;
    os << ',' << (r.agreement ? "true" : "false") << '\n';
  }
  return os.str();
}

std::vector<BenchRecord> records_from_csv(std::string_view csv) {
  std::vector<BenchRecord> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    if (eol == std::string_view::npos) eol = csv.size();
    std::string_view line = csv.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kCsvHeader) {
        throw ParseError("CSV line 1: expected header \"" + std::string(kCsvHeader) + "\"");
      }
      saw_header = true;
      continue;
    }
    auto fields = csv_split_line(line, line_no);
    if (fields.size() != 12) {
      throw ParseError("CSV line " + std::to_string(line_no) + ": expected 12 fields, got " +
                       std::to_string(fields.size()));
    }
    BenchRecord r;
    r.topology = fields[0];
    r.num_nodes = parse_number<std::uint32_t>(fields[1], line_no);
    r.num_edges = parse_number<std::uint32_t>(fields[2], line_no);
    r.src = fields[3];
    r.dst = fields[4];
    const auto method = method_from_string(fields[5]);
    if (!method) {
      throw ParseError("CSV line " + std::to_string(line_no) + ": unknown method \"" +
                       fields[5] + "\"");
    }
    r.method = *method;
    if (fields[6] == "ok") {
      r.status = RunStatus::ok;
    } else if (fields[6] == "timeout") {
      r.status = RunStatus::timeout;
    } else if (fields[6] == "error") {
      r.status = RunStatus::error;
    } else {
      throw ParseError("CSV line " + std::to_string(line_no) + ": unknown status \"" +
                       fields[6] + "\"");
    }
    r.mps_time_ns = parse_number<std::int64_t>(fields[7], line_no);
    r.mcs_time_ns = parse_number<std::int64_t>(fields[8], line_no);
    r.num_mps = parse_number<std::uint64_t>(fields[9], line_no);
    if (!fields[10].empty()) r.num_mcs = parse_number<std::uint64_t>(fields[10], line_no);
    if (fields[11] == "true") {
      r.agreement = true;
    } else if (fields[11] == "false") {
      r.agreement = false;
    } else {
      throw ParseError("CSV line " + std::to_string(line_no) + ": agreement must be true/false");
    }
    records.push_back(std::move(r));
  }
  if (!saw_header) throw ParseError("CSV is empty: missing header");
  return records;
}

std::string plot_data_csv(const std::vector<BenchRecord>& records,
                          std::vector<std::string>* notes) {
  std::vector<std::string> topo_order;
  std::map<std::string, std::map<Method, std::pair<std::int64_t, std::int64_t>>> totals;
  for (const auto& r : records) {
    if (totals.find(r.topology) == totals.end()) topo_order.push_back(r.topology);
    auto& per_method = totals[r.topology];
    if (r.status != RunStatus::ok) {
      // Mirrors a bar chart that simply has no bar where a method never
      // finished: methods with no ok record produce no row.
      if (notes) {
        notes->push_back("excluded " + to_string(r.status) + " record: " + r.topology + " " +
                         r.src + ":" + r.dst + " " + to_string(r.method));
      }
      continue;
    }
    auto& [mps_total, mcs_total] = per_method[r.method];
    mps_total += r.mps_time_ns;
    mcs_total += r.mcs_time_ns;
  }

  std::ostringstream os;
  os << "topology,method,total_mps_time_ns,total_mcs_time_ns\n";
  for (const auto& name : topo_order) {
    for (Method m : {Method::fast, Method::shannon, Method::combinatorial}) {
      const auto it = totals[name].find(m);
      if (it == totals[name].end()) continue;
      os << csv_escape(name) << ',' << to_string(m) << ',' << it->second.first << ','
         << it->second.second << '\n';
    }
  }
  return os.str();
}

VerifyReport verify_pair_report(const Topology& t, std::uint32_t src, std::uint32_t dst,
                                const SetFamily& family, std::uint32_t completeness_limit) {
  VerifyReport report;
  for (const auto& member : family) {
    if (member.contains(t.node_element(src)) || member.contains(t.node_element(dst))) {
      throw InvalidPairError("cut family must not contain the source or destination");
    }
  }

  report.sound = true;
  for (const auto& member : family) {
    if (is_connected_after_removal(t, member, src, dst)) {
      report.sound = false;
      break;
    }
    bool minimal = true;
    member.for_each([&](std::uint32_t id) {
      if (!minimal) return;
      ElementSet reduced = member;
      reduced.erase(id);
      if (!is_connected_after_removal(t, reduced, src, dst)) minimal = false;
    });
    if (!minimal) {
      report.sound = false;
      break;
    }
  }

  const ElementSet universe = interior_universe(t, src, dst, false);
  if (universe.count() <= completeness_limit) {
    const MpsResult mps = find_mps(t, src, dst);
    const SetFamily reference = combinatorial_mcs(mps.interiors, universe);
    report.completeness =
        family == reference ? Completeness::verified : Completeness::failed;
  } else {
    report.completeness = Completeness::skipped;
  }
  return report;
}

bool verify_pair(const Topology& t, std::uint32_t src, std::uint32_t dst,
                 const SetFamily& family, std::uint32_t completeness_limit) {
  return verify_pair_report(t, src, dst, family, completeness_limit).ok();
}

}  // namespace fastmcs
