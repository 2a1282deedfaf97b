#include "fastmcs/mps.hpp"

#include <algorithm>

namespace fastmcs {

namespace {

struct DfsFrame {
  std::uint32_t node;
  std::size_t next_neighbor;
};

}  // namespace

MpsResult find_mps(const Topology& t, std::uint32_t src, std::uint32_t dst,
                   bool include_edges, const StepBudget* budget) {
  if (src == dst) throw InvalidPairError("source and destination must differ");
  if (src >= t.num_nodes() || dst >= t.num_nodes()) {
    throw InvalidPairError("source or destination is not a node of the topology");
  }

  MpsResult result;
  result.src = src;
  result.dst = dst;

  // Explicit stack: path depth can reach |V| and graphs of a few hundred
  // nodes must not be limited by the call stack.
  std::vector<DfsFrame> stack;
  std::vector<std::uint32_t> path;
  std::vector<bool> on_path(t.num_nodes(), false);

  stack.push_back({src, 0});
  path.push_back(src);
  on_path[src] = true;

  const auto expandable = [&](std::uint32_t candidate) {
    if (on_path[candidate]) return false;
    // Pruning rule: reject the candidate when some path node other than
    // the current endpoint already reaches it directly; such a detour can
    // never yield a minimal path set.
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (t.adjacent(path[i], candidate)) return false;
    }
    return true;
  };

  const auto record_path = [&] {
    result.paths.push_back(path);
    ElementSet interior;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      interior.insert(t.node_element(path[i]));
    }
    if (include_edges) {
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto e = t.edge_index(path[i], path[i + 1]);
        interior.insert(t.edge_element(*e));
      }
    }
    result.interiors.push_back(std::move(interior));
  };

  while (!stack.empty()) {
    DfsFrame& frame = stack.back();
    const auto& nbrs = t.neighbors(frame.node);
    if (frame.next_neighbor >= nbrs.size()) {
      on_path[frame.node] = false;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    const std::uint32_t next = nbrs[frame.next_neighbor++];
    tick(budget);
    if (!expandable(next)) continue;

    path.push_back(next);
    if (next == dst) {
      record_path();
      path.pop_back();
    } else {
      on_path[next] = true;
      stack.push_back({next, 0});
    }
  }

  // Chordless interiors are pairwise incomparable already; the antichain
  // invariant is asserted by the test suite rather than re-minimized here.
  return result;
}

SetFamily mps_oracle(const Topology& t, std::uint32_t src, std::uint32_t dst) {
  if (src == dst) throw InvalidPairError("source and destination must differ");

  SetFamily all;
  std::vector<DfsFrame> stack;
  std::vector<std::uint32_t> path{src};
  std::vector<bool> on_path(t.num_nodes(), false);
  stack.push_back({src, 0});
  on_path[src] = true;

  while (!stack.empty()) {
    DfsFrame& frame = stack.back();
    const auto& nbrs = t.neighbors(frame.node);
    if (frame.next_neighbor >= nbrs.size()) {
      on_path[frame.node] = false;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    const std::uint32_t next = nbrs[frame.next_neighbor++];
    if (on_path[next]) continue;
    if (next == dst) {
      ElementSet interior;
      for (std::size_t i = 1; i < path.size(); ++i) interior.insert(t.node_element(path[i]));
      all.push_back(std::move(interior));
      continue;
    }
    path.push_back(next);
    on_path[next] = true;
    stack.push_back({next, 0});
  }
  return minimize(all);
}

}  // namespace fastmcs
