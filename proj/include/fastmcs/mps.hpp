#ifndef FASTMCS_MPS_HPP
#define FASTMCS_MPS_HPP

#include <cstdint>
#include <vector>

#include "fastmcs/budget.hpp"
#include "fastmcs/set_family.hpp"
#include "fastmcs/topology.hpp"

namespace fastmcs {

/// Minimal path sets of one source-destination pair.
struct MpsResult {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  /// Full node paths including src and dst, in discovery order (neighbor
  /// iteration is ascending, so discovery order is deterministic).
  std::vector<std::vector<std::uint32_t>> paths;
  /// Interior element sets: path nodes minus {src,dst}; in edge mode the
  /// traversed edges (including those incident to src/dst) are appended.
  /// Always an antichain.
  SetFamily interiors;
};

/// Enumerates the minimal path sets between src and dst with a pruned DFS:
/// a neighbor is expanded only when it is adjacent to no path node other
/// than the current endpoint. The surviving paths are exactly the
/// chordless (induced) src-dst paths, whose interiors are the minimal path
/// sets over the node universe. Throws InvalidPairError when src == dst.
MpsResult find_mps(const Topology& t, std::uint32_t src, std::uint32_t dst,
                   bool include_edges = false, const StepBudget* budget = nullptr);

/// Test oracle: enumerates ALL simple src-dst paths (no pruning), takes
/// their interior node sets and minimizes. Exponential; small graphs only.
SetFamily mps_oracle(const Topology& t, std::uint32_t src, std::uint32_t dst);

}  // namespace fastmcs

#endif  // FASTMCS_MPS_HPP
