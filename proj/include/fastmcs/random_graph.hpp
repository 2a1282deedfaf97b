#ifndef FASTMCS_RANDOM_GRAPH_HPP
#define FASTMCS_RANDOM_GRAPH_HPP

#include <cstdint>
#include <string>

#include "fastmcs/topology.hpp"

namespace fastmcs {

/// Seeded connected Erdős–Rényi-style graph: every pair becomes an edge
/// with probability p, then components are stitched together with random
/// cross edges until connected. Node labels are zero-padded ("n00", ...)
/// so label order equals generation order. Deterministic in (n, p, seed).
Topology generate_connected_graph(std::uint32_t num_nodes, double edge_probability,
                                  std::uint64_t seed, std::string name = "");

}  // namespace fastmcs

#endif  // FASTMCS_RANDOM_GRAPH_HPP
