#ifndef FASTMCS_TOPOLOGY_HPP
#define FASTMCS_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fastmcs/set_family.hpp"

namespace fastmcs {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidPairError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class TopologyFormat { auto_detect, edge_list, json };

/// Element of a topology: a node or an edge. Nodes order before edges,
/// then by index; flat_id realizes that order as a dense integer
/// (nodes 0..|V|-1, edges |V|..|V|+|E|-1).
struct ElementId {
  enum class Kind { node, edge };
  Kind kind;
  std::uint32_t index;

  friend bool operator==(const ElementId&, const ElementId&) = default;
  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

/// Immutable undirected graph. Node labels map to dense indices in label
/// sort order; edges are stored with sorted endpoints and indexed in
/// sorted-endpoint-pair order. Self-loops are rejected and parallel edges
/// collapse while parsing, so every instance satisfies the invariants.
/// Safe to share across threads.
class Topology {
public:
  /// Throws ParseError on malformed input, unknown endpoints, self-loops,
  /// or an empty graph.
  static Topology parse(std::string_view text, TopologyFormat format,
                        std::string name = "topology");

  /// Builds from raw label pairs (used by the generator); same validation
  /// as parse.
  static Topology from_edges(std::string name,
                             const std::vector<std::string>& nodes,
                             const std::vector<std::pair<std::string, std::string>>& edges);

  const std::string& name() const { return name_; }
  std::uint32_t num_nodes() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::uint32_t num_edges() const { return static_cast<std::uint32_t>(edges_.size()); }

  /// Labels in index order (== sorted order).
  const std::vector<std::string>& node_labels() const { return labels_; }
  const std::string& label(std::uint32_t node) const { return labels_[node]; }
  std::optional<std::uint32_t> node_index(std::string_view label) const;
  /// Endpoints of edge i, as node indices with first < second.
  std::pair<std::uint32_t, std::uint32_t> edge(std::uint32_t i) const { return edges_[i]; }
  std::optional<std::uint32_t> edge_index(std::uint32_t u, std::uint32_t v) const;

  /// Neighbors of a node in ascending index order.
  const std::vector<std::uint32_t>& neighbors(std::uint32_t node) const {
    return adjacency_[node];
  }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;

  std::uint32_t node_element(std::uint32_t node) const { return node; }
  std::uint32_t edge_element(std::uint32_t edge) const { return num_nodes() + edge; }
  ElementId element_id(std::uint32_t flat) const;
  /// Human-readable label of an element ("A" for nodes, "A-B" for edges).
  std::string element_label(std::uint32_t flat) const;

  /// Canonical JSON serialization; parse(to_json(), json) round-trips.
  std::string to_json() const;

private:
  Topology() = default;

  std::string name_;
  std::vector<std::string> labels_;                           // sorted
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;  // sorted pairs
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// True iff src and dst are still connected after deleting the elements in
/// `removed` (node elements delete the node, edge elements delete the
/// edge). Throws InvalidPairError when src or dst is itself removed.
bool is_connected_after_removal(const Topology& t, const ElementSet& removed,
                                std::uint32_t src, std::uint32_t dst);

}  // namespace fastmcs

#endif  // FASTMCS_TOPOLOGY_HPP
