#include "fastmcs/random_graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fastmcs {

namespace {

std::string default_name(std::uint32_t n, double p, std::uint64_t seed) {
  std::ostringstream os;
  os << "gen_n" << n << "_p" << p << "_s" << seed;
  return os.str();
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Topology generate_connected_graph(std::uint32_t num_nodes, double edge_probability,
                                  std::uint64_t seed, std::string name) {
  if (num_nodes < 2) throw std::invalid_argument("generator needs at least two nodes");
  if (edge_probability < 0.0 || edge_probability > 1.0) {
    throw std::invalid_argument("edge probability must lie in [0,1]");
  }
  if (name.empty()) name = default_name(num_nodes, edge_probability, seed);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> parent(num_nodes);
  for (std::uint32_t i = 0; i < num_nodes; ++i) parent[i] = i;

  for (std::uint32_t u = 0; u < num_nodes; ++u) {
    for (std::uint32_t v = u + 1; v < num_nodes; ++v) {
      if (coin(rng) < edge_probability) {
        edges.emplace_back(u, v);
        parent[find_root(parent, u)] = find_root(parent, v);
      }
    }
  }

  // Stitch remaining components with uniformly chosen cross edges.
  std::uniform_int_distribution<std::uint32_t> pick(0, num_nodes - 1);
  while (true) {
    std::vector<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < num_nodes; ++i) {
      if (find_root(parent, i) == i) roots.push_back(i);
    }
    if (roots.size() == 1) break;
    std::uint32_t u = pick(rng);
    std::uint32_t v = pick(rng);
    if (find_root(parent, u) == find_root(parent, v)) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    parent[find_root(parent, u)] = find_root(parent, v);
  }

  const std::size_t width = std::max<std::size_t>(2, std::to_string(num_nodes - 1).size());
  std::vector<std::string> labels;
  labels.reserve(num_nodes);
  for (std::uint32_t i = 0; i < num_nodes; ++i) {
    std::string digits = std::to_string(i);
    labels.push_back("n" + std::string(width - digits.size(), '0') + digits);
  }

  std::vector<std::pair<std::string, std::string>> labeled;
  labeled.reserve(edges.size());
  for (const auto& [u, v] : edges) labeled.emplace_back(labels[u], labels[v]);
  return Topology::from_edges(std::move(name), labels, labeled);
}

}  // namespace fastmcs
