#include "fastmcs/topology.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fastmcs {

namespace {

using json = nlohmann::json;

struct RawGraph {
  std::vector<std::string> nodes;  // may be empty: infer from edges
  bool nodes_given = false;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string name;  // optional override from JSON
};

RawGraph parse_edge_list(std::string_view text) {
  RawGraph raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string> tokens;
    std::istringstream is{std::string(line)};
    for (std::string tok; is >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two whitespace-separated labels, got " +
                       std::to_string(tokens.size()));
    }
    raw.edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
  }
  return raw;
}

RawGraph parse_json_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");

  RawGraph raw;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    raw.name = j["name"].get<std::string>();
  }
  if (j.contains("nodes")) {
    if (!j["nodes"].is_array()) throw ParseError("\"nodes\" must be an array of strings");
    raw.nodes_given = true;
    for (const auto& n : j["nodes"]) {
      if (!n.is_string()) throw ParseError("\"nodes\" must be an array of strings");
      raw.nodes.push_back(n.get<std::string>());
    }
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw ParseError("missing \"edges\" array");
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("each edge must be a 2-element array of strings");
    }
    raw.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return raw;
}

TopologyFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? TopologyFormat::json : TopologyFormat::edge_list;
  }
  return TopologyFormat::edge_list;
}

}  // namespace

Topology Topology::parse(std::string_view text, TopologyFormat format, std::string name) {
  if (format == TopologyFormat::auto_detect) format = detect_format(text);
  RawGraph raw = format == TopologyFormat::json ? parse_json_graph(text)
                                                : parse_edge_list(text);
  if (!raw.name.empty()) name = raw.name;

  std::vector<std::string> nodes = raw.nodes;
  if (!raw.nodes_given) {
    std::set<std::string> seen;
    for (const auto& [a, b] : raw.edges) {
      seen.insert(a);
      seen.insert(b);
    }
    nodes.assign(seen.begin(), seen.end());
  }
  return from_edges(std::move(name), nodes, raw.edges);
}

Topology Topology::from_edges(std::string name, const std::vector<std::string>& nodes,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
  Topology t;
  t.name_ = std::move(name);
  t.labels_ = nodes;
  std::sort(t.labels_.begin(), t.labels_.end());
  if (std::adjacent_find(t.labels_.begin(), t.labels_.end()) != t.labels_.end()) {
    throw ParseError("duplicate node label");
  }
  if (t.labels_.empty()) throw ParseError("empty graph: no nodes");

  std::map<std::string_view, std::uint32_t> index;
  for (std::uint32_t i = 0; i < t.labels_.size(); ++i) index[t.labels_[i]] = i;

  std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set;
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) throw ParseError("unknown node in edge: \"" + a + "\"");
    if (ib == index.end()) throw ParseError("unknown node in edge: \"" + b + "\"");
    if (ia->second == ib->second) {
      throw ParseError("self-loop rejected: \"" + a + "\" - \"" + b + "\"");
    }
    const std::pair<std::uint32_t, std::uint32_t> key = std::minmax(ia->second, ib->second);
    edge_set.insert(key);  // parallel edges collapse
  }

  t.edges_.assign(edge_set.begin(), edge_set.end());
  t.adjacency_.resize(t.labels_.size());
  for (const auto& [u, v] : t.edges_) {
    t.adjacency_[u].push_back(v);
    t.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

std::optional<std::uint32_t> Topology::node_index(std::string_view label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_.begin());
}

std::optional<std::uint32_t> Topology::edge_index(std::uint32_t u, std::uint32_t v) const {
  const std::pair<std::uint32_t, std::uint32_t> key = std::minmax(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - edges_.begin());
}

bool Topology::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

ElementId Topology::element_id(std::uint32_t flat) const {
  if (flat < num_nodes()) return {ElementId::Kind::node, flat};
  return {ElementId::Kind::edge, flat - num_nodes()};
}

std::string Topology::element_label(std::uint32_t flat) const {
  const ElementId id = element_id(flat);
  if (id.kind == ElementId::Kind::node) return labels_[id.index];
  const auto [u, v] = edges_[id.index];
  return labels_[u] + "-" + labels_[v];
}

std::string Topology::to_json() const {
  json j;
  j["name"] = name_;
  j["nodes"] = labels_;
  json edges = json::array();
  for (const auto& [u, v] : edges_) {
    edges.push_back(json::array({labels_[u], labels_[v]}));
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

bool is_connected_after_removal(const Topology& t, const ElementSet& removed,
                                std::uint32_t src, std::uint32_t dst) {
  if (removed.contains(t.node_element(src)) || removed.contains(t.node_element(dst))) {
    throw InvalidPairError("removal set must not contain the source or destination");
  }
  if (src == dst) return true;

  bool has_edge_elements = false;
  removed.for_each([&](std::uint32_t id) {
    if (id >= t.num_nodes()) has_edge_elements = true;
  });

  std::vector<bool> visited(t.num_nodes(), false);
  std::vector<std::uint32_t> stack{src};
  visited[src] = true;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t v : t.neighbors(u)) {
      if (visited[v] || removed.contains(t.node_element(v))) continue;
      if (has_edge_elements) {
        const auto e = t.edge_index(u, v);
        if (e && removed.contains(t.edge_element(*e))) continue;
      }
      if (v == dst) return true;
      visited[v] = true;
      stack.push_back(v);
    }
  }
  return false;
}

}  // namespace fastmcs
