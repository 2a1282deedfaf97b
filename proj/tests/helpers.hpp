// Shared fixtures and independent oracles for the test suites. Everything
// here is deliberately brute-force so it cannot share a bug with the
// implementations under test.

#ifndef FASTMCS_TESTS_HELPERS_HPP
#define FASTMCS_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fastmcs/set_family.hpp"
#include "fastmcs/topology.hpp"

namespace fastmcs::testing {

/// 'D' -> 3: uppercase letters map to element ids A=0..Z=25.
constexpr std::uint32_t eid(char c) { return static_cast<std::uint32_t>(c - 'A'); }

/// "ABE" -> {0,1,4}.
inline ElementSet es(std::string_view letters) {
  ElementSet s;
  for (char c : letters) s.insert(static_cast<std::uint32_t>(c - 'A'));
  return s;
}

inline SetFamily fam(std::initializer_list<std::string_view> sets) {
  SetFamily f;
  for (auto letters : sets) f.push_back(es(letters));
  return f;
}

/// The 8-node, 10-edge two-terminal mesh used as the worked example
/// throughout the suites; pair (S,T) has 4 minimal paths and 5 minimal
/// cuts.
inline constexpr std::string_view kDemoEdgeList =
    "S A\nS C\nA B\nA D\nC D\nD B\nD E\nE F\nB T\nF T";

inline Topology demo_topology() {
  return Topology::parse(kDemoEdgeList, TopologyFormat::edge_list, "demo");
}

/// O(n²) pairwise-subset filter; reference semantics for minimize().
inline SetFamily naive_minimize(const SetFamily& f) {
  SetFamily out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < f.size() && !dominated; ++j) {
      if (i == j) continue;
      if (f[j].is_subset_of(f[i]) && f[j] != f[i]) dominated = true;
      if (f[j] == f[i] && j < i) dominated = true;  // drop duplicates, keep first
    }
    if (!dominated) out.push_back(f[i]);
  }
  return out;
}

/// Definitional minimal hitting sets: every subset of the universe is
/// tested for "hits all clauses and no single-element reduction does".
inline SetFamily brute_hitting_sets(const SetFamily& clauses, const ElementSet& universe) {
  const std::vector<std::uint32_t> ids = universe.ids();
  const std::size_t n = ids.size();
  SetFamily out;
  const auto hits_all = [&](const ElementSet& s) {
    for (const auto& c : clauses) {
      if (!s.intersects(c)) return false;
    }
    return true;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.insert(ids[i]);
    }
    if (!hits_all(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      ElementSet reduced = s;
      reduced.erase(ids[i]);
      if (hits_all(reduced)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  out.sort_canonical();
  return out;
}

/// Random family over elements 0..max_element, for property tests.
inline SetFamily random_family(std::mt19937_64& rng, std::size_t max_sets,
                               std::uint32_t max_element) {
  std::uniform_int_distribution<std::size_t> num_sets(0, max_sets);
  std::uniform_int_distribution<std::uint32_t> element(0, max_element);
  std::uniform_int_distribution<std::size_t> set_size(0, max_element + 1);
  SetFamily f;
  const std::size_t n = num_sets(rng);
  for (std::size_t i = 0; i < n; ++i) {
    ElementSet s;
    const std::size_t k = set_size(rng);
    for (std::size_t j = 0; j < k; ++j) s.insert(element(rng));
    f.push_back(std::move(s));
  }
  return f;
}

}  // namespace fastmcs::testing

#endif  // FASTMCS_TESTS_HELPERS_HPP
