#include "doctest.h"

#include <random>

#include "fastmcs/mcs_fast.hpp"
#include "fastmcs/mps.hpp"
#include "fastmcs/random_graph.hpp"
#include "helpers.hpp"

using namespace fastmcs;
using namespace fastmcs::testing;

TEST_SUITE_BEGIN("mcs_fast");

namespace {

// The demo interiors: the CNF the engines complement.
const SetFamily kDemoInteriors = fam({"AB", "ADEF", "CDEF", "CDB"});
const SetFamily kDemoMcs = fam({"AC", "AD", "BD", "BE", "BF"});

void check_partition(const DecisionNode& node) {
  if (node.is_leaf()) {
    REQUIRE(!pick_pivot(node.clauses).has_value());  // pairwise disjoint
    return;
  }
  REQUIRE(node.left != nullptr);
  REQUIRE(node.right != nullptr);
  // The pivot must repeat within the clauses of this node.
  std::size_t occurrences = 0;
  for (const auto& c : node.clauses) {
    if (c.contains(*node.pivot)) ++occurrences;
  }
  REQUIRE(occurrences >= 2);
  // left.clauses ∪ {c ∪ {pivot} : c ∈ right.clauses} == clauses.
  SetFamily rebuilt;
  for (const auto& c : node.left->clauses) rebuilt.push_back(c);
  for (const auto& c : node.right->clauses) {
    rebuilt.push_back(c.union_with(ElementSet::of({*node.pivot})));
  }
  REQUIRE(rebuilt.canonical() == node.clauses.canonical());
  check_partition(*node.left);
  check_partition(*node.right);
}

}  // namespace

TEST_CASE("split partitions around the pivot") {
  const auto [without, with_reduced] = split(kDemoInteriors, eid('D'));
  CHECK(without == fam({"AB"}));
  CHECK(with_reduced == fam({"AEF", "CEF", "CB"}));

  SUBCASE("second-level split of the demo family") {
    const auto [wo, wr] = split(fam({"AEF", "CEF", "CB"}), eid('C'));
    CHECK(wo == fam({"AEF"}));
    CHECK(wr == fam({"EF", "B"}));
  }
  SUBCASE("clause equal to the pivot leaves the empty set behind") {
    const auto [wo, wr] = split(fam({"X"}), eid('X'));
    CHECK(wo == SetFamily{});
    CHECK(wr == SetFamily::unit());
  }
}

TEST_CASE("pick_pivot: most frequent element, smallest id on ties") {
  CHECK(pick_pivot(kDemoInteriors) == eid('D'));  // D occurs 3 times
  CHECK(!pick_pivot(fam({"A", "B"})).has_value());        // nothing repeats
  CHECK(pick_pivot(fam({"AB", "AC", "BC"})) == eid('A'));  // three-way tie
  CHECK(!pick_pivot(SetFamily{}).has_value());
  CHECK(!pick_pivot(SetFamily::unit()).has_value());
}

TEST_CASE("evaluate_leaf: cross product over disjoint clauses") {
  CHECK(evaluate_leaf(fam({"EF", "B"})) == fam({"BE", "BF"}));
  CHECK(evaluate_leaf(SetFamily{}) == SetFamily::unit());
  CHECK(evaluate_leaf(fam({"ABC"})) == fam({"A", "B", "C"}));
  // An empty clause can never be hit.
  CHECK(evaluate_leaf(SetFamily::unit()) == SetFamily{});
}

TEST_CASE("combine completes the without-branch with the pivot or the with-branch") {
  SUBCASE("inner combine of the demo tree") {
    const SetFamily got =
        combine(fam({"A", "E", "F"}), fam({"BE", "BF"}), eid('C'));
    CHECK(got == fam({"AC", "CE", "CF", "BE", "BF"}));
    // Independent route: the same answer by definitional hitting sets.
    CHECK(got == brute_hitting_sets(fam({"AEF", "CEF", "CB"}), es("ABCEF")));
  }
  SUBCASE("top-level combine reproduces the demo answer") {
    CHECK(combine(fam({"A", "B"}), fam({"AC", "CE", "CF", "BE", "BF"}), eid('D')) ==
          kDemoMcs);
  }
  SUBCASE("no without-clauses: pivot joins the right branch") {
    CHECK(combine(SetFamily::unit(), fam({"A"}), eid('B')) == fam({"B", "A"}));
  }
  SUBCASE("unsatisfiable with-branch: pivot is forced into every set") {
    CHECK(combine(fam({"A", "B"}), SetFamily{}, eid('X')) == fam({"AX", "BX"}));
  }
}

TEST_CASE("fast_mcs on the demo fixture") {
  CHECK(fast_mcs(kDemoInteriors) == kDemoMcs);
}

TEST_CASE("fast_mcs degenerate conventions") {
  CHECK(fast_mcs(fam({"X"})) == fam({"X"}));
  CHECK(fast_mcs(SetFamily::unit()) == SetFamily{});  // directly connected pair
  CHECK(fast_mcs(SetFamily{}) == SetFamily::unit());  // already disconnected pair
}

TEST_CASE("fast_mcs equals brute force on small families") {
  CHECK(fast_mcs(fam({"AB", "BC"})) == fam({"B", "AC"}));
  CHECK(fast_mcs(fam({"AB", "BC"})) == brute_hitting_sets(fam({"AB", "BC"}), es("ABC")));

  std::mt19937_64 rng(2025);
  std::uniform_int_distribution<std::uint32_t> element(0, 7);
  std::uniform_int_distribution<std::size_t> set_size(1, 4);
  std::uniform_int_distribution<std::size_t> num_sets(1, 6);
  for (int iter = 0; iter < 300; ++iter) {
    SetFamily clauses;
    const std::size_t n = num_sets(rng);
    for (std::size_t i = 0; i < n; ++i) {
      ElementSet s;
      const std::size_t k = set_size(rng);
      for (std::size_t j = 0; j < k; ++j) s.insert(element(rng));
      clauses.absorb_insert(s);  // engines take antichain inputs
    }
    const SetFamily got = fast_mcs(clauses);
    REQUIRE(got == brute_hitting_sets(clauses, es("ABCDEFGH")));
    REQUIRE(got.is_antichain());
    // Duality: every cut hits every clause.
    for (const auto& cut : got) {
      for (const auto& clause : clauses) REQUIRE(cut.intersects(clause));
    }
  }
}

TEST_CASE("cut family is correct against the connectivity definition") {
  const Topology t = demo_topology();
  const std::uint32_t s = *t.node_index("S");
  const std::uint32_t d = *t.node_index("T");
  const SetFamily mcs = fast_mcs(find_mps(t, s, d).interiors);
  REQUIRE(mcs == kDemoMcs);
  for (const auto& cut : mcs) {
    CHECK(!is_connected_after_removal(t, cut, s, d));
    cut.for_each([&](std::uint32_t id) {
      ElementSet reduced = cut;
      reduced.erase(id);
      CHECK(is_connected_after_removal(t, reduced, s, d));
    });
  }
}

TEST_CASE("materialized decision tree") {
  const auto root = build_decision_tree(kDemoInteriors);
  REQUIRE(!root->is_leaf());
  CHECK(root->pivot == eid('D'));
  CHECK(root->left->clauses == fam({"AB"}));
  CHECK(root->right->clauses == fam({"AEF", "CEF", "CB"}));
  CHECK(root->right->pivot == eid('C'));
  check_partition(*root);

  SUBCASE("tree evaluation equals the fused recursion") {
    auto tree = build_decision_tree(kDemoInteriors);
    CHECK(evaluate_tree(*tree) == fast_mcs(kDemoInteriors));
    CHECK(tree->right->evaluation == fam({"AC", "CE", "CF", "BE", "BF"}));
  }
}

TEST_CASE("tree structure invariants hold on random graph instances") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 25; ++iter) {
    const std::uint32_t n = 5 + iter % 6;
    const Topology t = generate_connected_graph(n, 0.35, 640 + iter);
    const auto interiors = find_mps(t, 0, n - 1).interiors;
    auto tree = build_decision_tree(interiors);
    check_partition(*tree);
    REQUIRE(evaluate_tree(*tree) == fast_mcs(interiors));
  }
}

TEST_CASE("budget aborts long computations") {
  // A dense instance plus a budget that trips immediately.
  SetFamily clauses;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> element(0, 19);
  for (int i = 0; i < 12; ++i) {
    ElementSet s;
    for (int j = 0; j < 5; ++j) s.insert(element(rng));
    clauses.absorb_insert(s);
  }
  const StepBudget tripped([] { return true; }, 1);
  CHECK_THROWS_AS(fast_mcs(clauses, &tripped), BudgetExceeded);
}

TEST_SUITE_END();
