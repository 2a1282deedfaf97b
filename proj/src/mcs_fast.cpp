#include "fastmcs/mcs_fast.hpp"

#include <vector>

namespace fastmcs {

std::pair<SetFamily, SetFamily> split(const SetFamily& f, std::uint32_t x) {
  SetFamily without;
  SetFamily with_reduced;
  ElementSet pivot_set = ElementSet::of({x});
  for (const auto& clause : f) {
    if (clause.contains(x)) {
      with_reduced.push_back(clause.difference(pivot_set));
    } else {
      without.push_back(clause);
    }
  }
  return {std::move(without), std::move(with_reduced)};
}

std::optional<std::uint32_t> pick_pivot(const SetFamily& f) {
  std::vector<std::uint32_t> counts;
  for (const auto& clause : f) {
    clause.for_each([&](std::uint32_t id) {
      if (id >= counts.size()) counts.resize(id + 1, 0);
      ++counts[id];
    });
  }
  std::uint32_t best = 0;
  std::uint32_t best_count = 0;
  for (std::uint32_t id = 0; id < counts.size(); ++id) {
    if (counts[id] > best_count) {  // strict: first maximum = smallest id
      best_count = counts[id];
      best = id;
    }
  }
  if (best_count < 2) return std::nullopt;
  return best;
}

SetFamily evaluate_leaf(const SetFamily& f, const StepBudget* budget) {
  SetFamily acc = SetFamily::unit();
  for (const auto& clause : f) {
    SetFamily choices;
    clause.for_each([&](std::uint32_t id) { choices.push_back(ElementSet::of({id})); });
    tick(budget, acc.size() * (choices.size() + 1));
    acc = cross_union(acc, choices);  // ∅ clause -> empty family, as required
  }
  return acc;
}

SetFamily combine(const SetFamily& left_hs, const SetFamily& right_hs, std::uint32_t x,
                  const StepBudget* budget) {
  SetFamily completions = right_hs;
  completions.absorb_insert(ElementSet::of({x}));
  tick(budget, left_hs.size() * completions.size());
  return cross_union(left_hs, completions);
}

namespace {

SetFamily mcs_recursive(const SetFamily& clauses, const StepBudget* budget) {
  tick(budget, clauses.size());
  const auto pivot = pick_pivot(clauses);
  if (!pivot) return evaluate_leaf(clauses, budget);
  auto [without, with_reduced] = split(clauses, *pivot);
  SetFamily left = mcs_recursive(without, budget);
  SetFamily right = mcs_recursive(with_reduced, budget);
  return combine(left, right, *pivot, budget);
}

}  // namespace

SetFamily fast_mcs(const SetFamily& interiors, const StepBudget* budget) {
  return mcs_recursive(interiors, budget);
}

std::unique_ptr<DecisionNode> build_decision_tree(const SetFamily& clauses) {
  auto node = std::make_unique<DecisionNode>();
  node->clauses = clauses;
  node->pivot = pick_pivot(clauses);
  if (node->pivot) {
    auto [without, with_reduced] = split(clauses, *node->pivot);
    node->left = build_decision_tree(without);
    node->right = build_decision_tree(with_reduced);
  }
  return node;
}

const SetFamily& evaluate_tree(DecisionNode& root) {
  if (root.is_leaf()) {
    root.evaluation = evaluate_leaf(root.clauses);
  } else {
    const SetFamily& left = evaluate_tree(*root.left);
    const SetFamily& right = evaluate_tree(*root.right);
    root.evaluation = combine(left, right, *root.pivot);
  }
  return root.evaluation;
}

}  // namespace fastmcs
