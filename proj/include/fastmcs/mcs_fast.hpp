#ifndef FASTMCS_MCS_FAST_HPP
#define FASTMCS_MCS_FAST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

#include "fastmcs/budget.hpp"
#include "fastmcs/set_family.hpp"

namespace fastmcs {

/// Partitions f around x: `without` keeps the clauses not containing x,
/// `with_reduced` the remaining clauses with x deleted (possibly ∅ when a
/// clause was exactly {x}).
std::pair<SetFamily, SetFamily> split(const SetFamily& f, std::uint32_t x);

/// Element with the highest occurrence count across clauses, smallest id
/// on ties; nullopt when no element occurs twice (leaf condition).
std::optional<std::uint32_t> pick_pivot(const SetFamily& f);

/// Minimal hitting sets of a family of pairwise disjoint clauses: the
/// cross product choosing one element per clause. {} -> {∅}; a family
/// containing ∅ -> empty family (unsatisfiable clause).
SetFamily evaluate_leaf(const SetFamily& f, const StepBudget* budget = nullptr);

/// Joins the hitting sets of the two branches of a split on x:
///   cross_union(left_hs, minimize({{x}} ∪ right_hs))
/// i.e. every without-branch hitting set is completed either by x itself
/// or by a hitting set of the reduced with-branch clauses.
SetFamily combine(const SetFamily& left_hs, const SetFamily& right_hs, std::uint32_t x,
                  const StepBudget* budget = nullptr);

/// Minimal cut sets from a minimal-path interior family: the ⊆-minimal
/// element sets hitting every member. Splits on the most frequent element
/// and combines bottom-up with eager absorption. {∅} input (directly
/// connected pair) -> empty family; empty input (disconnected pair) -> {∅}.
SetFamily fast_mcs(const SetFamily& interiors, const StepBudget* budget = nullptr);

/// Materialized decision tree, used by tests to check the structural
/// invariants and by anyone wanting to inspect the recursion. fast_mcs
/// itself runs the fused single-pass recursion.
struct DecisionNode {
  SetFamily clauses;
  std::optional<std::uint32_t> pivot;  // present iff internal
  std::unique_ptr<DecisionNode> left;   // without-pivot branch
  std::unique_ptr<DecisionNode> right;  // with-pivot branch, pivot removed
  SetFamily evaluation;                 // filled by evaluate_tree

  bool is_leaf() const { return !pivot.has_value(); }
};

std::unique_ptr<DecisionNode> build_decision_tree(const SetFamily& clauses);
/// Bottom-up evaluation; fills every node's `evaluation` and returns the
/// root's (== fast_mcs of the root clauses).
const SetFamily& evaluate_tree(DecisionNode& root);

}  // namespace fastmcs

#endif  // FASTMCS_MCS_FAST_HPP
