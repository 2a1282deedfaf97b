#ifndef FASTMCS_MCS_BASELINES_HPP
#define FASTMCS_MCS_BASELINES_HPP

#include <cstdint>
#include <optional>

#include "fastmcs/budget.hpp"
#include "fastmcs/set_family.hpp"

namespace fastmcs {

/// Monotone sum-of-products success function: one positive product term
/// per minimal path interior. Antichain by construction.
struct SopSuccess {
  SetFamily terms;
};

/// Size-by-size combinatorial search, the brute-force reference engine:
/// for k = 1.. it tests every k-subset of the universe that is not a
/// superset of an already-found cut set, accepting those intersecting
/// every interior. Stops at the first k with no candidate columns left.
/// Degenerate conventions match fast_mcs. `prune_supersets` exists so the
/// tests can show pruning does not change the answer.
SetFamily combinatorial_mcs(const SetFamily& interiors, const ElementSet& universe,
                            const StepBudget* budget = nullptr,
                            bool prune_supersets = true);

/// One expansion step about the most frequent variable:
///   cofactor_one  = S_{x=1} = minimize(reduced with-terms ∪ without-terms)
///   cofactor_zero = S_{x=0} = without-terms
/// nullopt when no variable repeats (expansion bottoms out).
struct ShannonSplit {
  std::uint32_t pivot;
  SetFamily cofactor_one;
  SetFamily cofactor_zero;
};
std::optional<ShannonSplit> shannon_split(const SetFamily& terms);

/// Complements a monotone success function by recursive expansion about
/// the most frequent variable:
///   MCS(S) = minimize( MCS(S_{x=1}) ∪ { c ∪ {x} : c ∈ MCS(S_{x=0}) } )
/// bottoming out in the disjoint-terms cross product. Equals fast_mcs on
/// the same interiors; the recursion shape (S_{x=1} keeps the
/// without-terms) is what distinguishes its cost profile.
SetFamily shannon_mcs(const SopSuccess& s, const StepBudget* budget = nullptr);

}  // namespace fastmcs

#endif  // FASTMCS_MCS_BASELINES_HPP
