#include "fastmcs/mcs_baselines.hpp"

#include <vector>

#include "fastmcs/mcs_fast.hpp"

namespace fastmcs {

namespace {

bool hits_all(const ElementSet& candidate, const SetFamily& interiors) {
  for (const auto& interior : interiors) {
    if (!candidate.intersects(interior)) return false;
  }
  return true;
}

}  // namespace

SetFamily combinatorial_mcs(const SetFamily& interiors, const ElementSet& universe,
                            const StepBudget* budget, bool prune_supersets) {
  if (interiors.empty()) return SetFamily::unit();
  if (interiors.contains_empty_set()) return SetFamily{};

  const std::vector<std::uint32_t> ids = universe.ids();
  const std::size_t n = ids.size();
  SetFamily found;

  // Ascending-size column sweep. indices holds the current k-combination
  // of positions into ids, advanced in lexicographic order.
  for (std::size_t k = 1; k <= n; ++k) {
    bool any_candidate = false;
    std::vector<std::size_t> indices(k);
    for (std::size_t i = 0; i < k; ++i) indices[i] = i;
    while (true) {
      tick(budget, 1 + interiors.size());  // a candidate costs one pass over the rows
      ElementSet candidate;
      for (std::size_t i : indices) candidate.insert(ids[i]);

      if (prune_supersets) {
        if (!found.dominates(candidate)) {
          any_candidate = true;
          if (hits_all(candidate, interiors)) {
            // Candidates of one size are incomparable and smaller cut
            // sets would have dominated, so plain append keeps the
            // antichain.
            found.push_back(candidate);
          }
        }
      } else {
        any_candidate = true;
        // Definition check: a cut whose every one-element reduction is
        // not a cut.
        if (hits_all(candidate, interiors)) {
          bool minimal = true;
          for (std::size_t i : indices) {
            ElementSet reduced = candidate;
            reduced.erase(ids[i]);
            if (hits_all(reduced, interiors)) {
              minimal = false;
              break;
            }
          }
          if (minimal) found.push_back(candidate);
        }
      }

      // Next k-combination.
      std::size_t i = k;
      while (i > 0 && indices[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++indices[i - 1];
      for (std::size_t j = i; j < k; ++j) indices[j] = indices[j - 1] + 1;
    }
    // Once every k-subset is dominated, so is every larger subset.
    if (!any_candidate) break;
  }

  found.sort_canonical();
  return found;
}

std::optional<ShannonSplit> shannon_split(const SetFamily& terms) {
  const auto pivot = pick_pivot(terms);
  if (!pivot) return std::nullopt;

  auto [without, with_reduced] = split(terms, *pivot);
  SetFamily cofactor_one = with_reduced;
  for (const auto& t : without) cofactor_one.push_back(t);

  ShannonSplit s;
  s.pivot = *pivot;
  s.cofactor_one = minimize(cofactor_one);
  s.cofactor_zero = std::move(without);
  return s;
}

namespace {

SetFamily shannon_recursive(const SetFamily& terms, const StepBudget* budget) {
  tick(budget, terms.size());
  const auto split_step = shannon_split(terms);
  if (!split_step) {
    // Disjoint terms: the complement expands to the cross product picking
    // one variable per term. Also covers S ≡ 0 (no terms -> {∅}) and
    // S ≡ 1 (an empty term -> empty family).
    return evaluate_leaf(terms, budget);
  }
  SetFamily result = shannon_recursive(split_step->cofactor_one, budget);
  const SetFamily zero_mcs = shannon_recursive(split_step->cofactor_zero, budget);
  const ElementSet pivot_set = ElementSet::of({split_step->pivot});
  tick(budget, result.size() * (zero_mcs.size() + 1));
  for (const auto& c : zero_mcs) {
    result.absorb_insert(c.union_with(pivot_set));
  }
  return result;
}

}  // namespace

SetFamily shannon_mcs(const SopSuccess& s, const StepBudget* budget) {
  return shannon_recursive(s.terms, budget);
}

}  // namespace fastmcs
