#ifndef FASTMCS_SET_FAMILY_HPP
#define FASTMCS_SET_FAMILY_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace fastmcs {

/// Set of element ids backed by a bit vector. Element ids are dense
/// integers; for a topology they are node indices 0..|V|-1 followed by
/// edge indices |V|..|V|+|E|-1, which makes integer order the canonical
/// element order (all nodes before all edges).
///
/// The first 64 elements live inline and the cardinality is cached, so
/// the subset/intersection probes that dominate the absorption loops stay
/// a handful of instructions on machine-word universes.
class ElementSet {
public:
  ElementSet() = default;

  static ElementSet of(std::initializer_list<std::uint32_t> ids);
  static ElementSet from_ids(const std::vector<std::uint32_t>& ids);

  void insert(std::uint32_t id) {
    if (id < 64) {
      const std::uint64_t bit = std::uint64_t{1} << id;
      count_ += (w0_ & bit) == 0;
      w0_ |= bit;
      return;
    }
    insert_spill(id);
  }

  void erase(std::uint32_t id) {
    if (id < 64) {
      const std::uint64_t bit = std::uint64_t{1} << id;
      count_ -= (w0_ & bit) != 0;
      w0_ &= ~bit;
      return;
    }
    erase_spill(id);
  }

  bool contains(std::uint32_t id) const {
    if (id < 64) return (w0_ >> id) & 1;
    const std::size_t w = id / 64 - 1;
    if (w >= spill_.size()) return false;
    return (spill_[w] >> (id % 64)) & 1;
  }

  bool empty() const { return count_ == 0; }
  std::size_t count() const { return count_; }

  bool is_subset_of(const ElementSet& other) const {
    if (count_ > other.count_) return false;
    if (w0_ & ~other.w0_) return false;
    if (spill_.empty()) return true;
    if (spill_.size() > other.spill_.size()) return false;
    for (std::size_t i = 0; i < spill_.size(); ++i) {
      if (spill_[i] & ~other.spill_[i]) return false;
    }
    return true;
  }

  bool intersects(const ElementSet& other) const {
    if (w0_ & other.w0_) return true;
    const std::size_t n = std::min(spill_.size(), other.spill_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (spill_[i] & other.spill_[i]) return true;
    }
    return false;
  }

  /// Union / difference / intersection produce normalized sets (no
  /// trailing zero words), so equality is plain member comparison.
  ElementSet union_with(const ElementSet& other) const;
  ElementSet difference(const ElementSet& other) const;
  ElementSet intersection(const ElementSet& other) const;

  /// Ascending element ids.
  std::vector<std::uint32_t> ids() const;

  /// Visits elements in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t bits = w0_;
    while (bits != 0) {
      f(static_cast<std::uint32_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
    for (std::size_t w = 0; w < spill_.size(); ++w) {
      bits = spill_[w];
      while (bits != 0) {
        f(static_cast<std::uint32_t>((w + 1) * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const ElementSet& other) const {
    return w0_ == other.w0_ && spill_ == other.spill_;
  }
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

  /// Canonical order: cardinality ascending, then lexicographic on the
  /// ascending id sequence (the set owning the first differing element
  /// comes first).
  static bool canonical_less(const ElementSet& a, const ElementSet& b) {
    if (a.count_ != b.count_) return a.count_ < b.count_;
    if (const std::uint64_t diff = a.w0_ ^ b.w0_; diff != 0) {
      return (a.w0_ >> std::countr_zero(diff)) & 1;
    }
    return spill_less(a, b);
  }

  std::string to_string() const;  // e.g. "{0,3,5}", debugging aid

private:
  void insert_spill(std::uint32_t id);
  void erase_spill(std::uint32_t id);
  void trim_spill();
  void recount();
  static bool spill_less(const ElementSet& a, const ElementSet& b);

  std::uint64_t w0_ = 0;  // elements 0..63, inline
  std::uint32_t count_ = 0;
  std::vector<std::uint64_t> spill_;  // elements 64.. (edge universes)
};

/// Collection of ElementSets. When built through absorb_insert the family
/// is an antichain: no member is a subset of another. Families are
/// value-like; all mutation happens through the owning builder.
class SetFamily {
public:
  SetFamily() = default;

  /// The default-constructed family has no members: the annihilator of
  /// cross_union. unit() is the family {∅}, its identity.
  static SetFamily unit();
  static SetFamily of(std::initializer_list<ElementSet> members);

  /// Antichain insertion: no-op when an existing member is a subset of s;
  /// otherwise removes every superset of s and appends s.
  /// Returns true when s was inserted.
  bool absorb_insert(const ElementSet& s);

  /// Unchecked append (used by bulk constructions that minimize later).
  void push_back(ElementSet s);

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const ElementSet& operator[](std::size_t i) const { return members_[i]; }

  std::vector<ElementSet>::const_iterator begin() const { return members_.begin(); }
  std::vector<ElementSet>::const_iterator end() const { return members_.end(); }

  bool contains(const ElementSet& s) const;
  bool contains_empty_set() const;
  /// True iff some member is a subset of s.
  bool dominates(const ElementSet& s) const;

  /// True when no member is a subset of another (duplicates also excluded).
  bool is_antichain() const;

  /// Sorts members into canonical order (cardinality, then lexicographic).
  void sort_canonical();
  SetFamily canonical() const;

  /// Families compare as sets of sets, order-insensitively.
  bool operator==(const SetFamily& other) const;
  bool operator!=(const SetFamily& other) const { return !(*this == other); }

  std::string to_string() const;

private:
  std::vector<ElementSet> members_;
  // Upper bound on member cardinality; lets absorb_insert skip the
  // superset-eviction pass when sets arrive in ascending size.
  std::uint32_t max_count_ = 0;
};

/// Antichain of the ⊆-minimal members of f. Idempotent.
SetFamily minimize(const SetFamily& f);

/// minimize({ x ∪ y : x ∈ a, y ∈ b }). The unit family {∅} is the
/// identity, the empty family the annihilator. Commutative and
/// associative up to minimize.
SetFamily cross_union(const SetFamily& a, const SetFamily& b);

}  // namespace fastmcs

#endif  // FASTMCS_SET_FAMILY_HPP
