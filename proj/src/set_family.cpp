#include "fastmcs/set_family.hpp"

#include <algorithm>
#include <sstream>

namespace fastmcs {

ElementSet ElementSet::of(std::initializer_list<std::uint32_t> ids) {
  ElementSet s;
  for (std::uint32_t id : ids) s.insert(id);
  return s;
}

ElementSet ElementSet::from_ids(const std::vector<std::uint32_t>& ids) {
  ElementSet s;
  for (std::uint32_t id : ids) s.insert(id);
  return s;
}

void ElementSet::insert_spill(std::uint32_t id) {
  const std::size_t w = id / 64 - 1;
  if (w >= spill_.size()) spill_.resize(w + 1, 0);
  const std::uint64_t bit = std::uint64_t{1} << (id % 64);
  count_ += (spill_[w] & bit) == 0;
  spill_[w] |= bit;
}

void ElementSet::erase_spill(std::uint32_t id) {
  const std::size_t w = id / 64 - 1;
  if (w >= spill_.size()) return;
  const std::uint64_t bit = std::uint64_t{1} << (id % 64);
  count_ -= (spill_[w] & bit) != 0;
  spill_[w] &= ~bit;
  trim_spill();
}

void ElementSet::trim_spill() {
  while (!spill_.empty() && spill_.back() == 0) spill_.pop_back();
}

void ElementSet::recount() {
  std::size_t n = static_cast<std::size_t>(std::popcount(w0_));
  for (std::uint64_t w : spill_) n += static_cast<std::size_t>(std::popcount(w));
  count_ = static_cast<std::uint32_t>(n);
}

bool ElementSet::spill_less(const ElementSet& a, const ElementSet& b) {
  const std::size_t n = std::max(a.spill_.size(), b.spill_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t wa = i < a.spill_.size() ? a.spill_[i] : 0;
    const std::uint64_t wb = i < b.spill_.size() ? b.spill_[i] : 0;
    if (const std::uint64_t diff = wa ^ wb; diff != 0) {
      return (wa >> std::countr_zero(diff)) & 1;
    }
  }
  return false;
}

ElementSet ElementSet::union_with(const ElementSet& other) const {
  ElementSet r;
  r.w0_ = w0_ | other.w0_;
  if (spill_.empty() && other.spill_.empty()) {
    r.count_ = static_cast<std::uint32_t>(std::popcount(r.w0_));
    return r;
  }
  const auto& longer = spill_.size() >= other.spill_.size() ? spill_ : other.spill_;
  const auto& shorter = spill_.size() >= other.spill_.size() ? other.spill_ : spill_;
  r.spill_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r.spill_[i] |= shorter[i];
  r.recount();
  return r;
}

ElementSet ElementSet::difference(const ElementSet& other) const {
  ElementSet r = *this;
  r.w0_ &= ~other.w0_;
  const std::size_t n = std::min(r.spill_.size(), other.spill_.size());
  for (std::size_t i = 0; i < n; ++i) r.spill_[i] &= ~other.spill_[i];
  r.trim_spill();
  r.recount();
  return r;
}

ElementSet ElementSet::intersection(const ElementSet& other) const {
  ElementSet r;
  r.w0_ = w0_ & other.w0_;
  const std::size_t n = std::min(spill_.size(), other.spill_.size());
  r.spill_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.spill_[i] = spill_[i] & other.spill_[i];
  r.trim_spill();
  r.recount();
  return r;
}

std::vector<std::uint32_t> ElementSet::ids() const {
  std::vector<std::uint32_t> out;
  out.reserve(count_);
  for_each([&](std::uint32_t id) { out.push_back(id); });
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](std::uint32_t id) {
    if (!first) os << ',';
    first = false;
    os << id;
  });
  os << '}';
  return os.str();
}

SetFamily SetFamily::unit() {
  SetFamily f;
  f.members_.emplace_back();
  return f;
}

SetFamily SetFamily::of(std::initializer_list<ElementSet> members) {
  SetFamily f;
  for (const auto& m : members) f.push_back(m);
  return f;
}

bool SetFamily::absorb_insert(const ElementSet& s) {
  for (const auto& m : members_) {
    if (m.is_subset_of(s)) return false;
  }
  // No member can be a strict superset of s unless one is larger than s.
  if (s.count() < max_count_) {
    std::erase_if(members_, [&](const ElementSet& m) { return s.is_subset_of(m); });
  }
  push_back(s);
  return true;
}

void SetFamily::push_back(ElementSet s) {
  max_count_ = std::max(max_count_, static_cast<std::uint32_t>(s.count()));
  members_.push_back(std::move(s));
}

bool SetFamily::contains(const ElementSet& s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

bool SetFamily::contains_empty_set() const {
  return std::any_of(members_.begin(), members_.end(),
                     [](const ElementSet& m) { return m.empty(); });
}

bool SetFamily::dominates(const ElementSet& s) const {
  return std::any_of(members_.begin(), members_.end(),
                     [&](const ElementSet& m) { return m.is_subset_of(s); });
}

bool SetFamily::is_antichain() const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (i != j && members_[i].is_subset_of(members_[j])) return false;
    }
  }
  return true;
}

void SetFamily::sort_canonical() {
  std::sort(members_.begin(), members_.end(), ElementSet::canonical_less);
}

SetFamily SetFamily::canonical() const {
  SetFamily f = *this;
  f.sort_canonical();
  return f;
}

bool SetFamily::operator==(const SetFamily& other) const {
  if (members_.size() != other.members_.size()) return false;
  SetFamily a = canonical();
  SetFamily b = other.canonical();
  return a.members_ == b.members_;
}

std::string SetFamily::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i].to_string();
  }
  os << '}';
  return os.str();
}

SetFamily minimize(const SetFamily& f) {
  // Smaller sets first so most inserts absorb in one subset probe and the
  // eviction scan never fires.
  SetFamily sorted = f.canonical();
  SetFamily out;
  for (const auto& m : sorted) out.absorb_insert(m);
  return out;
}

SetFamily cross_union(const SetFamily& a, const SetFamily& b) {
  if (a.empty() || b.empty()) return SetFamily{};
  // Small left factors first. Two row-level shortcuts keep the product
  // sparse: a row is dead once some result member sits below its factor,
  // and a row collapses to its factor alone when some right member sits
  // below it (x ∪ y = x then absorbs every other union of the row).
  const SetFamily left = a.canonical();
  SetFamily out;
  for (const auto& x : left) {
    if (out.dominates(x)) continue;
    if (b.dominates(x)) {
      out.absorb_insert(x);
      continue;
    }
    for (const auto& y : b) {
      out.absorb_insert(x.union_with(y));
    }
  }
  return out;
}

}  // namespace fastmcs
