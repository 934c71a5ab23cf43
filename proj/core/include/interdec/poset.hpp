#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace interdec {

using ElementIndex = std::size_t;

inline constexpr std::size_t kDefaultLowerSetCap = 4096;

/// A subset of a poset's elements, kept as sorted unique indices.
///
/// Subposet does not hold a reference to its parent; every query takes the
/// poset explicitly so the value stays cheap to copy and compare.
class Subposet {
 public:
  Subposet() = default;
  /// Sorts and deduplicates.
  explicit Subposet(std::vector<ElementIndex> members);

  const std::vector<ElementIndex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(ElementIndex i) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend Subposet set_intersection(const Subposet& a, const Subposet& b);
  friend Subposet set_union(const Subposet& a, const Subposet& b);
  friend bool is_subset(const Subposet& a, const Subposet& b);

  friend bool operator==(const Subposet&, const Subposet&) = default;
  friend auto operator<=>(const Subposet&, const Subposet&) = default;

 private:
  std::vector<ElementIndex> members_;
};

/// A finite poset over opaque string labels.
///
/// The order is stored as the full reflexive-transitive closure in a dense
/// table, so leq() is a lookup. Values are immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Builds the closure of `relations` (pairs meaning first <= second).
  /// Throws DuplicateLabel, UnknownLabel or CycleDetected.
  static Poset from_relations(const std::vector<std::string>& labels,
                              const std::vector<std::pair<std::string, std::string>>& relations);

  static Poset chain(const std::vector<std::string>& labels);
  static Poset antichain(const std::vector<std::string>& labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex i) const;
  /// Throws UnknownElement.
  ElementIndex index_of(const std::string& label) const;
  std::optional<ElementIndex> find(const std::string& label) const;
  Subposet subposet(const std::vector<std::string>& labels) const;

  bool leq(ElementIndex a, ElementIndex b) const { return table_[a * labels_.size() + b] != 0; }
  bool lt(ElementIndex a, ElementIndex b) const { return a != b && leq(a, b); }

  Subposet all() const;
  /// {b | b <= a}
  Subposet downset(ElementIndex a) const;
  /// {b | b < a}
  Subposet strict_downset(ElementIndex a) const;
  /// {b | not a <= b}
  Subposet cheek(ElementIndex a) const;
  /// {c | a <= c <= b}; throws NotComparable unless a <= b.
  Subposet interval_elements(ElementIndex a, ElementIndex b) const;

  Subposet lower_completion(const Subposet& b) const;
  bool is_lower_set(const Subposet& b) const;
  Subposet maximal_elements(const Subposet& b) const;

  /// All lower sets, ordered by size then lexicographically by index.
  /// Throws CapExceeded as soon as more than `cap` exist.
  std::vector<Subposet> enumerate_lower_sets(std::size_t cap = kDefaultLowerSetCap) const;

  /// Number of elements in a longest chain; 0 for the empty poset.
  std::size_t height() const;

  /// Elements sorted so that b < a implies b comes first.
  std::vector<ElementIndex> linear_extension() const;
  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<ElementIndex, ElementIndex>> cover_pairs() const;

  /// The induced order on `members`, in index order.
  Poset induced(const Subposet& members) const;

  /// Trusted construction from an order table that is already reflexive,
  /// antisymmetric and transitive; `leq(i, j)` is queried for every pair.
  template <typename Leq>
  static Poset from_order(std::vector<std::string> labels, Leq&& leq) {
    Poset p;
    const std::size_t n = labels.size();
    p.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.table_[i * n + j] = leq(i, j) ? 1 : 0;
    p.set_labels(std::move(labels));
    return p;
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  void set_labels(std::vector<std::string> labels);
  void check_index(ElementIndex i) const;

  std::vector<std::string> labels_;
  std::map<std::string, ElementIndex> index_;
  std::vector<std::uint8_t> table_;
};

/// `map[i]` is the image in `to` of element i of `from`.
using ElementMap = std::vector<ElementIndex>;

/// a1 <= a2 implies f(a1) <= f(a2). Throws UnknownElement for a map that is
/// not total or points outside `to`.
bool is_monotone(const ElementMap& f, const Poset& from, const Poset& to);
/// f(a1) <= f(a2) iff a1 <= a2.
bool is_order_embedding(const ElementMap& f, const Poset& from, const Poset& to);

ElementMap element_map_from_labels(const std::map<std::string, std::string>& f, const Poset& from, const Poset& to);

}  // namespace interdec
