#include "interdec/poset.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "interdec/error.hpp"

namespace interdec {

Subposet::Subposet(std::vector<ElementIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subposet::contains(ElementIndex i) const { return std::binary_search(members_.begin(), members_.end(), i); }

Subposet set_intersection(const Subposet& a, const Subposet& b) {
  Subposet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.members_));
  return out;
}

Subposet set_union(const Subposet& a, const Subposet& b) {
  Subposet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.members_));
  return out;
}

bool is_subset(const Subposet& a, const Subposet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void Poset::set_labels(std::vector<std::string> labels) {
  index_.clear();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index_.emplace(labels[i], i).second) throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "'");
  }
  labels_ = std::move(labels);
}

Poset Poset::from_relations(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset p;
  p.set_labels(labels);
  const std::size_t n = labels.size();
  p.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.table_[i * n + i] = 1;
  for (const auto& [lo, hi] : relations) {
    auto a = p.find(lo);
    auto b = p.find(hi);
    if (!a) throw Error(ErrorCode::UnknownLabel, "relation mentions unknown label '" + lo + "'");
    if (!b) throw Error(ErrorCode::UnknownLabel, "relation mentions unknown label '" + hi + "'");
    p.table_[*a * n + *b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.table_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.table_[k * n + j]) p.table_[i * n + j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.table_[i * n + j] && p.table_[j * n + i]) {
        throw Error(ErrorCode::CycleDetected, "'" + labels[i] + "' and '" + labels[j] + "' are mutually below each other");
      }
  return p;
}

Poset Poset::chain(const std::vector<std::string>& labels) {
  return from_order(labels, [](std::size_t i, std::size_t j) { return i <= j; });
}

Poset Poset::antichain(const std::vector<std::string>& labels) {
  return from_order(labels, [](std::size_t i, std::size_t j) { return i == j; });
}

void Poset::check_index(ElementIndex i) const {
  if (i >= labels_.size()) throw Error(ErrorCode::UnknownElement, "element index " + std::to_string(i));
}

const std::string& Poset::label(ElementIndex i) const {
  check_index(i);
  return labels_[i];
}

std::optional<ElementIndex> Poset::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex Poset::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw Error(ErrorCode::UnknownElement, "no element labelled '" + label + "'");
  return *i;
}

Subposet Poset::subposet(const std::vector<std::string>& labels) const {
  std::vector<ElementIndex> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(index_of(l));
  return Subposet(std::move(idx));
}

Subposet Poset::all() const {
  std::vector<ElementIndex> idx(size());
  for (std::size_t i = 0; i < size(); ++i) idx[i] = i;
  return Subposet(std::move(idx));
}

Subposet Poset::downset(ElementIndex a) const {
  check_index(a);
  std::vector<ElementIndex> out;
  for (std::size_t b = 0; b < size(); ++b)
    if (leq(b, a)) out.push_back(b);
  return Subposet(std::move(out));
}

Subposet Poset::strict_downset(ElementIndex a) const {
  check_index(a);
  std::vector<ElementIndex> out;
  for (std::size_t b = 0; b < size(); ++b)
    if (lt(b, a)) out.push_back(b);
  return Subposet(std::move(out));
}

Subposet Poset::cheek(ElementIndex a) const {
  check_index(a);
  std::vector<ElementIndex> out;
  for (std::size_t b = 0; b < size(); ++b)
    if (!leq(a, b)) out.push_back(b);
  return Subposet(std::move(out));
}

Subposet Poset::interval_elements(ElementIndex a, ElementIndex b) const {
  check_index(a);
  check_index(b);
  if (!leq(a, b)) throw Error(ErrorCode::NotComparable, "'" + labels_[a] + "' is not below '" + labels_[b] + "'");
  std::vector<ElementIndex> out;
  for (std::size_t c = 0; c < size(); ++c)
    if (leq(a, c) && leq(c, b)) out.push_back(c);
  return Subposet(std::move(out));
}

Subposet Poset::lower_completion(const Subposet& b) const {
  std::vector<ElementIndex> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (std::any_of(b.begin(), b.end(), [&](ElementIndex m) { return leq(a, m); })) out.push_back(a);
  }
  return Subposet(std::move(out));
}

bool Poset::is_lower_set(const Subposet& b) const { return lower_completion(b) == b; }

Subposet Poset::maximal_elements(const Subposet& b) const {
  std::vector<ElementIndex> out;
  for (ElementIndex x : b) {
    if (std::none_of(b.begin(), b.end(), [&](ElementIndex y) { return lt(x, y); })) out.push_back(x);
  }
  return Subposet(std::move(out));
}

std::vector<ElementIndex> Poset::linear_extension() const {
  std::vector<std::size_t> below(size(), 0);
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (leq(b, a)) ++below[a];
  std::vector<ElementIndex> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](ElementIndex x, ElementIndex y) { return below[x] < below[y]; });
  return order;
}

std::vector<Subposet> Poset::enumerate_lower_sets(std::size_t cap) const {
  const auto order = linear_extension();
  std::vector<Subposet> out;
  std::vector<char> in(size(), 0);

  // Elements are decided in linear-extension order, so every predecessor of
  // order[k] has already been decided when order[k] is reached.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      if (out.size() == cap) {
        throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " lower sets");
      }
      std::vector<ElementIndex> members;
      for (std::size_t i = 0; i < size(); ++i)
        if (in[i]) members.push_back(i);
      out.emplace_back(std::move(members));
      return;
    }
    const ElementIndex a = order[k];
    rec(k + 1);
    bool allowed = true;
    for (std::size_t b = 0; b < size() && allowed; ++b)
      if (lt(b, a) && !in[b]) allowed = false;
    if (allowed) {
      in[a] = 1;
      rec(k + 1);
      in[a] = 0;
    }
  };
  rec(0);

  std::sort(out.begin(), out.end(), [](const Subposet& x, const Subposet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members() < y.members();
  });
  return out;
}

std::size_t Poset::height() const {
  std::vector<std::size_t> longest(size(), 0);
  std::size_t best = 0;
  for (ElementIndex a : linear_extension()) {
    std::size_t h = 0;
    for (std::size_t b = 0; b < size(); ++b)
      if (lt(b, a)) h = std::max(h, longest[b]);
    longest[a] = h + 1;
    best = std::max(best, longest[a]);
  }
  return best;
}

std::vector<std::pair<ElementIndex, ElementIndex>> Poset::cover_pairs() const {
  std::vector<std::pair<ElementIndex, ElementIndex>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (!lt(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < size() && covered; ++c)
        if (lt(a, c) && lt(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

Poset Poset::induced(const Subposet& members) const {
  for (ElementIndex m : members) check_index(m);
  std::vector<std::string> labels;
  for (ElementIndex m : members) labels.push_back(labels_[m]);
  const auto& idx = members.members();
  return from_order(std::move(labels), [&](std::size_t i, std::size_t j) { return leq(idx[i], idx[j]); });
}

namespace {

void check_map(const ElementMap& f, const Poset& from, const Poset& to) {
  if (f.size() != from.size()) throw Error(ErrorCode::UnknownElement, "element map is not total on its domain");
  for (ElementIndex image : f)
    if (image >= to.size()) throw Error(ErrorCode::UnknownElement, "element map points outside its codomain");
}

}  // namespace

bool is_monotone(const ElementMap& f, const Poset& from, const Poset& to) {
  check_map(f, from, to);
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = 0; b < from.size(); ++b)
      if (from.leq(a, b) && !to.leq(f[a], f[b])) return false;
  return true;
}

bool is_order_embedding(const ElementMap& f, const Poset& from, const Poset& to) {
  check_map(f, from, to);
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = 0; b < from.size(); ++b)
      if (from.leq(a, b) != to.leq(f[a], f[b])) return false;
  return true;
}

ElementMap element_map_from_labels(const std::map<std::string, std::string>& f, const Poset& from, const Poset& to) {
  ElementMap out(from.size());
  std::vector<char> seen(from.size(), 0);
  for (const auto& [src, dst] : f) {
    const ElementIndex a = from.index_of(src);
    out[a] = to.index_of(dst);
    seen[a] = 1;
  }
  for (std::size_t a = 0; a < from.size(); ++a)
    if (!seen[a]) throw Error(ErrorCode::UnknownElement, "element map has no image for '" + from.label(a) + "'");
  return out;
}

}  // namespace interdec
