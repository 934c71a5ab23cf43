#include "interdec/arrangement.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "interdec/error.hpp"

namespace interdec {

namespace {

/// First basis row of `host` outside `excluded`, if any.
std::optional<Vector> vector_outside(const Subspace& host, const Subspace& excluded) {
  for (std::size_t r = 0; r < host.dim(); ++r) {
    if (!excluded.contains(host.basis().row(r))) return host.basis().row_vector(r);
  }
  return std::nullopt;
}

std::string describe_element(const Poset& p, ElementIndex a) { return "'" + p.label(a) + "'"; }

// Lower sets together with their values, indexed for pair lookups.
struct LowerSetTable {
  std::vector<Subposet> sets;
  std::vector<Subspace> values;
  std::map<Subposet, std::size_t> index;

  LowerSetTable(const Arrangement& f, std::size_t cap, WorkCounters& work)
      : sets(f.poset().enumerate_lower_sets(cap)) {
    values.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      values.push_back(f.eval(sets[i]));
      index.emplace(sets[i], i);
      ++work.ranks_computed;
    }
  }

  std::size_t at(const Subposet& s) const {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorCode::InternalContradiction, "lower sets not closed under meet/join");
    return it->second;
  }
};

}  // namespace

Arrangement::Arrangement(Poset poset, Field field, std::size_t ambient_dim, std::vector<Subspace> spaces)
    : poset_(std::move(poset)), field_(std::move(field)), ambient_dim_(ambient_dim), spaces_(std::move(spaces)) {
  if (spaces_.size() != poset_.size()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(spaces_.size()) + " subspaces for a poset of " +
                                                  std::to_string(poset_.size()) + " elements");
  }
  for (std::size_t a = 0; a < spaces_.size(); ++a) {
    if (spaces_[a].ambient_dim() != ambient_dim_) {
      throw Error(ErrorCode::DimensionMismatch, "value at " + describe_element(poset_, a) + " lives in F^" +
                                                    std::to_string(spaces_[a].ambient_dim()));
    }
    if (!(spaces_[a].field() == field_)) {
      throw Error(ErrorCode::FieldMismatch, "value at " + describe_element(poset_, a) + " is over " +
                                                spaces_[a].field().name());
    }
  }
  CheckReport mono = check_monotonicity(poset_, spaces_);
  if (!mono.verdict) throw Error(ErrorCode::NotMonotone, mono.witness->detail);
}

Subspace Arrangement::eval(const Subposet& members) const {
  Matrix gens(field_, 0, ambient_dim_);
  for (ElementIndex m : members) {
    const Subspace& s = spaces_.at(m);
    if (!s.is_zero()) gens = gens.stacked(s.basis());
  }
  return Subspace::from_generators(field_, ambient_dim_, gens);
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::C: return "C";
    case Property::IBruteforce: return "I";
    case Property::StrongIntersection: return "sI";
    case Property::Monotonicity: return "monotonicity";
    case Property::Decomposition: return "decomposition";
  }
  return "unknown";
}

CheckReport check_monotonicity(const Poset& poset, std::span<const Subspace> spaces) {
  CheckReport report{Property::Monotonicity};
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (!poset.lt(a, b)) continue;
      ++report.work.pairs_checked;
      ++report.work.ranks_computed;
      if (auto v = vector_outside(spaces[a], spaces[b])) {
        report.verdict = false;
        report.witness = Witness{a, *v, spaces[a], spaces[b],
                                 describe_element(poset, a) + " <= " + describe_element(poset, b) + " but " +
                                     format_vector(*v) + " is in F(" + poset.label(a) + ") and not in F(" +
                                     poset.label(b) + ")"};
        return report;
      }
    }
  }
  return report;
}

CheckReport check_condition_C(const Arrangement& f) {
  const Poset& p = f.poset();
  CheckReport report{Property::C};
  for (std::size_t a = 0; a < p.size(); ++a) {
    const Subspace meet = intersect(f.space(a), f.eval(p.cheek(a)));
    const Subspace below = f.eval(p.strict_downset(a));
    report.work.ranks_computed += 3;
    ++report.work.pairs_checked;
    if (auto v = vector_outside(meet, below)) {
      report.verdict = false;
      report.witness = Witness{a, *v, meet, below,
                               format_vector(*v) + " lies in F(a) and F(cheek a) but not in F(strict downset a) at a = " +
                                   describe_element(p, a)};
      return report;
    }
  }
  return report;
}

CheckReport check_intersection_bruteforce(const Arrangement& f, std::size_t cap) {
  CheckReport report{Property::IBruteforce};
  const LowerSetTable table(f, cap, report.work);
  const std::size_t n = table.sets.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.work.pairs_checked;
      const std::size_t meet = table.at(set_intersection(table.sets[i], table.sets[j]));
      const std::size_t join = table.at(set_union(table.sets[i], table.sets[j]));
      // F(B) + F(C) = F(B u C), and F(B n C) always sits inside F(B) n F(C),
      // so the inclusion holds iff the dimensions agree.
      const std::size_t meet_dim = table.values[i].dim() + table.values[j].dim() - table.values[join].dim();
      if (meet_dim == table.values[meet].dim()) continue;

      const Subspace lhs = intersect(table.values[i], table.values[j]);
      ++report.work.ranks_computed;
      auto v = vector_outside(lhs, table.values[meet]);
      if (!v) throw Error(ErrorCode::InternalContradiction, "dimension count and explicit intersection disagree");
      report.verdict = false;
      report.witness = Witness{LowerSetPair{table.sets[i], table.sets[j]}, *v, lhs, table.values[meet],
                               format_vector(*v) + " lies in F(" + lower_set_label(f.poset(), table.sets[i]) +
                                   ") and F(" + lower_set_label(f.poset(), table.sets[j]) + ") but not in F(" +
                                   lower_set_label(f.poset(), table.sets[meet]) + ")"};
      return report;
    }
  }
  return report;
}

CheckReport check_strong_intersection(const Arrangement& f, std::size_t cap) {
  CheckReport report{Property::StrongIntersection};
  const LowerSetTable table(f, cap, report.work);
  const std::size_t n = table.sets.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.work.pairs_checked;
      const std::size_t meet = table.at(set_intersection(table.sets[i], table.sets[j]));
      const Subspace lhs = intersect(table.values[i], table.values[j]);
      ++report.work.ranks_computed;
      if (lhs == table.values[meet]) continue;

      report.verdict = false;
      const std::string where = "F(" + lower_set_label(f.poset(), table.sets[i]) + ") n F(" +
                                lower_set_label(f.poset(), table.sets[j]) + ") != F(" +
                                lower_set_label(f.poset(), table.sets[meet]) + ")";
      if (auto v = vector_outside(lhs, table.values[meet])) {
        report.witness = Witness{LowerSetPair{table.sets[i], table.sets[j]}, *v, lhs, table.values[meet],
                                 format_vector(*v) + " witnesses " + where};
      } else {
        auto w = vector_outside(table.values[meet], lhs);
        report.witness = Witness{LowerSetPair{table.sets[i], table.sets[j]}, *w, table.values[meet], lhs,
                                 format_vector(*w) + " witnesses " + where};
      }
      return report;
    }
  }
  return report;
}

Decomposition pre_decompose(const Arrangement& f, const SectionRule& rule) {
  const Poset& p = f.poset();
  Decomposition d;
  d.components.reserve(p.size());
  std::optional<std::mt19937_64> rng;
  if (rule.seed()) rng.emplace(*rule.seed());

  for (std::size_t a = 0; a < p.size(); ++a) {
    const Subspace& host = f.space(a);
    const Subspace below = f.eval(p.strict_downset(a));
    if (!rng || host.is_zero()) {
      d.components.push_back(complement_within(below, host));
      continue;
    }
    // An invertible re-mix of the basis changes which section the greedy
    // rule lands on without changing the span.
    const Matrix mixed = random_invertible(f.field(), host.dim(), *rng) * host.basis();
    d.components.push_back(complement_within(below, host, mixed));
  }
  return d;
}

Verification verify_decomposition(const Arrangement& f, const Decomposition& d) {
  const Poset& p = f.poset();
  if (d.components.size() != p.size()) {
    throw Error(ErrorCode::DimensionMismatch, "decomposition has " + std::to_string(d.components.size()) +
                                                  " components for " + std::to_string(p.size()) + " elements");
  }
  Verification out{CheckReport{Property::Decomposition}, d};
  out.decomposition.certified = false;
  CheckReport& report = out.report;

  ++report.work.ranks_computed;
  if (!is_direct_sum(d.components)) {
    for (std::size_t a = 0; a < p.size(); ++a) {
      std::vector<Subspace> others;
      for (std::size_t b = 0; b < p.size(); ++b)
        if (b != a) others.push_back(d.components[b]);
      const Subspace meet = intersect(d.components[a], sum(others, f.field(), f.ambient_dim()));
      report.work.ranks_computed += 2;
      if (meet.is_zero()) continue;
      report.verdict = false;
      report.witness = Witness{a, meet.basis().row_vector(0), meet, f.zero_space(),
                               "components are not in direct sum: s(" + p.label(a) +
                                   ") meets the sum of the other components"};
      return out;
    }
    throw Error(ErrorCode::InternalContradiction, "sum not direct but every pinned intersection vanishes");
  }

  for (std::size_t a = 0; a < p.size(); ++a) {
    std::vector<Subspace> parts;
    for (ElementIndex b : p.downset(a)) parts.push_back(d.components[b]);
    const Subspace rebuilt = sum(parts, f.field(), f.ambient_dim());
    ++report.work.ranks_computed;
    ++report.work.pairs_checked;
    if (rebuilt == f.space(a)) continue;
    report.verdict = false;
    if (auto v = vector_outside(f.space(a), rebuilt)) {
      report.witness = Witness{a, *v, f.space(a), rebuilt,
                               "F(" + p.label(a) + ") is not the sum of the components below it"};
    } else {
      auto w = vector_outside(rebuilt, f.space(a));
      report.witness = Witness{a, *w, rebuilt, f.space(a),
                               "components below " + describe_element(p, a) + " leave F(" + p.label(a) + ")"};
    }
    return out;
  }
  out.decomposition.certified = true;
  return out;
}

DecomposeResult decompose(const Arrangement& f, const SectionRule& rule) {
  DecomposeResult result{check_condition_C(f), std::nullopt};
  if (!result.condition_c.verdict) return result;
  Verification v = verify_decomposition(f, pre_decompose(f, rule));
  if (!v.report.verdict) {
    throw Error(ErrorCode::InternalContradiction,
                "condition (C) holds but the pre-decomposition failed: " + v.report.witness->detail);
  }
  result.decomposition = std::move(v.decomposition);
  return result;
}

Arrangement restrict_to(const Arrangement& f, const Subposet& members) {
  std::vector<Subspace> spaces;
  for (ElementIndex m : members) spaces.push_back(f.space(m));
  return Arrangement(f.poset().induced(members), f.field(), f.ambient_dim(), std::move(spaces));
}

Decomposition restrict_decomposition(const Decomposition& d, const Subposet& members) {
  Decomposition out;
  for (ElementIndex m : members) out.components.push_back(d.components.at(m));
  return out;
}

Arrangement interval_restrict(const Arrangement& f, ElementIndex a, ElementIndex b) {
  const Subposet members = f.poset().interval_elements(a, b);
  std::vector<Subspace> spaces;
  for (ElementIndex c : members) {
    spaces.push_back(c == a ? f.eval(f.poset().downset(a)) : f.space(c));
  }
  return Arrangement(f.poset().induced(members), f.field(), f.ambient_dim(), std::move(spaces));
}

Arrangement pushforward(const ElementMap& map, const Arrangement& f, const Poset& target) {
  if (!is_monotone(map, f.poset(), target)) throw Error(ErrorCode::NotMonotoneMap, "pushforward along a non-monotone map");
  std::vector<Subspace> spaces;
  spaces.reserve(target.size());
  for (std::size_t b = 0; b < target.size(); ++b) {
    std::vector<ElementIndex> sources;
    for (std::size_t a = 0; a < f.poset().size(); ++a)
      if (target.leq(map[a], b)) sources.push_back(a);
    spaces.push_back(f.eval(Subposet(std::move(sources))));
  }
  Arrangement out(target, f.field(), f.ambient_dim(), std::move(spaces));
  if (is_order_embedding(map, f.poset(), target)) {
    for (std::size_t a = 0; a < f.poset().size(); ++a) {
      if (!(out.space(map[a]) == f.space(a))) {
        throw Error(ErrorCode::InternalContradiction, "pushforward along an order-embedding changed F(" +
                                                          f.poset().label(a) + ")");
      }
    }
  }
  return out;
}

Decomposition extend_decomposition(const ElementMap& map, const Decomposition& d, const Poset& target,
                                   const Field& field, std::size_t ambient_dim) {
  Decomposition out;
  out.components.assign(target.size(), Subspace::zero(field, ambient_dim));
  for (std::size_t a = 0; a < map.size(); ++a) out.components.at(map[a]) = d.components.at(a);
  return out;
}

Decomposition pull_back_decomposition(const ElementMap& map, const Decomposition& d) {
  Decomposition out;
  for (ElementIndex image : map) out.components.push_back(d.components.at(image));
  return out;
}

std::string lower_set_label(const Poset& p, const Subposet& members) {
  std::string out = "{";
  bool first = true;
  for (ElementIndex m : members) {
    if (!first) out += ",";
    out += p.label(m);
    first = false;
  }
  return out + "}";
}

Poset inclusion_poset(const Poset& p, const std::vector<Subposet>& subsets) {
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (const auto& s : subsets) labels.push_back(lower_set_label(p, s));
  return Poset::from_order(std::move(labels),
                           [&](std::size_t i, std::size_t j) { return is_subset(subsets[i], subsets[j]); });
}

ElementMap downset_embedding(const Poset& p, const std::vector<Subposet>& lower_sets) {
  ElementMap out(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    const Subposet down = p.downset(a);
    auto it = std::find(lower_sets.begin(), lower_sets.end(), down);
    if (it == lower_sets.end()) throw Error(ErrorCode::UnknownElement, "downset of " + describe_element(p, a) + " missing");
    out[a] = static_cast<ElementIndex>(it - lower_sets.begin());
  }
  return out;
}

Arrangement extend_to_lower_sets(const Arrangement& f, std::size_t cap) {
  const auto sets = f.poset().enumerate_lower_sets(cap);
  std::vector<Subspace> spaces;
  spaces.reserve(sets.size());
  for (const auto& s : sets) spaces.push_back(f.eval(s));
  return Arrangement(inclusion_poset(f.poset(), sets), f.field(), f.ambient_dim(), std::move(spaces));
}

std::vector<Vector> decomposition_of(const Arrangement& f, const Decomposition& d, std::span<const Scalar> v) {
  if (!d.certified) throw Error(ErrorCode::Uncertified, "decomposition_of needs a certified decomposition");
  if (d.components.size() != f.poset().size()) throw Error(ErrorCode::DimensionMismatch, "component count mismatch");
  if (v.size() != f.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  if (!f.eval(f.poset().all()).contains(v)) {
    throw Error(ErrorCode::VectorOutsideArrangement, format_vector(v) + " is not in the sum of the arrangement");
  }

  Matrix stacked(f.field(), 0, f.ambient_dim());
  std::vector<ElementIndex> owner;
  for (std::size_t a = 0; a < d.components.size(); ++a) {
    const Matrix& basis = d.components[a].basis();
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      stacked.append_row(basis.row(r));
      owner.push_back(a);
    }
  }
  auto coeffs = solve_row_combination(stacked, v);
  if (!coeffs) throw Error(ErrorCode::VectorOutsideArrangement, format_vector(v) + " is not spanned by the components");

  std::vector<Vector> parts(d.components.size(), Vector(f.ambient_dim()));
  for (std::size_t r = 0; r < owner.size(); ++r) {
    const Scalar& c = (*coeffs)[r];
    if (Field::is_zero(c)) continue;
    Vector& target = parts[owner[r]];
    for (std::size_t k = 0; k < f.ambient_dim(); ++k) target[k] = f.field().add(target[k], f.field().mul(c, stacked(r, k)));
  }
  return parts;
}

}  // namespace interdec
