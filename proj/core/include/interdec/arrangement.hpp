#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "interdec/poset.hpp"
#include "interdec/subspace.hpp"

namespace interdec {

/// A monotone map F from a finite poset into the subspaces of F^d.
///
/// Construction validates that every value lives in the shared ambient
/// space and that a <= b implies F(a) is contained in F(b); a violation is
/// reported as NotMonotone with the offending pair and a vector of F(a)
/// outside F(b). Arrangements are immutable.
class Arrangement {
 public:
  Arrangement(Poset poset, Field field, std::size_t ambient_dim, std::vector<Subspace> spaces);

  const Poset& poset() const noexcept { return poset_; }
  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const Subspace& space(ElementIndex a) const { return spaces_.at(a); }
  const std::vector<Subspace>& spaces() const noexcept { return spaces_; }

  /// Sum of F(b) over exactly the given members (no lower completion).
  Subspace eval(const Subposet& members) const;
  Subspace zero_space() const { return Subspace::zero(field_, ambient_dim_); }

 private:
  Poset poset_;
  Field field_;
  std::size_t ambient_dim_;
  std::vector<Subspace> spaces_;
};

inline Subspace eval_lower_set(const Arrangement& f, const Subposet& members) { return f.eval(members); }

enum class Property { C, IBruteforce, StrongIntersection, Monotonicity, Decomposition };
std::string_view to_string(Property p);

struct WorkCounters {
  std::size_t pairs_checked = 0;
  std::size_t ranks_computed = 0;
};

struct LowerSetPair {
  Subposet first;
  Subposet second;
};

using WitnessLocation = std::variant<ElementIndex, LowerSetPair>;

/// A nonzero vector that lies in `member_of` but not in `excluded_from`,
/// which is what every failed check reduces to.
struct Witness {
  WitnessLocation location;
  Vector vector;
  Subspace member_of;
  Subspace excluded_from;
  std::string detail;

  /// Re-derives both membership facts from scratch.
  bool reverify() const {
    return !is_zero_vector(vector) && member_of.contains(vector) && !excluded_from.contains(vector);
  }
};

struct CheckReport {
  explicit CheckReport(Property p) : property(p) {}

  Property property;
  bool verdict = true;
  std::optional<Witness> witness;  // present iff verdict is false
  WorkCounters work;
};

struct Decomposition {
  std::vector<Subspace> components;  // indexed like the poset elements
  bool certified = false;
};

/// How pre_decompose picks a section of F(a) -> F(a)/F(strict downset).
class SectionRule {
 public:
  static SectionRule deterministic() { return SectionRule(std::nullopt); }
  static SectionRule seeded(std::uint64_t seed) { return SectionRule(seed); }

  const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }

 private:
  explicit SectionRule(std::optional<std::uint64_t> seed) : seed_(seed) {}
  std::optional<std::uint64_t> seed_;
};

struct Verification {
  CheckReport report;
  Decomposition decomposition;  // input components, certified iff report.verdict
};

struct DecomposeResult {
  CheckReport condition_c;
  std::optional<Decomposition> decomposition;

  bool decomposable() const noexcept { return decomposition.has_value(); }
};

/// Monotonicity as a report, for callers that hold unvalidated values.
CheckReport check_monotonicity(const Poset& poset, std::span<const Subspace> spaces);

/// F(a) meet F(cheek a) inside F(strict downset a), for every a.
CheckReport check_condition_C(const Arrangement& f);

/// F(B) meet F(C) inside F(B meet C) for every ordered pair of lower sets.
/// Throws CapExceeded via lower-set enumeration.
CheckReport check_intersection_bruteforce(const Arrangement& f, std::size_t cap = kDefaultLowerSetCap);

/// F(B) meet F(C) equal to F(B meet C) for every ordered pair of lower sets.
/// Lower sets are closed under intersection, so pairwise equality extends
/// to every finite family by induction.
CheckReport check_strong_intersection(const Arrangement& f, std::size_t cap = kDefaultLowerSetCap);

/// s_a = complement of F(strict downset a) inside F(a), for every a.
Decomposition pre_decompose(const Arrangement& f, const SectionRule& rule = SectionRule::deterministic());

/// Checks that the components are in direct sum and that for each a the
/// components below a sum to F(a).
Verification verify_decomposition(const Arrangement& f, const Decomposition& d);

/// Runs the (C) check and, when it passes, returns the certified
/// pre-decomposition. Throws InternalContradiction if (C) holds but the
/// pre-decomposition fails verification.
DecomposeResult decompose(const Arrangement& f, const SectionRule& rule = SectionRule::deterministic());

/// F on the induced subposet; elements are kept in index order.
Arrangement restrict_to(const Arrangement& f, const Subposet& members);
/// Components of d at the given members.
Decomposition restrict_decomposition(const Decomposition& d, const Subposet& members);

/// F on [a, b], with a mapped to F(downset a) evaluated in the parent.
Arrangement interval_restrict(const Arrangement& f, ElementIndex a, ElementIndex b);

/// f_*F(b) = sum of F(a) over a with map(a) <= b. Throws NotMonotoneMap.
Arrangement pushforward(const ElementMap& map, const Arrangement& f, const Poset& target);
/// s_b = d(a) when b = map(a), zero otherwise.
Decomposition extend_decomposition(const ElementMap& map, const Decomposition& d, const Poset& target,
                                   const Field& field, std::size_t ambient_dim);
/// s_a = d(map(a)).
Decomposition pull_back_decomposition(const ElementMap& map, const Decomposition& d);

/// "{a,b}" with members in index order, "{}" for the empty set.
std::string lower_set_label(const Poset& p, const Subposet& members);
/// Poset of the given subsets ordered by inclusion.
Poset inclusion_poset(const Poset& p, const std::vector<Subposet>& subsets);
/// a -> position of downset(a) in `lower_sets`.
ElementMap downset_embedding(const Poset& p, const std::vector<Subposet>& lower_sets);

/// The arrangement B -> F(B) on all lower sets ordered by inclusion.
Arrangement extend_to_lower_sets(const Arrangement& f, std::size_t cap = kDefaultLowerSetCap);

/// The unique components v_a in s_a with v = sum of v_a. Requires a
/// certified decomposition; throws VectorOutsideArrangement when v is not
/// in F(whole poset).
std::vector<Vector> decomposition_of(const Arrangement& f, const Decomposition& d, std::span<const Scalar> v);

}  // namespace interdec
