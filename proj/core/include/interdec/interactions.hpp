#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "interdec/arrangement.hpp"

namespace interdec {

inline constexpr std::size_t kDefaultProductLimit = 4096;
inline constexpr std::size_t kDefaultPowersetCap = 4096;

/// Sorted variable indices.
using VariableSubset = std::vector<std::size_t>;

/// E = E_1 x ... x E_n for finite variables, with points numbered in
/// mixed radix (first variable most significant).
class ProductSpace {
 public:
  /// Throws EmptyVariableDomain, DuplicateLabel or SizeLimitExceeded.
  static ProductSpace build(std::vector<std::string> labels, std::vector<std::size_t> cardinalities,
                            std::size_t limit = kDefaultProductLimit);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& cardinalities() const noexcept { return cardinalities_; }
  std::size_t variable_count() const noexcept { return labels_.size(); }
  std::size_t total_points() const noexcept { return total_; }

  /// Throws UnknownVariable.
  std::size_t variable_index(const std::string& label) const;
  VariableSubset subset(const std::vector<std::string>& labels) const;

  std::vector<std::size_t> point(std::size_t index) const;
  std::size_t index_of(const std::vector<std::size_t>& point) const;

  /// "{}" or "{x,y}" in variable order.
  std::string subset_label(const VariableSubset& s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> cardinalities_;
  std::size_t total_ = 1;
};

/// Functions on E that factor through the projection onto `subset`,
/// spanned by the cylinder indicators of the points of E_subset.
Subspace factor_subspace(const ProductSpace& product, const VariableSubset& subset,
                         const Field& field = Field::rational());

/// All subsets of {0..n-1} ordered by size, then lexicographically.
std::vector<VariableSubset> subsets_by_size(std::size_t n);

struct FactorArrangement {
  ProductSpace product;
  std::vector<VariableSubset> subsets;  // element i of the poset is subsets[i]
  Arrangement arrangement;
};

/// The factor subspaces over the inclusion-ordered powerset of the
/// variables. Throws SizeLimitExceeded when 2^n exceeds `powerset_cap`.
FactorArrangement build_factor_arrangement(const ProductSpace& product, const Field& field = Field::rational(),
                                           std::size_t powerset_cap = kDefaultPowersetCap);

struct InteractionEntry {
  VariableSubset subset;
  std::string label;
  std::size_t component_dim = 0;  // dim s_a from the certified decomposition
  std::size_t quotient_dim = 0;   // dim F(a) - dim F(strict downset a), computed independently
  std::size_t closed_form = 0;    // product of (|E_i| - 1) over i in a, reported for comparison
};

struct InteractionReport {
  std::vector<InteractionEntry> entries;  // in subset order
  Decomposition decomposition;
  std::size_t total_dim = 0;
};

/// Decomposes the factor arrangement and tabulates component dimensions.
/// Throws InternalContradiction if decomposition fails or a component
/// dimension disagrees with its quotient dimension.
InteractionReport interaction_dimensions(const FactorArrangement& fa);

}  // namespace interdec
