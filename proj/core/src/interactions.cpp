#include "interdec/interactions.hpp"

#include <algorithm>
#include <set>

#include "interdec/error.hpp"

namespace interdec {

ProductSpace ProductSpace::build(std::vector<std::string> labels, std::vector<std::size_t> cardinalities,
                                 std::size_t limit) {
  if (labels.size() != cardinalities.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one cardinality per variable label is required");
  }
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateLabel, "variable '" + l + "'");

  ProductSpace p;
  for (std::size_t i = 0; i < cardinalities.size(); ++i) {
    if (cardinalities[i] == 0) throw Error(ErrorCode::EmptyVariableDomain, "variable '" + labels[i] + "' has no values");
    if (p.total_ > limit / cardinalities[i] || p.total_ * cardinalities[i] > limit) {
      throw Error(ErrorCode::SizeLimitExceeded, "product space exceeds " + std::to_string(limit) + " points");
    }
    p.total_ *= cardinalities[i];
  }
  p.labels_ = std::move(labels);
  p.cardinalities_ = std::move(cardinalities);
  return p;
}

std::size_t ProductSpace::variable_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownVariable, "no variable labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

VariableSubset ProductSpace::subset(const std::vector<std::string>& labels) const {
  VariableSubset out;
  for (const auto& l : labels) out.push_back(variable_index(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> ProductSpace::point(std::size_t index) const {
  std::vector<std::size_t> x(cardinalities_.size());
  for (std::size_t i = cardinalities_.size(); i-- > 0;) {
    x[i] = index % cardinalities_[i];
    index /= cardinalities_[i];
  }
  return x;
}

std::size_t ProductSpace::index_of(const std::vector<std::size_t>& point) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < cardinalities_.size(); ++i) index = index * cardinalities_[i] + point.at(i);
  return index;
}

std::string ProductSpace::subset_label(const VariableSubset& s) const {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += labels_.at(s[k]);
  }
  return out + "}";
}

Subspace factor_subspace(const ProductSpace& product, const VariableSubset& subset, const Field& field) {
  for (std::size_t v : subset) {
    if (v >= product.variable_count()) throw Error(ErrorCode::UnknownVariable, "variable index " + std::to_string(v));
  }
  std::size_t rows = 1;
  for (std::size_t v : subset) rows *= product.cardinalities()[v];

  Matrix indicators(field, rows, product.total_points());
  for (std::size_t x = 0; x < product.total_points(); ++x) {
    const auto coords = product.point(x);
    std::size_t y = 0;
    for (std::size_t v : subset) y = y * product.cardinalities()[v] + coords[v];
    indicators(y, x) = 1;
  }
  return Subspace::from_generators(field, product.total_points(), indicators);
}

std::vector<VariableSubset> subsets_by_size(std::size_t n) {
  std::vector<VariableSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    VariableSubset s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const VariableSubset& a, const VariableSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

FactorArrangement build_factor_arrangement(const ProductSpace& product, const Field& field, std::size_t powerset_cap) {
  const std::size_t n = product.variable_count();
  if (n >= 8 * sizeof(std::size_t) - 1 || (std::size_t{1} << n) > powerset_cap) {
    throw Error(ErrorCode::SizeLimitExceeded, "powerset of " + std::to_string(n) + " variables exceeds " +
                                                  std::to_string(powerset_cap) + " elements");
  }
  auto subsets = subsets_by_size(n);
  std::vector<std::string> labels;
  std::vector<Subspace> spaces;
  for (const auto& s : subsets) {
    labels.push_back(product.subset_label(s));
    spaces.push_back(factor_subspace(product, s, field));
  }
  Poset powerset = Poset::from_order(std::move(labels), [&](std::size_t i, std::size_t j) {
    return std::includes(subsets[j].begin(), subsets[j].end(), subsets[i].begin(), subsets[i].end());
  });
  Arrangement arrangement(std::move(powerset), field, product.total_points(), std::move(spaces));
  return FactorArrangement{product, std::move(subsets), std::move(arrangement)};
}

InteractionReport interaction_dimensions(const FactorArrangement& fa) {
  const Arrangement& f = fa.arrangement;
  DecomposeResult result = decompose(f);
  if (!result.decomposable()) {
    throw Error(ErrorCode::InternalContradiction,
                "factor arrangement failed condition (C): " + result.condition_c.witness->detail);
  }

  InteractionReport report;
  report.decomposition = std::move(*result.decomposition);
  for (std::size_t a = 0; a < fa.subsets.size(); ++a) {
    InteractionEntry e;
    e.subset = fa.subsets[a];
    e.label = f.poset().label(a);
    e.component_dim = report.decomposition.components[a].dim();
    e.quotient_dim = quotient_dim(f.space(a), f.eval(f.poset().strict_downset(a)));
    e.closed_form = 1;
    for (std::size_t v : e.subset) e.closed_form *= fa.product.cardinalities()[v] - 1;
    if (e.component_dim != e.quotient_dim) {
      throw Error(ErrorCode::InternalContradiction, "component " + e.label + " has dimension " +
                                                        std::to_string(e.component_dim) + ", quotient has " +
                                                        std::to_string(e.quotient_dim));
    }
    report.total_dim += e.component_dim;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace interdec
