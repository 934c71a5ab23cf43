#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "interdec/arrangement.hpp"
#include "interdec/interactions.hpp"

namespace interdec::fixtures {

inline Field Q() { return Field::rational(); }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Subspace span(std::size_t d, std::vector<Vector> rows, const Field& f = Q()) {
  return Subspace::span(f, d, rows);
}

// Lines of Q^2.
inline Subspace L1() { return span(2, {vec({1, 0})}); }
inline Subspace L2() { return span(2, {vec({0, 1})}); }
inline Subspace L3() { return span(2, {vec({1, 1})}); }
inline Subspace Q2() { return Subspace::full(Q(), 2); }

inline Poset C3() { return Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}); }
inline Poset C2() { return Poset::from_relations({"u", "v"}, {{"u", "v"}}); }
inline Poset A3() { return Poset::antichain({"a1", "a2", "a3"}); }
inline Poset A2() { return Poset::antichain({"a", "b"}); }
inline Poset D2() {
  return Poset::from_relations({"e", "p", "q", "t"}, {{"e", "p"}, {"e", "q"}, {"p", "t"}, {"q", "t"}});
}

// Three pairwise different lines of Q^2 on an antichain.
inline Arrangement three_lines() { return Arrangement(A3(), Q(), 2, {L1(), L2(), L3()}); }

inline Arrangement constant_chain() { return Arrangement(C3(), Q(), 2, {Q2(), Q2(), Q2()}); }

inline FactorArrangement factor(std::vector<std::size_t> cards, const Field& f = Q()) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cards.size(); ++i) labels.push_back(std::to_string(i + 1));
  return build_factor_arrangement(ProductSpace::build(labels, std::move(cards)), f);
}

}  // namespace interdec::fixtures

namespace interdec {

// Readable gtest failure output for subspaces.
inline void PrintTo(const Subspace& s, std::ostream* os) {
  *os << "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) *os << (r ? ", " : "") << format_vector(s.basis().row(r));
  *os << "} in dim " << s.ambient_dim();
}

}  // namespace interdec
