#include "interdec/io.hpp"

#include <fstream>
#include <set>

#include "interdec/error.hpp"

namespace interdec::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

const json& member(const json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object()) fail(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

std::string as_string(const json& doc, const std::string& path) {
  if (!doc.is_string()) fail(path, "expected a string");
  return doc.get<std::string>();
}

std::size_t as_count(const json& doc, const std::string& path) {
  if (!doc.is_number_integer() || doc.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return doc.get<std::size_t>();
}

json labels_of(const Poset& p, const Subposet& s) {
  json out = json::array();
  for (ElementIndex m : s) out.push_back(p.label(m));
  return out;
}

}  // namespace

Field parse_field_spec(std::string_view spec) {
  if (spec == "rational") return Field::rational();
  if (spec.starts_with("mod:")) {
    const std::string digits(spec.substr(4));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::InvalidField, "bad modulus in '" + std::string(spec) + "'");
    }
    return Field::modular(mpz_class(digits));
  }
  throw Error(ErrorCode::InvalidField, "unknown field '" + std::string(spec) + "', expected rational or mod:p");
}

Field parse_field(const json& doc, const std::string& path) {
  if (doc.is_string()) {
    try {
      return parse_field_spec(doc.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (doc.is_object()) {
    const json& p = member(doc, "mod", path);
    mpz_class modulus;
    if (p.is_number_integer()) {
      modulus = mpz_class(std::to_string(p.get<long long>()));
    } else if (p.is_string()) {
      try {
        modulus = mpz_class(p.get<std::string>());
      } catch (const std::invalid_argument&) {
        fail(path + ".mod", "not an integer");
      }
    } else {
      fail(path + ".mod", "expected an integer modulus");
    }
    try {
      return Field::modular(modulus);
    } catch (const Error& e) {
      fail(path + ".mod", e.what());
    }
  }
  fail(path, "expected \"rational\" or {\"mod\": p}");
}

json field_to_json(const Field& field) {
  if (field.is_rational()) return "rational";
  const mpz_class& p = field.modulus();
  if (p.fits_slong_p()) return json{{"mod", p.get_si()}};
  return json{{"mod", p.get_str()}};
}

Scalar parse_scalar(const json& doc, const Field& field, const std::string& path) {
  mpq_class q;
  if (doc.is_number_integer()) {
    q = mpq_class(mpz_class(doc.dump()));
  } else if (doc.is_string()) {
    const std::string text = doc.get<std::string>();
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        q = mpq_class(mpz_class(text));
      } else {
        mpz_class den(text.substr(slash + 1));
        if (den == 0) fail(path, "zero denominator");
        q = mpq_class(mpz_class(text.substr(0, slash)), den);
      }
    } catch (const std::invalid_argument&) {
      fail(path, "'" + text + "' is not an integer or p/q");
    }
    q.canonicalize();
  } else {
    fail(path, "expected an integer or a \"p/q\" string");
  }
  try {
    return field.from_rational(q);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json scalar_to_json(const Scalar& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

json vector_to_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

json rows_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix parse_rows(const json& doc, const Field& field, std::size_t cols, const std::string& path) {
  if (!doc.is_array()) fail(path, "expected a list of rows");
  Matrix m(field, 0, cols);
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const json& row = doc[r];
    if (!row.is_array()) fail(rp, "expected a row");
    if (row.size() != cols) {
      fail(rp, "row has " + std::to_string(row.size()) + " entries, ambient dimension is " + std::to_string(cols));
    }
    Vector values;
    values.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) values.push_back(parse_scalar(row[c], field, rp + "[" + std::to_string(c) + "]"));
    m.append_row(values);
  }
  return m;
}

Poset parse_poset(const json& doc, const std::string& path) {
  const json& elements = member(doc, "elements", path);
  if (!elements.is_array()) fail(path + ".elements", "expected a list of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(as_string(elements[i], path + ".elements[" + std::to_string(i) + "]"));
  }
  std::vector<std::pair<std::string, std::string>> relations;
  if (doc.contains("relations")) {
    const json& rel = doc["relations"];
    if (!rel.is_array()) fail(path + ".relations", "expected a list of pairs");
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const std::string rp = path + ".relations[" + std::to_string(i) + "]";
      if (!rel[i].is_array() || rel[i].size() != 2) fail(rp, "expected a [lower, upper] pair");
      relations.emplace_back(as_string(rel[i][0], rp + "[0]"), as_string(rel[i][1], rp + "[1]"));
    }
  }
  try {
    return Poset::from_relations(labels, relations);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json poset_to_json(const Poset& poset) {
  json relations = json::array();
  for (const auto& [a, b] : poset.cover_pairs()) relations.push_back(json::array({poset.label(a), poset.label(b)}));
  return json{{"elements", poset.labels()}, {"relations", relations}};
}

Arrangement parse_arrangement(const json& doc, const std::optional<Field>& field_override) {
  if (!doc.is_object()) fail("$", "expected an arrangement object");
  const Field field = field_override ? *field_override : parse_field(member(doc, "field", "$"), "field");
  const std::size_t dim = as_count(member(doc, "ambient_dim", "$"), "ambient_dim");
  Poset poset = parse_poset(member(doc, "poset", "$"), "poset");

  const json& spaces_doc = member(doc, "spaces", "$");
  if (!spaces_doc.is_object()) fail("spaces", "expected a map from element label to generator rows");
  std::vector<std::optional<Subspace>> slots(poset.size());
  for (const auto& [label, rows] : spaces_doc.items()) {
    auto a = poset.find(label);
    if (!a) fail("spaces." + label, "not an element of the poset");
    slots[*a] = Subspace::from_generators(field, dim, parse_rows(rows, field, dim, "spaces." + label));
  }
  std::vector<Subspace> spaces;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    if (!slots[a]) fail("spaces", "no value for element '" + poset.label(a) + "'");
    spaces.push_back(std::move(*slots[a]));
  }
  return Arrangement(std::move(poset), field, dim, std::move(spaces));
}

json arrangement_to_json(const Arrangement& f) {
  json spaces = json::object();
  for (std::size_t a = 0; a < f.poset().size(); ++a) spaces[f.poset().label(a)] = rows_to_json(f.space(a).basis());
  return json{{"field", field_to_json(f.field())},
              {"ambient_dim", f.ambient_dim()},
              {"poset", poset_to_json(f.poset())},
              {"spaces", spaces}};
}

json report_to_json(const CheckReport& report, const Poset& poset) {
  json out{{"property", std::string(to_string(report.property))}, {"verdict", report.verdict}};
  if (report.witness) {
    const Witness& w = *report.witness;
    json location;
    if (const auto* a = std::get_if<ElementIndex>(&w.location)) {
      location = json{{"element", poset.label(*a)}};
    } else {
      const auto& pair = std::get<LowerSetPair>(w.location);
      location = json{{"lower_sets", json::array({labels_of(poset, pair.first), labels_of(poset, pair.second)})}};
    }
    out["witness"] = json{{"location", location},
                          {"vector", vector_to_json(w.vector)},
                          {"member_of", rows_to_json(w.member_of.basis())},
                          {"excluded_from", rows_to_json(w.excluded_from.basis())},
                          {"detail", w.detail}};
  }
  out["work"] = json{{"pairs_checked", report.work.pairs_checked}, {"ranks_computed", report.work.ranks_computed}};
  return out;
}

json decomposition_to_json(const Decomposition& d, const Poset& poset) {
  json components = json::object();
  for (std::size_t a = 0; a < d.components.size(); ++a) components[poset.label(a)] = rows_to_json(d.components[a].basis());
  return json{{"certified", d.certified}, {"components", components}};
}

ProductSpace parse_model(const json& doc, std::size_t limit) {
  const json& vars = member(doc, "variables", "$");
  if (!vars.is_array()) fail("variables", "expected a list of {label, cardinality}");
  std::vector<std::string> labels;
  std::vector<std::size_t> cards;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string vp = "variables[" + std::to_string(i) + "]";
    const json& label = member(vars[i], "label", vp);
    labels.push_back(label.is_number_integer() ? label.dump() : as_string(label, vp + ".label"));
    cards.push_back(as_count(member(vars[i], "cardinality", vp), vp + ".cardinality"));
  }
  return ProductSpace::build(std::move(labels), std::move(cards), limit);
}

json interactions_to_json(const InteractionReport& report, const FactorArrangement& fa, bool emit_bases) {
  json rows = json::array();
  for (std::size_t a = 0; a < report.entries.size(); ++a) {
    const InteractionEntry& e = report.entries[a];
    json subset = json::array();
    for (std::size_t v : e.subset) subset.push_back(fa.product.labels()[v]);
    json row{{"subset", subset},
             {"label", e.label},
             {"dim", e.component_dim},
             {"quotient_dim", e.quotient_dim},
             {"closed_form", e.closed_form}};
    if (emit_bases) row["basis"] = rows_to_json(report.decomposition.components[a].basis());
    rows.push_back(std::move(row));
  }
  json variables = json::array();
  for (std::size_t i = 0; i < fa.product.variable_count(); ++i) {
    variables.push_back(json{{"label", fa.product.labels()[i]}, {"cardinality", fa.product.cardinalities()[i]}});
  }
  return json{{"field", field_to_json(fa.arrangement.field())},
              {"variables", variables},
              {"total_points", fa.product.total_points()},
              {"certified", report.decomposition.certified},
              {"total_dim", report.total_dim},
              {"interactions", rows}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace interdec::io
