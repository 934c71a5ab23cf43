#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "interdec/error.hpp"
#include "interdec/io.hpp"

namespace interdec::cli {

namespace {

using io::json;

int emit(const json& doc, const Invocation& inv, std::ostream& out) {
  const std::string text = (inv.pretty ? doc.dump(2) : doc.dump()) + "\n";
  if (!inv.output_path) {
    out << text;
    return 0;
  }
  std::ofstream file(*inv.output_path);
  if (!file) throw Error(ErrorCode::ParseError, *inv.output_path + ": cannot open for writing");
  file << text;
  return 0;
}

std::optional<Field> field_override(const Invocation& inv) {
  if (!inv.field) return std::nullopt;
  return io::parse_field_spec(*inv.field);
}

int cmd_check(const Invocation& inv, std::ostream& out) {
  const Arrangement f = io::parse_arrangement(io::read_json_file(inv.input_path), field_override(inv));
  CheckReport report(Property::C);
  if (inv.property == "C") {
    report = check_condition_C(f);
  } else if (inv.property == "I") {
    report = check_intersection_bruteforce(f, inv.cap);
  } else if (inv.property == "sI") {
    report = check_strong_intersection(f, inv.cap);
  } else {
    throw Error(ErrorCode::ParseError, "unknown property '" + inv.property + "'");
  }
  emit(io::report_to_json(report, f.poset()), inv, out);
  return report.verdict ? kVerdictTrue : kVerdictFalse;
}

int cmd_decompose(const Invocation& inv, std::ostream& out) {
  const Arrangement f = io::parse_arrangement(io::read_json_file(inv.input_path), field_override(inv));
  const SectionRule rule = inv.seed ? SectionRule::seeded(*inv.seed) : SectionRule::deterministic();
  DecomposeResult result = decompose(f, rule);
  if (!result.decomposable()) {
    emit(io::report_to_json(result.condition_c, f.poset()), inv, out);
    return kVerdictFalse;
  }
  emit(io::decomposition_to_json(*result.decomposition, f.poset()), inv, out);
  return kVerdictTrue;
}

int cmd_interactions(const Invocation& inv, std::ostream& out) {
  const ProductSpace product = io::parse_model(io::read_json_file(inv.input_path));
  const Field field = inv.field ? io::parse_field_spec(*inv.field) : Field::rational();
  const FactorArrangement fa = build_factor_arrangement(product, field);
  const InteractionReport report = interaction_dimensions(fa);
  if (inv.export_path) {
    std::ofstream file(*inv.export_path);
    if (!file) throw Error(ErrorCode::ParseError, *inv.export_path + ": cannot open for writing");
    const json doc = io::arrangement_to_json(fa.arrangement);
    file << (inv.pretty ? doc.dump(2) : doc.dump()) << "\n";
  }
  emit(io::interactions_to_json(report, fa, inv.emit_bases), inv, out);
  return kVerdictTrue;
}

}  // namespace

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    switch (inv.command) {
      case Command::Check: return cmd_check(inv, out);
      case Command::Decompose: return cmd_decompose(inv, out);
      case Command::Interactions: return cmd_interactions(inv, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::CapExceeded:
      case ErrorCode::SizeLimitExceeded: return kLimitExceeded;
      case ErrorCode::InternalContradiction: return kInternalContradiction;
      default: return kInputError;
    }
  }
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact subspace arrangements over finite posets: intersection checks and decompositions", "interdec"};
  app.require_subcommand(1);
  app.fallthrough();

  Invocation inv;
  std::string field;
  std::string output;
  app.add_option("--field", field, "Field override: rational or mod:p");
  app.add_option("--output", output, "Write the document to this path instead of stdout");
  app.add_flag("--pretty", inv.pretty, "Indent the output document");

  auto* check = app.add_subcommand("check", "Check an intersection property of an arrangement file");
  check->add_option("input", inv.input_path, "Arrangement file")->required();
  check->add_option("--property", inv.property, "C, I or sI")->check(CLI::IsMember({"C", "I", "sI"}));
  check->add_option("--cap", inv.cap, "Maximum number of lower sets to enumerate")->check(CLI::PositiveNumber);

  std::uint64_t seed = 0;
  auto* dec = app.add_subcommand("decompose", "Decompose an arrangement file");
  dec->add_option("input", inv.input_path, "Arrangement file")->required();
  auto* seed_opt = dec->add_option("--seed", seed, "Use a seeded random section instead of the canonical one");

  std::string export_path;
  auto* inter = app.add_subcommand("interactions", "Interaction decomposition of a variable model");
  inter->add_option("input", inv.input_path, "Model file")->required();
  inter->add_flag("--emit-bases", inv.emit_bases, "Include component bases");
  inter->add_option("--export-arrangement", export_path, "Write the factor arrangement to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (!field.empty()) inv.field = field;
  if (!output.empty()) inv.output_path = output;
  if (!export_path.empty()) inv.export_path = export_path;
  if (seed_opt->count() > 0) inv.seed = seed;
  if (dec->parsed()) {
    inv.command = Command::Decompose;
  } else if (inter->parsed()) {
    inv.command = Command::Interactions;
  } else {
    inv.command = Command::Check;
  }
  return execute(inv, out, err);
}

}  // namespace interdec::cli
