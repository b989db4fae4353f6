#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqlog/denotation.hpp"
#include "eqlog/entailment.hpp"
#include "eqlog/expressiveness.hpp"
#include "eqlog/formula.hpp"
#include "eqlog/intset.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

eqlog::Signature resolve_signature(const std::vector<eqlog::FormulaPtr>& formulas,
                                   const std::string& sig_csv) {
  std::vector<std::string> names;
  for (const auto& f : formulas) {
    eqlog::Signature atoms = eqlog::atoms_of(*f);
    for (const auto& a : atoms.atoms()) names.push_back(a);
  }
  eqlog::Signature derived = eqlog::Signature::collated(std::move(names));
  if (sig_csv.empty()) return derived;

  std::vector<std::string> given;
  std::size_t pos = 0;
  while (pos <= sig_csv.size()) {
    std::size_t comma = sig_csv.find(',', pos);
    if (comma == std::string::npos) comma = sig_csv.size();
    std::string tok = sig_csv.substr(pos, comma - pos);
    if (!tok.empty()) given.push_back(tok);
    pos = comma + 1;
  }
  eqlog::Signature sig{std::move(given)};
  for (const auto& a : derived.atoms())
    if (!sig.index_of(a))
      throw UsageError("--sig does not cover formula atom '" + a + "'");
  return sig;
}

eqlog::FormulaPtr parse_arg(const std::string& text) {
  try {
    return eqlog::parse(text);
  } catch (const eqlog::ParseError& e) {
    throw UsageError("cannot parse '" + text + "': " + e.what());
  }
}

void print_listing(const eqlog::InterpSet& s, bool as_json, const std::string& query,
                   const char* result_key) {
  if (as_json) {
    json out = {{"query", query},
                {"signature", s.sig().atoms()},
                {"result", {{result_key, s.to_strings()}}}};
    std::cout << out.dump() << "\n";
    return;
  }
  auto strings = s.to_strings();
  for (std::size_t i = 0; i < strings.size(); ++i)
    std::cout << strings[i] << (i + 1 == strings.size() ? "\n" : " ");
}

int run_models(const std::string& text, const std::string& sig_csv, bool classical, bool as_json) {
  eqlog::FormulaPtr f = parse_arg(text);
  eqlog::Signature sig = resolve_signature({f}, sig_csv);
  eqlog::InterpSet models = eqlog::denote(*f, sig);
  if (classical) models = models.classical();
  print_listing(models, as_json, text, "models");
  return kExitOk;
}

int run_eq_models(const std::string& text, const std::string& sig_csv, bool as_json) {
  eqlog::FormulaPtr f = parse_arg(text);
  eqlog::Signature sig = resolve_signature({f}, sig_csv);
  print_listing(eqlog::equilibrium_models(*f, sig), as_json, text, "equilibrium_models");
  return kExitOk;
}

int run_check(const std::string& kind, const std::string& text_a, const std::string& text_b,
              const std::string& sig_csv, bool want_witness, bool as_json) {
  eqlog::FormulaPtr a = parse_arg(text_a);
  eqlog::FormulaPtr b = parse_arg(text_b);
  eqlog::Signature sig = resolve_signature({a, b}, sig_csv);

  bool holds;
  std::optional<eqlog::Witness> witness;
  if (kind == "g3")
    holds = eqlog::entails(a, b, eqlog::Entailment::G3, sig);
  else if (kind == "classical")
    holds = eqlog::entails(a, b, eqlog::Entailment::Classical, sig);
  else if (kind == "skeptical")
    holds = eqlog::entails(a, b, eqlog::Entailment::Skeptical, sig);
  else if (kind == "credulous")
    holds = eqlog::entails(a, b, eqlog::Entailment::Credulous, sig);
  else if (kind == "weak")
    holds = eqlog::entails(a, b, eqlog::Entailment::Weak, sig);
  else if (kind == "pearce")
    holds = eqlog::entails(a, b, eqlog::Entailment::Equilibrium, sig);
  else if (kind == "strong") {
    witness = eqlog::strong_entailment_witness(a, b, sig);
    holds = !witness.has_value();
  } else if (kind == "eq-g3")
    holds = eqlog::equivalent(a, b, eqlog::Equivalence::G3, sig);
  else if (kind == "eq-classical")
    holds = eqlog::equivalent(a, b, eqlog::Equivalence::Classical, sig);
  else if (kind == "eq-weak")
    holds = eqlog::equivalent(a, b, eqlog::Equivalence::Weak, sig);
  else if (kind == "eq-strong")
    holds = eqlog::equivalent(a, b, eqlog::Equivalence::Strong, sig);
  else
    throw UsageError("unknown relation kind '" + kind + "'");

  bool show_witness = want_witness && witness.has_value();
  if (show_witness) {
    // The Witness invariant is checked on construction; re-check before
    // printing so a stale or copied witness cannot leak through.
    eqlog::FormulaPtr ag = eqlog::Formula::conj(a, witness->context);
    eqlog::FormulaPtr bg = eqlog::Formula::conj(b, witness->context);
    if (!eqlog::equilibrium_models(*ag, sig).contains(witness->model) ||
        eqlog::equilibrium_models(*bg, sig).contains(witness->model))
      throw std::logic_error("witness failed re-verification");
  }

  if (as_json) {
    json result = {{"kind", kind}, {"holds", holds}};
    if (show_witness)
      result["witness"] = {{"context", eqlog::render(witness->context)},
                          {"model", witness->model.str()}};
    json out = {{"query", text_a + " vs " + text_b},
                {"signature", sig.atoms()},
                {"result", result}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (holds ? "holds" : "fails") << "\n";
    if (show_witness) {
      std::cout << "gamma: " << eqlog::render(witness->context) << "\n";
      std::cout << "model: " << witness->model.str() << "\n";
    }
  }
  return holds ? kExitOk : kExitFails;
}

int run_definable(const std::string& text, const std::string& frag_csv, const std::string& sig_csv,
                  bool as_json) {
  eqlog::FormulaPtr f = parse_arg(text);
  eqlog::Fragment frag;
  try {
    frag = eqlog::Fragment::from_csv(frag_csv);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  eqlog::Signature sig = resolve_signature({f}, sig_csv);
  eqlog::Definability verdict = eqlog::is_definable(f, frag, sig);

  if (as_json) {
    json result = {{"fragment", frag.str()}, {"definable", verdict.definable}};
    if (verdict.definable) result["witness"] = eqlog::render(verdict.witness);
    json out = {{"query", text}, {"signature", sig.atoms()}, {"result", result}};
    std::cout << out.dump() << "\n";
  } else if (verdict.definable) {
    std::cout << "yes\n";
    std::cout << "witness: " << eqlog::render(verdict.witness) << "\n";
  } else {
    std::cout << "no\n";
  }
  return verdict.definable ? kExitOk : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model computation and entailment checking for here-and-there logic"};
  app.require_subcommand(1);

  std::string formula_a, formula_b, kind, sig_csv, fragment;
  bool classical = false, want_witness = false, as_json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--sig", sig_csv, "Explicit signature as comma-separated atoms");
    cmd->add_flag("--json", as_json, "Emit JSON instead of text");
  };

  CLI::App* models = app.add_subcommand("models", "List the G3 models of a formula");
  models->add_option("formula", formula_a)->required();
  models->add_flag("--classical", classical, "Restrict to classical models");
  add_common(models);

  CLI::App* eq_models = app.add_subcommand("eq-models", "List the equilibrium models of a formula");
  eq_models->add_option("formula", formula_a)->required();
  add_common(eq_models);

  CLI::App* check = app.add_subcommand("check", "Check an entailment or equivalence relation");
  check->add_option("kind", kind,
                    "One of: g3 classical skeptical credulous weak strong pearce "
                    "eq-g3 eq-classical eq-weak eq-strong")
      ->required();
  check->add_option("formulaA", formula_a)->required();
  check->add_option("formulaB", formula_b)->required();
  check->add_flag("--witness", want_witness, "Print a counterexample for a failed strong check");
  add_common(check);

  CLI::App* definable =
      app.add_subcommand("definable", "Decide definability within a connective fragment");
  definable->add_option("formula", formula_a)->required();
  definable->add_option("fragment", fragment, "Comma-separated subset of: bot,and,or,imp")
      ->required();
  add_common(definable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (models->parsed()) return run_models(formula_a, sig_csv, classical, as_json);
    if (eq_models->parsed()) return run_eq_models(formula_a, sig_csv, as_json);
    if (check->parsed())
      return run_check(kind, formula_a, formula_b, sig_csv, want_witness, as_json);
    if (definable->parsed()) return run_definable(formula_a, fragment, sig_csv, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
