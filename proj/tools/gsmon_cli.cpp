// Copyright 2026 The gsmon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line entry point: build models from manifests, run law checks and
// classification, construct Kleisli categories, decide and render diagram
// terms, validate semirings.
//
// Exit codes: 0 pass/equal, 1 counterexample/unequal/law failure, 2 usage or
// I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsmon/diagrams/diagrams.hpp"
#include "gsmon/instances/build.hpp"
#include "gsmon/instances/subcategory.hpp"
#include "gsmon/monads/kleisli.hpp"
#include "gsmon/monads/monads.hpp"
#include "gsmon/taxonomy.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gsmon::Error(gsmon::ErrorKind::Io, "cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

std::string load_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gsmon::Error(gsmon::ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw gsmon::Error(gsmon::ErrorKind::Io, "cannot write '" + path + "'");
  out << text;
}

struct BudgetFlags {
  int words = 2;
  int hom_cap = 512;
  int max_carrier = 4096;
  uint64_t seed = 0;

  gsmon::Budget to_budget() const {
    gsmon::Budget b;
    b.max_word_len = words;
    b.hom_cap = hom_cap;
    b.max_carrier = max_carrier;
    b.seed = seed;
    return b;
  }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
  cmd->add_option("--budget-words", b.words, "object word length cap");
  cmd->add_option("--budget-hom", b.hom_cap, "hom enumeration cap");
  cmd->add_option("--budget-carrier", b.max_carrier, "carrier size cap");
  cmd->add_option("--seed", b.seed, "seed for sampled enumerations");
}

int run_classify(const std::string& model_path, const std::string& predicates_csv,
                 const BudgetFlags& budget, const std::string& out_path) {
  gsmon::ModelPtr model = gsmon::build_instance(load_json(model_path));
  const gsmon::Budget b = budget.to_budget();

  std::vector<gsmon::PredicateId> wanted;
  if (predicates_csv.empty()) {
    wanted = gsmon::all_predicates();
  } else {
    std::istringstream ss(predicates_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto p = gsmon::predicate_from_name(name);
      if (!p) throw gsmon::Error(gsmon::ErrorKind::UnknownName, "predicate '" + name + "'");
      wanted.push_back(*p);
    }
  }

  gsmon::TaxonomyReport report;
  report.budget = b;
  bool any_fail = false;
  if (predicates_csv.empty()) {
    report = gsmon::classify(*model, b);
    for (const auto& r : report.predicates)
      if (r.status == gsmon::LawStatus::Counterexample) any_fail = true;
  } else {
    for (auto p : wanted) {
      report.predicates.push_back(gsmon::predicate(*model, p, b));
      if (report.predicates.back().status == gsmon::LawStatus::Counterexample) any_fail = true;
    }
  }

  for (const auto& r : report.predicates)
    std::cout << r.name << ": " << gsmon::to_string(r.status) << "\n";
  if (!report.implications_ok) {
    std::cout << "engine bug: implication violations detected\n";
    for (const auto& v : report.implication_violations) std::cout << "  " << v << "\n";
  }
  write_output(out_path, report.to_json(*model).dump(2) + "\n");
  if (!report.implications_ok) return kExitError;
  return any_fail ? kExitFail : kExitPass;
}

int run_law(const std::string& model_path, const std::string& law_name,
            const BudgetFlags& budget, const std::string& out_path) {
  gsmon::ModelPtr model = gsmon::build_instance(load_json(model_path));
  auto law = gsmon::law_from_name(law_name);
  if (!law) throw gsmon::Error(gsmon::ErrorKind::UnknownName, "law '" + law_name + "'");
  gsmon::LawReport report = gsmon::check_law(*model, *law, budget.to_budget());
  std::cout << report.law_name << ": " << gsmon::to_string(report.status) << " ("
            << report.bindings_checked << " bindings)\n";
  write_output(out_path, report.to_json(*model).dump(2) + "\n");
  return report.status == gsmon::LawStatus::Counterexample ? kExitFail : kExitPass;
}

int run_kleisli(const std::string& base_path, const std::string& monad_path,
                const std::string& classes_csv, bool force, const BudgetFlags& budget,
                const std::string& out_path) {
  gsmon::ModelPtr base = gsmon::build_instance(load_json(base_path));
  gsmon::MonadPtr monad = gsmon::build_monad(base, load_json(monad_path));
  const gsmon::Budget b = budget.to_budget();

  gsmon::MonadReport monad_report = gsmon::check_monad(*monad, b);
  for (const auto& c : monad_report.checks)
    std::cout << c.name << ": " << gsmon::to_string(c.status) << "\n";
  json out;
  out["monad_checks"] = monad_report.to_json();

  bool fail = monad_report.failing() != nullptr;
  if (fail && !force) {
    write_output(out_path, out.dump(2) + "\n");
    std::cout << "monad laws fail; pass --force to construct the Kleisli model anyway\n";
    return kExitFail;
  }

  if (!classes_csv.empty()) {
    std::istringstream ss(classes_csv);
    std::string name;
    json classes = json::array();
    while (std::getline(ss, name, ',')) {
      gsmon::MonadCheck c =
          gsmon::check_monad_class(*monad, gsmon::monad_class_from_name(name), b);
      std::cout << "class " << name << ": " << gsmon::to_string(c.status) << "\n";
      classes.push_back({{"class", name},
                         {"status", gsmon::to_string(c.status)},
                         {"witness", c.witness}});
      if (c.status == gsmon::LawStatus::Counterexample) fail = true;
    }
    out["classes"] = classes;
  }

  auto model = gsmon::kleisli(monad, b, /*force=*/true);
  out["model"] = model->manifest();
  write_output(out_path, out.dump(2) + "\n");
  return fail ? kExitFail : kExitPass;
}

gsmon::Assignment parse_assignment(const json& j, const gsmon::CategoryModel& model) {
  gsmon::Assignment assign;
  if (j.contains("sorts"))
    for (auto it = j["sorts"].begin(); it != j["sorts"].end(); ++it)
      assign.sorts[it.key()] = gsmon::ObjectExpr::from_json(it.value());
  if (j.contains("generators"))
    for (auto it = j["generators"].begin(); it != j["generators"].end(); ++it)
      assign.generators[it.key()] = model.morphism_from_json(it.value());
  return assign;
}

int run_diagram(const std::string& sub, const std::string& sig_path,
                const std::vector<std::string>& term_paths, const std::string& assign_path,
                const std::string& out_path) {
  gsmon::Signature sig = gsmon::Signature::parse(load_text(sig_path));
  std::vector<gsmon::DiagramTerm> terms;
  for (const auto& p : term_paths) terms.push_back(gsmon::parse_term(sig, load_text(p)));

  if (sub == "eq") {
    if (terms.size() != 2)
      throw gsmon::Error(gsmon::ErrorKind::Io, "diagram eq needs exactly two term files");
    const bool equal = gsmon::diagrams_equal(sig, terms[0], terms[1]);
    std::cout << (equal ? "equal" : "unequal") << "\n";
    return equal ? kExitPass : kExitFail;
  }
  if (sub == "render") {
    if (terms.size() != 1)
      throw gsmon::Error(gsmon::ErrorKind::Io, "diagram render needs one term file");
    const std::string dot = gsmon::to_dot(gsmon::to_term_graph(sig, terms[0]));
    if (out_path.empty())
      std::cout << dot;
    else
      write_output(out_path, dot);
    return kExitPass;
  }
  if (sub == "eval") {
    if (terms.size() != 1)
      throw gsmon::Error(gsmon::ErrorKind::Io, "diagram eval needs one term file");
    const json aj = load_json(assign_path);
    gsmon::ModelPtr model = gsmon::build_instance(aj.at("model"));
    gsmon::Assignment assign = parse_assignment(aj, *model);
    gsmon::Morphism m = gsmon::evaluate(terms[0], sig, assign, *model);
    const json mj = model->morphism_to_json(m);
    std::cout << mj.dump(2) << "\n";
    write_output(out_path, mj.dump(2) + "\n");
    return kExitPass;
  }
  throw gsmon::Error(gsmon::ErrorKind::UnknownKind, "diagram subcommand '" + sub + "'");
}

int run_semiring_check(const std::string& path, const std::string& out_path) {
  const json j = load_json(path);
  gsmon::SemiringSpec spec =
      j.is_string() ? gsmon::builtin_semiring_spec(j.get<std::string>())
                    : gsmon::SemiringSpec::from_json(j);
  auto violations = gsmon::validate_semiring(spec);
  json out;
  out["valid"] = violations.empty();
  json vj = json::array();
  for (const auto& v : violations) vj.push_back(v.to_json());
  out["violations"] = vj;
  if (violations.empty()) {
    gsmon::Semiring s = gsmon::make_semiring(spec);
    std::cout << "valid semiring with " << s.size() << " elements\n";
  } else {
    std::cout << violations.size() << " violation(s); first: " << violations.front().law << "\n";
  }
  write_output(out_path, out.dump(2) + "\n");
  return violations.empty() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite gs-monoidal category models"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "run taxonomy predicates over a model");
  std::string model_path, predicates_csv, out_path;
  BudgetFlags classify_budget;
  classify_cmd->add_option("--model", model_path, "model manifest JSON")->required();
  classify_cmd->add_option("--predicates", predicates_csv,
                           "comma-separated predicate names (default: all)");
  classify_cmd->add_option("--out", out_path, "write the report JSON here");
  add_budget_flags(classify_cmd, classify_budget);

  // law
  auto* law_cmd = app.add_subcommand("law", "check one catalogued law over a model");
  std::string law_model, law_name, law_out;
  BudgetFlags law_budget;
  law_cmd->add_option("--model", law_model, "model manifest JSON")->required();
  law_cmd->add_option("--law", law_name, "law name, e.g. nat_copy")->required();
  law_cmd->add_option("--out", law_out, "write the report JSON here");
  add_budget_flags(law_cmd, law_budget);

  // kleisli
  auto* kleisli_cmd = app.add_subcommand("kleisli", "check a monad and emit its Kleisli model");
  std::string base_path, monad_path, classes_csv, kleisli_out;
  bool force = false;
  BudgetFlags kleisli_budget;
  kleisli_budget.words = 1;
  kleisli_budget.hom_cap = 64;
  kleisli_cmd->add_option("--base", base_path, "base model manifest")->required();
  kleisli_cmd->add_option("--monad", monad_path, "monad manifest")->required();
  kleisli_cmd->add_option("--check-class", classes_csv,
                          "comma-separated monad classes (affine,relevant,gs,colax-...)");
  kleisli_cmd->add_flag("--force", force, "construct even if monad laws fail");
  kleisli_cmd->add_option("--out", kleisli_out, "write model + reports here");
  add_budget_flags(kleisli_cmd, kleisli_budget);

  // diagram
  auto* diagram_cmd = app.add_subcommand("diagram", "free gs-monoidal term tools");
  diagram_cmd->require_subcommand(1);
  std::string sig_path, assign_path, diagram_out;
  std::vector<std::string> term_paths;
  std::string diagram_sub;
  for (const char* sub : {"eq", "eval", "render"}) {
    auto* c = diagram_cmd->add_subcommand(sub);
    c->add_option("--sig", sig_path, "signature file")->required();
    c->add_option("--term", term_paths, "term file(s)")->required();
    if (std::string(sub) == "eval")
      c->add_option("--assign", assign_path, "assignment JSON (model, sorts, generators)")
          ->required();
    c->add_option("--out", diagram_out, "output path");
    c->callback([sub, &diagram_sub] { diagram_sub = sub; });
  }

  // semiring
  auto* semiring_cmd = app.add_subcommand("semiring", "semiring utilities");
  auto* semiring_check = semiring_cmd->add_subcommand("check", "validate a semiring document");
  std::string semiring_path, semiring_out;
  semiring_check->add_option("file", semiring_path, "semiring JSON or builtin name")->required();
  semiring_check->add_option("--out", semiring_out, "write the validation report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed())
      return run_classify(model_path, predicates_csv, classify_budget, out_path);
    if (law_cmd->parsed()) return run_law(law_model, law_name, law_budget, law_out);
    if (kleisli_cmd->parsed())
      return run_kleisli(base_path, monad_path, classes_csv, force, kleisli_budget, kleisli_out);
    if (diagram_cmd->parsed())
      return run_diagram(diagram_sub, sig_path, term_paths, assign_path, diagram_out);
    if (semiring_check->parsed()) return run_semiring_check(semiring_path, semiring_out);
  } catch (const gsmon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.detail().is_null()) std::cerr << e.detail().dump(2) << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
