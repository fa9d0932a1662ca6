#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "morpho/morpho_c.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapability = 3;

// TooLarge and NoClosedForm are capability limits, everything else is the
// caller's input.
int exit_code_for_status(int status) {
  if (status == MORPHO_E_TOO_LARGE || status == MORPHO_E_NO_CLOSED_FORM)
    return kExitCapability;
  return kExitBadInput;
}

[[noreturn]] void die_on_error() {
  std::cerr << "error: " << morpho_last_error() << " ["
            << morpho_status_name(morpho_last_status()) << "]\n";
  std::exit(exit_code_for_status(morpho_last_status()));
}

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitBadInput);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write " + path);
  out << text;
}

// Owning wrappers so error paths cannot leak handles.
using LatticePtr = std::unique_ptr<morpho_lattice, decltype(&morpho_lattice_free)>;
using SubPtr = std::unique_ptr<morpho_sub, decltype(&morpho_sub_free)>;
using SePtr = std::unique_ptr<morpho_se, decltype(&morpho_se_free)>;
using ModelPtr = std::unique_ptr<morpho_model, decltype(&morpho_model_free)>;

struct CString {
  char* p = nullptr;
  ~CString() { morpho_string_free(p); }
  explicit operator bool() const { return p != nullptr; }
  std::string str() const { return p ? p : ""; }
};

LatticePtr load_lattice(const std::string& ground_path, const std::string& forget) {
  LatticePtr lat(morpho_lattice_create(slurp(ground_path).c_str(), forget.c_str()),
                 morpho_lattice_free);
  if (!lat) die_on_error();
  return lat;
}

SubPtr load_sub(const morpho_lattice* lat, const std::string& path) {
  SubPtr d(morpho_sub_parse(lat, slurp(path).c_str()), morpho_sub_free);
  if (!d) die_on_error();
  return d;
}

SePtr load_se(const morpho_lattice* lat, const std::string& path) {
  SePtr b(morpho_se_parse(lat, slurp(path).c_str()), morpho_se_free);
  if (!b) die_on_error();
  return b;
}

ordered_json parse_or_die(const std::string& text, const std::string& what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) die(what + ": malformed JSON from library");
  return j;
}

int run_morph(const std::string& op, const std::string& ground, const std::string& object,
              const std::string& se, const std::string& forget, const std::string& method,
              const std::string& out, const std::string& dot, const std::string& diff) {
  LatticePtr lat = load_lattice(ground, forget);
  SePtr b = load_se(lat.get(), se);
  SubPtr d = load_sub(lat.get(), object);

  SubPtr r(morpho_apply(lat.get(), b.get(), d.get(), op.c_str(), method.c_str()),
           morpho_sub_free);
  if (!r) die_on_error();

  CString text{morpho_sub_dump(lat.get(), r.get())};
  if (!text) die_on_error();
  if (!out.empty()) spill(out, text.str());
  std::cout << text.str();

  if (!dot.empty()) {
    SubPtr baseline(nullptr, morpho_sub_free);
    if (!diff.empty()) baseline = load_sub(lat.get(), diff);
    CString rendered{morpho_to_dot(lat.get(), r.get(), baseline.get())};
    if (!rendered) die_on_error();
    spill(dot, rendered.str());
  }
  return kExitOk;
}

int run_laws(const std::string& ground, const std::string& se, const std::string& forget,
             const std::string& law, std::uint64_t samples, std::uint64_t seed,
             const std::string& report_path) {
  LatticePtr lat = load_lattice(ground, forget);
  SePtr b = load_se(lat.get(), se);

  std::vector<std::string> laws;
  if (law == "all") {
    CString ids{morpho_law_ids()};
    if (!ids) die_on_error();
    for (const auto& id : parse_or_die(ids.str(), "law ids")) laws.push_back(id);
  } else {
    laws.push_back(law);
  }

  const int exhaustive = samples == 0 ? 1 : 0;
  ordered_json reports = ordered_json::array();
  bool any_falsified = false;
  for (const auto& id : laws) {
    CString rep{morpho_check_law(lat.get(), b.get(), id.c_str(), exhaustive, samples, seed)};
    if (!rep) die_on_error();
    ordered_json j = parse_or_die(rep.str(), "law report");
    const std::string status = j["status"];
    any_falsified = any_falsified || status == "falsified";
    std::cout << id << ": " << status << " (" << j["sampler"].get<std::string>() << ", "
              << j["samples"].get<std::uint64_t>() << " samples)";
    if (j.contains("note")) std::cout << ": " << j["note"].get<std::string>();
    std::cout << "\n";
    reports.push_back(std::move(j));
  }
  if (!report_path.empty()) spill(report_path, reports.dump(2) + "\n");
  return any_falsified ? kExitFalsified : kExitOk;
}

void print_comparison(const ordered_json& c) {
  auto show = [](const char* title, const ordered_json& results, const ordered_json& na) {
    std::cout << title << ":\n";
    for (const auto& item : results)
      std::cout << "  " << item["method"].get<std::string>() << ": "
                << item["result"].dump() << "\n";
    for (const auto& item : na)
      std::cout << "  " << item["method"].get<std::string>() << ": n/a ("
                << item["reason"].get<std::string>() << ")\n";
  };
  std::cout << "object: " << c["object"].dump() << "\n";
  show("erosions", c["erosions"], c["erosions_na"]);
  show("dilations", c["dilations"], c["dilations_na"]);
  std::cout << (c["all_agree"].get<bool>() ? "all methods agree" : "methods diverge") << "\n";
}

int run_diverge(const std::string& ground, const std::string& se, const std::string& forget,
                const std::string& object, std::uint64_t samples, std::uint64_t seed) {
  LatticePtr lat = load_lattice(ground, forget);
  SePtr b = load_se(lat.get(), se);

  if (!object.empty()) {
    SubPtr d = load_sub(lat.get(), object);
    CString cmp{morpho_compare_methods(lat.get(), b.get(), d.get())};
    if (!cmp) die_on_error();
    ordered_json j = parse_or_die(cmp.str(), "comparison");
    print_comparison(j);
    return j["all_agree"].get<bool>() ? kExitOk : kExitFalsified;
  }

  if (samples == 0) die("diverge needs --object or --samples");
  CString scan{morpho_diverge_scan(lat.get(), b.get(), samples, seed)};
  if (!scan) die_on_error();
  ordered_json j = parse_or_die(scan.str(), "scan");
  std::cout << "checked " << j["samples"].get<std::uint64_t>() << " sampled objects (seed "
            << j["seed"].get<std::uint64_t>() << ")\n";
  for (const auto& c : j["divergent"]) print_comparison(c);
  const bool agree = j["all_agree"].get<bool>();
  std::cout << (agree ? "all methods agree" : "methods diverge") << "\n";
  return agree ? kExitOk : kExitFalsified;
}

int run_logic(const std::string& mode, const std::string& model_path,
              const std::string& formula, const std::string& profile,
              const std::string& proof_path, std::uint64_t samples, std::uint64_t seed,
              const std::string& report_path) {
  if (mode == "prove-check") {
    if (proof_path.empty()) die("prove-check needs --proof");
    CString res{morpho_check_proof(slurp(proof_path).c_str())};
    if (!res) die_on_error();
    ordered_json j = parse_or_die(res.str(), "proof result");
    if (j["ok"].get<bool>()) {
      std::cout << "accepted: " << j["conclusion"].get<std::string>() << " ["
                << j["classification"].get<std::string>() << "]\n";
      return kExitOk;
    }
    std::cout << "rejected at line " << j["failed_line"].get<long>() << ": "
              << j["reason"].get<std::string>() << "\n";
    return kExitFalsified;
  }

  if (model_path.empty()) die(mode + " needs --model");
  ModelPtr m(morpho_model_parse(slurp(model_path).c_str()), morpho_model_free);
  if (!m) die_on_error();

  if (mode == "eval") {
    if (formula.empty()) die("eval needs --formula");
    CString val{morpho_model_eval(m.get(), formula.c_str())};
    if (!val) die_on_error();
    std::cout << val.str();
    return kExitOk;
  }

  if (mode == "check") {
    if (formula.empty()) die("check needs --formula");
    int satisfied = 0;
    if (morpho_model_check(m.get(), formula.c_str(), &satisfied) != MORPHO_OK)
      die_on_error();
    std::cout << (satisfied ? "satisfied" : "not satisfied") << "\n";
    return satisfied ? kExitOk : kExitFalsified;
  }

  if (mode == "axioms") {
    CString rep{morpho_axiom_suite(m.get(), profile.c_str(), samples, seed)};
    if (!rep) die_on_error();
    ordered_json j = parse_or_die(rep.str(), "axiom suite");
    bool any_falsified = false;
    for (const auto& r : j) {
      const std::string status = r["status"];
      any_falsified = any_falsified || status == "falsified";
      std::cout << r["law"].get<std::string>() << ": " << status;
      if (r.contains("note")) std::cout << ": " << r["note"].get<std::string>();
      std::cout << "\n";
    }
    if (!report_path.empty()) spill(report_path, j.dump(2) + "\n");
    return any_falsified ? kExitFalsified : kExitOk;
  }

  die("unknown logic mode '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structuring-element morphology over set, graph, hypergraph and "
               "simplicial-complex lattices, with the modal-logic layer on top"};
  app.require_subcommand(1);

  std::string op, ground, object, se, forget, method = "generic";
  std::string out, dot, diff, law = "all", report;
  std::string mode, model_path, formula, profile = "base", proof_path;
  std::uint64_t samples = 0, seed = 0;

  CLI::App* morph = app.add_subcommand("morph", "Apply an operator to a subobject");
  morph->add_option("op", op, "erode|dilate|open|close")->required();
  morph->add_option("--ground", ground, "ground JSON file")->required();
  morph->add_option("--object", object, "subobject JSON file")->required();
  morph->add_option("--se", se, "structuring element JSON file")->required();
  morph->add_option("--forget", forget, "element|vertex|edge|hyperedge")->required();
  morph->add_option("--method", method, "generic|fast|paper-algorithm");
  morph->add_option("--out", out, "write the result subobject here");
  morph->add_option("--dot", dot, "write a DOT rendering here");
  morph->add_option("--diff", diff, "baseline subobject for dashed diff styling");

  CLI::App* laws = app.add_subcommand("laws", "Check algebraic laws for a structuring element");
  laws->add_option("--ground", ground)->required();
  laws->add_option("--se", se)->required();
  laws->add_option("--forget", forget)->required();
  laws->add_option("--law", law, "a law id, or 'all'");
  laws->add_option("--samples", samples, "0 = exhaustive enumeration");
  laws->add_option("--seed", seed);
  laws->add_option("--report", report, "write the JSON report array here");

  CLI::App* diverge = app.add_subcommand("diverge", "Compare operator methods");
  diverge->add_option("--ground", ground)->required();
  diverge->add_option("--se", se)->required();
  diverge->add_option("--forget", forget)->required();
  diverge->add_option("--object", object, "compare on this subobject");
  diverge->add_option("--samples", samples, "or compare on sampled subobjects");
  diverge->add_option("--seed", seed);

  CLI::App* logic = app.add_subcommand("logic", "Evaluate formulas, validate axioms, check proofs");
  logic->add_option("mode", mode, "eval|check|axioms|prove-check")->required();
  logic->add_option("--model", model_path, "model JSON file");
  logic->add_option("--formula", formula);
  logic->add_option("--profile", profile, "base|s4|b|s5|classical");
  logic->add_option("--proof", proof_path, "proof JSON file");
  logic->add_option("--samples", samples, "suite sample count when not exhaustive");
  logic->add_option("--seed", seed);
  logic->add_option("--report", report, "write the JSON report array here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitBadInput : kExitOk;
  }

  if (morph->parsed())
    return run_morph(op, ground, object, se, forget, method, out, dot, diff);
  if (laws->parsed()) return run_laws(ground, se, forget, law, samples, seed, report);
  if (diverge->parsed()) return run_diverge(ground, se, forget, object, samples, seed);
  if (logic->parsed())
    return run_logic(mode, model_path, formula, profile, proof_path, samples, seed, report);
  return kExitBadInput;
}
