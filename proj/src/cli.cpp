#include "redinv/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "redinv/experiments.hpp"
#include "redinv/invariants.hpp"
#include "redinv/parse.hpp"
#include "redinv/reduction.hpp"
#include "redinv/rings.hpp"

namespace redinv {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Options {
  std::string ringPath;
  std::string idealExpr = "m";
  int samples = 20;
  int scanSamples = 100;
  int n = 3;
  std::uint64_t seed = kDefaultSeed;
  int rcap = kDefaultRCap;
  int ncap = kDefaultNCap;
  bool json = false;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::parse_error, "cannot open ring file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

ParsedInput load_ring(const Options& o) {
  return parse_input(slurp(o.ringPath), file_stem(o.ringPath));
}

std::vector<std::string> generator_strings(const IdealHandle& I) {
  std::vector<std::string> out;
  out.reserve(I.generators.size());
  for (const auto& g : I.generators)
    out.push_back(g.str(I.ring->variables()));
  return out;
}

std::string paren_list(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s + ")";
}

std::string ring_display(const ParsedInput& in) {
  const auto& R = *in.ring;
  std::string s = R.name().empty() ? "ring" : R.name();
  s += ": " + R.field().str() + "[";
  const auto& vars = R.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += vars[i];
  }
  s += "]";
  if (!R.defining_gens().empty()) {
    std::vector<std::string> defs;
    for (const auto& g : R.defining_gens()) defs.push_back(g.str(vars));
    s += "/" + paren_list(defs);
  }
  return s;
}

void emit_report(const ExperimentReport& rep, bool asJson) {
  if (asJson) {
    std::cout << rep.dump(2) << "\n";
    return;
  }
  const json& p = rep.payload;
  std::cout << "experiment: " << p.at("experiment").get<std::string>() << "\n";
  if (p.contains("ring") && p["ring"].contains("name"))
    std::cout << "ring: " << p["ring"]["name"].get<std::string>() << "\n";
  std::cout << "samples: " << p.at("samples") << "  seed: " << p.at("seed")
            << "\n";
  const std::string exp = p.at("experiment");
  if (exp == "serre") {
    const json& obs = p.at("observations").front();
    std::cout << "e0 = " << p.at("e0")
              << ", lambda(A/I) = " << p.at("lambda_A_mod_I")
              << ", lambda(I/J) = " << obs.at("lambda_I_mod_J") << "\n"
              << "identity: lambda(I/J) = e0 - lambda(A/I)  ["
              << obs.at("lhs") << " = " << obs.at("rhs") << "]\n";
  } else if (exp == "valabrega_valla") {
    const json& obs = p.at("observations").front();
    std::cout << "e0 = " << p.at("e0")
              << ", lambda(A/I) = " << p.at("lambda_A_mod_I")
              << ", lambda(I/I^2) = " << p.at("lambda_I_mod_I2")
              << ", lambda(I^2/JI) = " << obs.at("lambda_I2_mod_JI") << "\n"
              << "identity: lambda(I^2/JI) = e0 + (d-1)*lambda(A/I) - "
                 "lambda(I/I^2)  ["
              << obs.at("lhs") << " = " << obs.at("rhs") << "]\n";
  } else if (exp == "theorem1") {
    std::cout << "d = " << p.at("d") << ", e = " << p.at("e")
              << ", mu(m) = " << p.at("mu_m")
              << ", mu(m^2) = " << p.at("mu_m2") << "\n"
              << "predicted lambda(m^3/J m^2) = " << p.at("predicted_lambda3")
              << "\n";
    if (!p.at("observations").empty())
      std::cout << "observed lambda(m^3/J m^2) = "
                << p["observations"].front().at("lambda_m3_mod_Jm2")
                << " (constant across samples: "
                << (p.at("constant_across_samples").get<bool>() ? "yes" : "no")
                << ")\n";
  } else if (exp == "koszul") {
    std::cout << "d = " << p.at("d") << ", mu(m) = " << p.at("mu_m")
              << ", expected lambda(Jm/Jm^2) = d*mu(m) - C(d,2) = "
              << p.at("expected") << "\n";
    if (!p.at("observations").empty())
      std::cout << "observed lambda(Jm/Jm^2) = "
                << p["observations"].front().at("lambda_Jm_mod_Jm2") << "\n";
  } else if (exp == "huckaba") {
    for (const json& obs : p.at("observations")) {
      std::cout << obs.at("field").get<std::string>() << ": I = "
                << paren_list(obs.at("ideal").get<std::vector<std::string>>())
                << "\n";
      std::cout << "  J1 = "
                << paren_list(obs.at("J1").get<std::vector<std::string>>())
                << ": lambda(I^3/J1 I^2) = " << obs.at("lambda_I3_mod_J1I2")
                << ", minimal reduction: "
                << (obs.at("J1_minimal_reduction").get<bool>() ? "yes" : "no")
                << ", r = " << obs.at("r_J1") << "\n";
      std::cout << "  J2 = "
                << paren_list(obs.at("J2").get<std::vector<std::string>>())
                << ": lambda(I^3/J2 I^2) = " << obs.at("lambda_I3_mod_J2I2")
                << ", minimal reduction: "
                << (obs.at("J2_minimal_reduction").get<bool>() ? "yes" : "no")
                << ", r = " << obs.at("r_J2") << "\n";
    }
  } else if (exp == "scan_question") {
    const json& scan = p.at("scan");
    std::cout << "n = " << scan.at("n") << ": lambda(m^" << scan.at("n").get<int>() + 1
              << "/J m^" << scan.at("n") << ") over " << p.at("samples")
              << " samples: min = " << scan.at("min")
              << ", max = " << scan.at("max") << ", constant: "
              << (scan.at("all_equal").get<bool>() ? "yes" : "no") << "\n";
    if (scan.at("flagged_finding").get<bool>())
      std::cout << "FLAGGED: non-constant values observed. This is evidence "
                   "only; cross-check with an independent system before "
                   "drawing conclusions.\n";
  }
  if (!p.at("details").get<std::string>().empty())
    std::cout << "details: " << p.at("details").get<std::string>() << "\n";
  std::cout << "verdict: " << p.at("verdict").get<std::string>() << "\n";
}

int do_length(const Options& o) {
  ParsedInput in = load_ring(o);
  IdealHandle I = eval_ideal_expression(o.idealExpr, in);
  std::uint64_t lam = colength(in.ring, I, o.ncap);
  if (o.json) {
    json j;
    j["schema"] = "redinv.command/1";
    j["op"] = "length";
    j["ring"] = ring_to_json(in.ring);
    j["ideal"] = o.idealExpr;
    j["generators"] = generator_strings(I);
    j["lambda"] = lam;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << lam << "\n";
  }
  return kExitPass;
}

int do_invariants(const Options& o) {
  ParsedInput in = load_ring(o);
  InvariantReport rep = invariant_report(in.ring, o.seed);
  if (o.json) {
    std::cout << invariant_report_json(rep).dump(2) << "\n";
  } else {
    std::cout << ring_display(in) << "\n"
              << "d = " << rep.d << "\n"
              << "e = " << rep.e << "\n"
              << "mu(m) = " << rep.mu_m << "\n"
              << "mu(m^2) = " << rep.mu_m2 << "\n"
              << "predicted lambda(m^3/J m^2) = " << rep.predicted_lambda3
              << "\n";
  }
  return kExitPass;
}

int do_reduce(const Options& o) {
  ParsedInput in = load_ring(o);
  IdealHandle I = eval_ideal_expression(o.idealExpr, in);
  ReductionSample s =
      sample_minimal_reduction(in.ring, I, o.seed, kDefaultMaxDraws, o.rcap);
  if (o.json) {
    json j;
    j["schema"] = "redinv.command/1";
    j["op"] = "reduce";
    j["ring"] = ring_to_json(in.ring);
    j["ideal"] = generator_strings(I);
    j["J"] = generator_strings(s.J);
    json mat = json::array();
    for (const auto& row : s.coefficientMatrix) {
      json r = json::array();
      for (const auto& c : row) r.push_back(c.str());
      mat.push_back(std::move(r));
    }
    j["coefficient_matrix"] = std::move(mat);
    j["status"] =
        s.status == ReductionSample::Status::verified ? "verified" : "rejected";
    j["reduction_number"] = s.reductionNumber;
    j["seed"] = s.seed;
    j["draw_index"] = s.drawIndex;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "I = " << paren_list(generator_strings(I)) << "\n"
              << "J = " << paren_list(generator_strings(s.J)) << "\n"
              << "status: verified minimal reduction\n"
              << "reduction number r = " << s.reductionNumber << "\n"
              << "seed: " << s.seed << ", draw: " << s.drawIndex << "\n";
  }
  return kExitPass;
}

int do_verify(const std::string& kind, const Options& o) {
  ParsedInput in = load_ring(o);
  ExperimentReport rep;
  if (kind == "serre") {
    rep = verify_serre(in.ring, eval_ideal_expression(o.idealExpr, in),
                       o.samples, o.seed);
  } else if (kind == "vv") {
    rep = verify_valabrega_valla(
        in.ring, eval_ideal_expression(o.idealExpr, in), o.samples, o.seed);
  } else if (kind == "theorem1") {
    rep = verify_theorem1(in.ring, o.samples, o.seed);
  } else {
    rep = verify_koszul_count(in.ring, o.samples, o.seed);
  }
  emit_report(rep, o.json);
  return rep.pass() ? kExitPass : kExitFail;
}

int do_example(const Options& o) {
  ExperimentReport rep = reproduce_huckaba();
  emit_report(rep, o.json);
  return rep.pass() ? kExitPass : kExitFail;
}

int do_scan(const Options& o) {
  ParsedInput in = load_ring(o);
  ExperimentReport rep = scan_question(in.ring, o.n, o.scanSamples, o.seed);
  emit_report(rep, o.json);
  return rep.pass() ? kExitPass : kExitFail;
}

int do_cm_check(const Options& o) {
  ParsedInput in = load_ring(o);
  CmStatus st = check_cohen_macaulay(in.ring, o.seed);
  if (o.json) {
    json j;
    j["schema"] = "redinv.command/1";
    j["op"] = "cm-check";
    j["ring"] = ring_to_json(in.ring);
    j["seed"] = o.seed;
    j["status"] = cm_status_name(st);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << ring_display(in) << "\n"
              << "Cohen-Macaulay check: " << cm_status_name(st) << "\n";
  }
  switch (st) {
    case CmStatus::cm:
      return kExitPass;
    case CmStatus::not_cm:
      return kExitFail;
    case CmStatus::inconclusive:
      return kExitError;
  }
  return kExitError;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{
      "redinv - exact lengths, multiplicities, and minimal reductions of "
      "m-primary ideals in local/graded rings"};
  app.require_subcommand(1);

  auto add_ring = [&](CLI::App* cmd) {
    cmd->add_option("--ring", o.ringPath, "ring description file")
        ->required();
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "emit a JSON report");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "master random seed (default 42)");
  };

  CLI::App* length = app.add_subcommand(
      "length", "lambda(A/I) for an ideal expression (default: m)");
  add_ring(length);
  length->add_option("--ideal", o.idealExpr,
                     "ideal expression, e.g. \"(x,y)^2\" or \"I*m\"");
  length->add_option("--ncap", o.ncap, "truncation cap for local lengths");
  add_json(length);

  CLI::App* invariants = app.add_subcommand(
      "invariants", "d, e, mu(m), mu(m^2), and the predicted lambda(m^3/Jm^2)");
  add_ring(invariants);
  add_seed(invariants);
  add_json(invariants);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "sample and print a verified minimal reduction");
  add_ring(reduce);
  reduce->add_option("--ideal", o.idealExpr, "ideal to reduce (default: m)");
  add_seed(reduce);
  reduce->add_option("--rcap", o.rcap, "reduction-number search cap");
  add_json(reduce);

  CLI::App* verify = app.add_subcommand(
      "verify", "check a classical identity over sampled minimal reductions");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> verifyKinds = {
      {"serre", "lambda(I/J) = e0(I) - lambda(A/I)"},
      {"vv", "lambda(I^2/JI) = e0(I) + (d-1)lambda(A/I) - lambda(I/I^2)"},
      {"theorem1",
       "lambda(m^3/Jm^2) = e + (d-1)mu(m) - mu(m^2) - C(d-1,2), constant "
       "over samples"},
      {"koszul", "lambda(Jm/Jm^2) = d*mu(m) - C(d,2)"},
  };
  std::vector<CLI::App*> verifySubs;
  for (const auto& [name, desc] : verifyKinds) {
    CLI::App* sub = verify->add_subcommand(name, desc);
    add_ring(sub);
    if (name == "serre" || name == "vv")
      sub->add_option("--ideal", o.idealExpr,
                      "m-primary ideal to test (default: m)");
    sub->add_option("--samples", o.samples, "sampled reductions (default 20)");
    add_seed(sub);
    add_json(sub);
    verifySubs.push_back(sub);
  }

  CLI::App* example =
      app.add_subcommand("example", "run a bundled worked example");
  example->require_subcommand(1);
  CLI::App* huckaba = example->add_subcommand(
      "huckaba",
      "I = (x^7, x^6y, x^2y^5, y^7): lambda(I^3/J I^2) for two minimal "
      "reductions, over GF(32003) and QQ");
  add_json(huckaba);

  CLI::App* scan = app.add_subcommand(
      "scan", "distribution scans over sampled minimal reductions");
  scan->require_subcommand(1);
  CLI::App* question = scan->add_subcommand(
      "question",
      "scan lambda(m^(n+1)/J m^n) across samples; reports, never concludes");
  add_ring(question);
  question->add_option("--n", o.n, "power n >= 3 (default 3)");
  question->add_option("--samples", o.scanSamples,
                       "sampled reductions (default 100)");
  add_seed(question);
  add_json(question);

  CLI::App* cmCheck = app.add_subcommand(
      "cm-check", "test lambda(A/J) = e(m) for a sampled minimal reduction");
  add_ring(cmCheck);
  add_seed(cmCheck);
  add_json(cmCheck);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (length->parsed()) return do_length(o);
    if (invariants->parsed()) return do_invariants(o);
    if (reduce->parsed()) return do_reduce(o);
    if (verify->parsed()) {
      for (std::size_t i = 0; i < verifySubs.size(); ++i)
        if (verifySubs[i]->parsed())
          return do_verify(verifyKinds[i].first, o);
    }
    if (example->parsed()) return do_example(o);
    if (scan->parsed()) return do_scan(o);
    if (cmCheck->parsed()) return do_cm_check(o);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == Errc::parse_error || e.code() == Errc::semantic_error)
               ? kExitUsage
               : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace redinv
