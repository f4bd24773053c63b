// command-line front end: analyze single functions, run sweeps and
// verification suites, dump transforms, enumerate Fourier-matrix minors, and
// build coset-indicator witness functions
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gact/harness.hpp"
#include "gact/io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

int run_analyze(const std::string& function_path, int x0, bool regular_mode,
                const std::string& format, const std::string& out) {
  gact::PointFunction f = gact::load_function_file(function_path);
  gact::UncertaintyReport report =
      regular_mode ? gact::regular_analyze(f)
                   : gact::analyze(f, x0 >= 0 ? std::optional<int>(x0) : std::nullopt);
  if (format == "csv")
    gact::emit_report(gact::report_to_csv(report), out);
  else
    gact::emit_report(gact::canonical_dump(gact::report_to_json(report)), out);
  return 0;
}

int run_sweep_cmd(const std::string& config_path, int jobs, unsigned long long seed,
                  const std::string& format, const std::string& out) {
  gact::Json j;
  {
    std::ifstream in(config_path);
    if (!in.good()) throw gact::Error(gact::ErrorCode::IoError, "cannot open " + config_path);
    in >> j;
  }
  gact::SweepConfig cfg = gact::SweepConfig::from_json(j);
  if (jobs > 0) cfg.jobs = jobs;
  if (seed != 0) cfg.seed = seed;
  gact::SweepLedger ledger = gact::run_sweep(cfg);
  if (format == "csv")
    gact::emit_report(gact::ledger_to_csv(ledger), out);
  else
    gact::emit_report(gact::canonical_dump(gact::ledger_to_json(ledger)), out);
  std::cerr << "instances: " << ledger.instance_count
            << ", violations: " << ledger.violations.size() << ", elapsed: " << std::fixed
            << ledger.elapsed_seconds << "s\n";
  return ledger.clean() ? 0 : kExitViolation;
}

int run_verify(const std::vector<std::string>& groups, unsigned long long seed,
               const std::string& format, const std::string& out) {
  gact::SweepConfig cfg;
  cfg.groups = groups.empty() ? std::vector<std::string>{"Z6", "S3", "Z8", "D4"} : groups;
  cfg.seed = seed == 0 ? 1 : seed;
  gact::SweepLedger ledger = gact::run_verification(cfg);
  if (format == "csv")
    gact::emit_report(gact::ledger_to_csv(ledger), out);
  else
    gact::emit_report(gact::canonical_dump(gact::ledger_to_json(ledger)), out);
  return ledger.total_failures() == 0 ? 0 : kExitViolation;
}

int run_fourier(const std::string& function_path, const std::string& bundle_path,
                const std::string& out) {
  gact::PointFunction f = gact::load_function_file(function_path);
  gact::BundleRef bundle;
  if (!bundle_path.empty()) {
    bundle = gact::load_bundle_file(bundle_path);
  } else {
    gact::FieldRef e = gact::splitting_extension(f.field, f.gset->group()->exponent());
    bundle = gact::abelian_characters(f.gset->group(), e);
  }
  gact::DualSetRef dual = gact::DualSet::build(f.gset, bundle);
  gact::FourierTransform ft = gact::fourier_transform(f, dual);
  gact::emit_report(gact::canonical_dump(gact::transform_to_json(ft)), out);
  return 0;
}

int run_chebotarev(long long p, long long cap) {
  bool ok = gact::chebotarev_minor_check(p, cap);
  std::cout << (ok ? "all minors nonzero" : "ZERO MINOR FOUND") << " for p=" << p << "\n";
  return ok ? 0 : kExitViolation;
}

int run_make_witness(const std::string& group_ref, const std::string& subgroup_csv, int gamma,
                     int character_index, const std::string& field_spec, const std::string& scalar,
                     const std::string& out) {
  gact::GroupRef g = gact::resolve_group_ref(group_ref, std::filesystem::current_path());
  std::vector<int> elems;
  std::stringstream ss(subgroup_csv);
  for (std::string tok; std::getline(ss, tok, ',');) elems.push_back(std::stoi(tok));
  gact::Subgroup h(g, elems);
  gact::FieldRef fc = gact::field_from_spec(field_spec);
  auto chars = gact::homs_to_units(h, fc);
  if (character_index < 0 || character_index >= static_cast<int>(chars.size()))
    throw gact::Error(gact::ErrorCode::InputError,
                      "character index out of range, subgroup has " +
                          std::to_string(chars.size()) + " characters over " + field_spec);
  gact::FieldValue c = gact::FieldValue::parse(fc, scalar);
  gact::PointFunction f = gact::coset_indicator(g, h, gamma, chars[character_index], c, fc);

  gact::Json j;
  j["action"] = gact::Json{{"group", group_ref}, {"kind", "regular"}};
  j["field"] = field_spec;
  gact::Json values = gact::Json::array();
  for (const auto& v : f.values) values.push_back(v.to_string());
  j["values"] = std::move(values);
  // the report double-checks that the construction meets the classical bound
  gact::UncertaintyReport rep = gact::regular_analyze(f);
  j["classical_equality"] = rep.classical_equality;
  gact::emit_report(gact::canonical_dump(j), out);
  return rep.classical_equality ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact uncertainty-bound toolkit for finite group actions"};
  app.require_subcommand(1);

  std::string function_path, bundle_path, config_path, out, format = "json";
  std::string group_ref, subgroup_csv = "", field_spec = "Q", scalar = "1";
  int x0 = -1, jobs = 0, gamma = 0, character_index = 0;
  long long p = 5, cap = 7;
  unsigned long long seed = 0;
  bool regular_mode = false;
  std::vector<std::string> groups;

  auto* analyze = app.add_subcommand("analyze", "support bounds for one function file");
  analyze->add_option("--function", function_path, "function JSON file")->required();
  analyze->add_option("--x0", x0, "base point (defaults to the minimal support point)");
  analyze->add_flag("--regular", regular_mode, "report the right-stabilizer block");
  analyze->add_option("--format", format, "json|csv");
  analyze->add_option("--out", out, "output path (stdout when omitted)");

  auto* sweep = app.add_subcommand("sweep", "exhaustive bound verification over a config");
  sweep->add_option("--config", config_path, "sweep config JSON")->required();
  sweep->add_option("--jobs", jobs, "parallel triple workers");
  sweep->add_option("--seed", seed, "seed recorded in the ledger");
  sweep->add_option("--format", format, "json|csv");
  sweep->add_option("--out", out, "output path");

  auto* verify = app.add_subcommand("verify", "structural property suites");
  verify->add_option("--group", groups, "builtin names or group files (repeatable)");
  verify->add_option("--seed", seed, "seed for sampled instances");
  verify->add_option("--format", format, "json|csv");
  verify->add_option("--out", out, "output path");

  auto* fourier = app.add_subcommand("fourier", "transform dump for a function file");
  fourier->add_option("--function", function_path, "function JSON file")->required();
  fourier->add_option("--bundle", bundle_path, "representation bundle (abelian default)");
  fourier->add_option("--out", out, "output path");

  auto* chedbot = app.add_subcommand("chebotarev", "prime Fourier-matrix minor scan");
  chedbot->add_option("--p", p, "prime")->required();
  chedbot->add_option("--cap", cap, "largest admissible prime");

  auto* witness = app.add_subcommand("make-witness", "coset-indicator function builder");
  witness->add_option("--group", group_ref, "group file or builtin name")->required();
  witness->add_option("--subgroup", subgroup_csv, "comma-separated element indices")->required();
  witness->add_option("--gamma", gamma, "coset representative");
  witness->add_option("--character", character_index, "index into the subgroup character list");
  witness->add_option("--field", field_spec, "field spec");
  witness->add_option("--scalar", scalar, "nonzero scaling value");
  witness->add_option("--out", out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(function_path, x0, regular_mode, format, out);
    if (app.got_subcommand(sweep)) return run_sweep_cmd(config_path, jobs, seed, format, out);
    if (app.got_subcommand(verify)) return run_verify(groups, seed, format, out);
    if (app.got_subcommand(fourier)) return run_fourier(function_path, bundle_path, out);
    if (app.got_subcommand(chedbot)) return run_chebotarev(p, cap);
    if (app.got_subcommand(witness))
      return run_make_witness(group_ref, subgroup_csv, gamma, character_index, field_spec, scalar,
                              out);
  } catch (const gact::Error& e) {
    std::cerr << e.what() << "\n";
    return e.exit_class();
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
