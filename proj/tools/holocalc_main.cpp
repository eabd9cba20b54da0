// Command line front end: lists the model catalog, verifies a single jet,
// or sweeps the whole catalog, with optional JSON reports.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "holocalc/report.hpp"

namespace {

using namespace holocalc;

int run_list() {
  for (const ModelPtr& m : catalog()) {
    std::printf("%s | ε=%d | %lld/%lld/%lld | hermitian=%s%s\n",
                m->name().c_str(), m->epsilon(),
                static_cast<long long>(m->dim_g()),
                static_cast<long long>(m->dim_k()),
                static_cast<long long>(m->dim_p()),
                hermitian_structure(*m) ? "true" : "false",
                m->flat() ? " | flat" : "");
  }
  return 0;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

void print_report(const VerificationReport& r, const TwoJet& jet) {
  std::printf("model: %s (%s, c=%g)\n", r.model.c_str(), jet.label().c_str(),
              r.c);
  std::printf("epsilon: %d   dims g/k/p: %lld/%lld/%lld   hermitian: %s\n",
              r.epsilon, static_cast<long long>(r.dim_g),
              static_cast<long long>(r.dim_k),
              static_cast<long long>(r.dim_p),
              r.hermitian ? "true" : "false");
  std::printf(
      "tangent/normal: %lld/%lld   first normal: %lld   osculating: %lld\n",
      static_cast<long long>(r.dim_tangent),
      static_cast<long long>(r.dim_normal),
      static_cast<long long>(r.dim_first_normal),
      static_cast<long long>(r.dim_osculating));
  std::printf(
      "hol ambient/plus/minus: %lld/%lld/%lld   extrinsic: %lld   codim: "
      "%lld\n",
      static_cast<long long>(r.hol_ambient_dim),
      static_cast<long long>(r.hol_plus_dim),
      static_cast<long long>(r.hol_minus_dim),
      static_cast<long long>(r.hol_extrinsic_dim),
      static_cast<long long>(r.hol_codim));
  std::printf("one_full: %s   nondegenerate: %s\n",
              check_one_full(jet) ? "true" : "false",
              check_nondegenerate(jet) ? "true" : "false");
  std::printf("classification: %s\n", r.classification.c_str());
  std::printf("checks:\n");
  int passed = 0;
  for (const auto& [name, entry] : r.checks) {
    std::printf("  %-28s %s   %.3g\n", name.c_str(),
                entry.pass ? "pass" : "FAIL", entry.residual);
    if (entry.pass) ++passed;
  }
  std::printf("result: %s (%d/%zu checks)\n", r.all_pass() ? "PASS" : "FAIL",
              passed, r.checks.size());
}

int run_compute(const RunConfig& cfg, const std::string& json_path) {
  const TwoJet jet = jet_from_config(cfg);
  const VerificationReport report = verify_jet(jet, cfg);
  print_report(report, jet);
  if (!json_path.empty()) write_json_file(json_path, report_to_json(report));
  return report.all_pass() ? 0 : 1;
}

int run_verify_all(const RunConfig& cfg, const std::string& json_path) {
  const auto all = verify_all(cfg);
  bool ok = true;
  for (const auto& [key, report] : all) {
    int passed = 0;
    for (const auto& [name, entry] : report.checks)
      if (entry.pass) ++passed;
    const bool this_ok = report.all_pass();
    ok = ok && this_ok;
    std::printf("%-24s %s (%d/%zu checks)\n", key.c_str(),
                this_ok ? "PASS" : "FAIL", passed, report.checks.size());
    if (!this_ok) {
      for (const auto& [name, entry] : report.checks)
        if (!entry.pass)
          std::printf("    %-26s FAIL   %.3g\n", name.c_str(),
                      entry.residual);
    }
  }
  std::printf("total: %zu jets, %s\n", all.size(),
              ok ? "all checks pass" : "some checks fail");
  if (!json_path.empty()) write_json_file(json_path, aggregate_to_json(all));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holocalc: symmetric space jets and extrinsic holonomy"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string json_path;

  app.add_subcommand("list", "List the model catalog");

  CLI::App* compute =
      app.add_subcommand("compute", "Verify one jet and print a report");
  compute->add_option("--model", cfg.model,
                      "Catalog model name, or 'custom' with --jet-file");
  compute->add_option("--c", cfg.c, "Family scale parameter");
  compute->add_option("--tol", cfg.tol, "Working tolerance")
      ->envname("HOLOCALC_TOL");
  compute->add_option("--ode-step", cfg.ode_step, "Transport step size");
  compute->add_option("--seed", cfg.seed, "Random seed for sampled checks");
  compute->add_option("--json", json_path, "Write the report to this file");
  compute->add_option("--jet-file", cfg.jet_file,
                      "Jet description file for model 'custom'");

  CLI::App* sweep =
      app.add_subcommand("verify-all", "Verify every catalog jet");
  sweep->add_option("--tol", cfg.tol, "Working tolerance")
      ->envname("HOLOCALC_TOL");
  sweep->add_option("--ode-step", cfg.ode_step, "Transport step size");
  sweep->add_option("--seed", cfg.seed, "Random seed for sampled checks");
  sweep->add_option("--json", json_path,
                    "Write the aggregate report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("list")) return run_list();
    if (app.got_subcommand("compute")) return run_compute(cfg, json_path);
    return run_verify_all(cfg, json_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
