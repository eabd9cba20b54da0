#include "holocalc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace holocalc {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return kv.second.pass; });
}

namespace {

double rel(double num, double scale) { return num / std::max(1.0, scale); }

Vector random_unit_in(const Matrix& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector raw(basis.cols());
  for (Index i = 0; i < raw.size(); ++i) raw[i] = gauss(rng);
  Vector v = basis * raw;
  const double n = v.norm();
  if (n < 1e-12) return Vector(basis.col(0));
  return Vector(v / n);
}

std::string format_c(double c) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", c);
  return buf;
}

}  // namespace

TwoJet jet_from_config(const RunConfig& cfg) {
  if (cfg.model == "custom") {
    if (cfg.jet_file.empty())
      throw std::invalid_argument("model 'custom' needs a jet file");
    return load_jet_file(cfg.jet_file);
  }
  const ModelPtr m = find_model(cfg.model);
  const AdmissibleElement adm = find_admissible(*m);
  if (m->flat()) return orbit_jet(m, adm);
  return family_jet(m, adm, cfg.c);
}

VerificationReport verify_jet(const TwoJet& jet, const RunConfig& cfg) {
  const SymmetricSpaceModel& m = jet.model();
  VerificationReport r;
  r.model = m.name();
  r.epsilon = m.epsilon();
  r.c = jet.c();
  r.tol = cfg.tol;
  r.ode_step = cfg.ode_step;
  r.seed = cfg.seed;
  r.dim_g = m.dim_g();
  r.dim_k = m.dim_k();
  r.dim_p = m.dim_p();

  const Subspace fn = first_normal(jet);
  const Subspace osc = second_osculating(jet);
  r.dim_tangent = jet.tangent().dim();
  r.dim_normal = jet.normal().dim();
  r.dim_first_normal = fn.dim();
  r.dim_osculating = osc.dim();

  const std::optional<Matrix> j = hermitian_structure(m);
  r.hermitian = j.has_value();

  const HolonomyResult hol = extrinsic_hol(jet);
  r.hol_ambient_dim = hol.ambient.dim();
  r.hol_plus_dim = hol.plus.dim();
  r.hol_minus_dim = hol.minus_part.dim();
  r.hol_extrinsic_dim = hol.extrinsic.dim();
  r.hol_codim = hol.codim;

  // Pinned thresholds as multiples of the working tolerance; at the default
  // 1e-9 they are 1e-10, 1e-9, 1e-8 and 1e-6.
  const double tight = 0.1 * cfg.tol;
  const double base = cfg.tol;
  const double loose = 10.0 * cfg.tol;
  const double transport = 1000.0 * cfg.tol;

  const auto put = [&](const std::string& name, double residual,
                       double threshold) {
    r.checks[name] = CheckEntry{residual <= threshold, residual};
  };
  const auto put_flag = [&](const std::string& name, bool pass,
                            double residual) {
    r.checks[name] = CheckEntry{pass, residual};
  };

  std::mt19937_64 rng(cfg.seed);
  const bool catalog_jet = jet.label() != "custom";
  const bool family = jet.label() == "family" && jet.c() != 0.0;

  put("jet_structure", jet_structure_residual(jet), tight);
  put("semiparallel", check_semiparallel(jet), loose);
  put("curv_inv_tangent", check_curvature_invariance(m, jet.tangent()), base);
  put("curv_inv_first_normal", check_curvature_invariance(m, fn), base);
  if (!m.flat()) put("fundamental", check_fundamental(jet), loose);
  put("curvature_h_invariance",
      curvature_four_form_residual(jet, rng, 20), loose);
  put("curvature_leibniz", curvature_derivation_residual(jet, rng, 20),
      loose);
  put("osculating_stable", osculating_stability_residual(jet), loose);

  // Rank-style facts: pass means the computed flag matches what this kind
  // of jet predicts (nondegenerate and 1-full exactly when the family
  // scale is nonzero); user-supplied jets carry no prediction.
  {
    const bool expected = jet.c() != 0.0;
    const bool value = check_one_full(jet);
    put_flag("one_full", catalog_jet ? value == expected : true,
             one_full_residual(jet));
    const bool nd = check_nondegenerate(jet);
    put_flag("nondegenerate", catalog_jet ? nd == expected : true,
             nondegeneracy_defect(jet));
  }
  put("eschenburg", eschenburg_residual(jet), loose);

  put("hol_o_invariance", hol.o_invariance_residual, loose);
  put_flag("hol_direct_sum", hol.direct_sum_defect == 0.0,
           hol.direct_sum_defect);
  put("hol_closure", hol.closure_residual, loose);
  put("hol_stability", hol.stability_residual, loose);
  put("hol_reflection", hol.reflection_residual, loose);

  if (family && !m.flat()) {
    const Subspace ambient_odd =
        intersection(hol.ambient, odd_operator_span(jet));
    put("h_span_is_ambient_minus",
        h_operator_span(jet).equality_residual(ambient_odd), loose);
    const Subspace ideal =
        commutator_ideal_span(hol.ambient, m.dim_p(), m.tol());
    put("extrinsic_contains_commutator",
        hol.extrinsic.containment_residual(ideal), loose);
  }

  if (j) {
    put("lagrangian", lagrangian_residual(jet, *j), base);
    put("j_orthogonality", j_orthogonality_residual(hol.extrinsic, *j), base);
    if (jet.c() != 0.0)
      put("j_in_h_span", j_least_squares_residual(jet, *j), loose);
  }

  {
    double worst = 0.0;
    for (int t = 0; t < 3; ++t) {
      const Vector x = random_unit_in(jet.tangent().basis(), rng);
      const Matrix mu = transport_mu(jet, {{x, 1.0}}, cfg.ode_step);
      const Matrix target = expm(jet.h_of(x));
      worst = std::max(worst, rel((mu - target).norm(), target.norm()));
    }
    put("transport_geodesic", worst, loose);
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 2; ++t) {
      const Vector x = random_unit_in(jet.tangent().basis(), rng);
      const Vector y = random_unit_in(jet.tangent().basis(), rng);
      const Matrix mu = transport_mu(jet, {{x, 1.0}, {y, 1.0}}, cfg.ode_step);
      const Matrix target = expm(jet.h_of(x)) * expm(jet.h_of(y));
      worst = std::max(worst, rel((mu - target).norm(), target.norm()));
    }
    put("transport_broken", worst, transport);
  }
  put("transport_stability",
      transport_stability_residual(jet, hol.extrinsic, rng, 20, cfg.ode_step),
      transport);
  put("transport_curvature",
      transport_curvature_residual(jet, rng, 10, cfg.ode_step), transport);

  // The small-centralizer criterion forces a nonzero odd holonomy part
  // whenever x -> 𝐡(x) is injective, so it only applies to nondegenerate
  // jets.
  if (!m.flat() && check_nondegenerate(jet)) {
    const Index diag = centralizer_diagnostic(jet);
    const bool implication = diag >= jet.tangent().dim() ||
                             hol.minus_part.dim() > 0;
    put_flag("centralizer_link", implication, static_cast<double>(diag));
  }

  const Classification cls = classify_jet(jet, hol);
  r.classification = cls.expectation;
  put_flag("classification", cls.pass, cls.residual);
  return r;
}

std::map<std::string, VerificationReport> verify_all(const RunConfig& cfg) {
  std::map<std::string, VerificationReport> out;
  for (const ModelPtr& m : catalog()) {
    const AdmissibleElement adm = find_admissible(*m);
    RunConfig local = cfg;
    local.model = m->name();
    if (m->flat()) {
      out[m->name() + "/orbit"] = verify_jet(orbit_jet(m, adm), local);
    } else {
      for (const double c : {1.0, -0.5}) {
        local.c = c;
        out[m->name() + "/c=" + format_c(c)] =
            verify_jet(family_jet(m, adm, c), local);
      }
    }
  }
  out["sphere4/veronese"] = verify_jet(veronese_sphere_jet(), cfg);
  return out;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["model"] = r.model;
  j["epsilon"] = r.epsilon;
  j["c"] = r.c;
  j["dims"] = {{"g", r.dim_g},
               {"k", r.dim_k},
               {"p", r.dim_p},
               {"tangent", r.dim_tangent},
               {"normal", r.dim_normal},
               {"first_normal", r.dim_first_normal},
               {"osculating", r.dim_osculating}};
  j["hol"] = {{"ambient", r.hol_ambient_dim},
              {"plus", r.hol_plus_dim},
              {"minus", r.hol_minus_dim},
              {"extrinsic", r.hol_extrinsic_dim},
              {"codim", r.hol_codim}};
  j["hermitian"] = r.hermitian;
  json checks = json::object();
  for (const auto& [name, entry] : r.checks)
    checks[name] = {{"pass", entry.pass}, {"residual", entry.residual}};
  j["checks"] = checks;
  j["tolerances"] = {{"tol", r.tol}, {"ode_step", r.ode_step}};
  j["seed"] = r.seed;
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.model = j.at("model").get<std::string>();
  r.epsilon = j.at("epsilon").get<int>();
  r.c = j.at("c").get<double>();
  const json& d = j.at("dims");
  r.dim_g = d.at("g").get<Index>();
  r.dim_k = d.at("k").get<Index>();
  r.dim_p = d.at("p").get<Index>();
  r.dim_tangent = d.at("tangent").get<Index>();
  r.dim_normal = d.at("normal").get<Index>();
  r.dim_first_normal = d.at("first_normal").get<Index>();
  r.dim_osculating = d.at("osculating").get<Index>();
  const json& h = j.at("hol");
  r.hol_ambient_dim = h.at("ambient").get<Index>();
  r.hol_plus_dim = h.at("plus").get<Index>();
  r.hol_minus_dim = h.at("minus").get<Index>();
  r.hol_extrinsic_dim = h.at("extrinsic").get<Index>();
  r.hol_codim = h.at("codim").get<Index>();
  r.hermitian = j.at("hermitian").get<bool>();
  for (const auto& [name, entry] : j.at("checks").items())
    r.checks[name] = CheckEntry{entry.at("pass").get<bool>(),
                                entry.at("residual").get<double>()};
  r.tol = j.at("tolerances").at("tol").get<double>();
  r.ode_step = j.at("tolerances").at("ode_step").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

json aggregate_to_json(const std::map<std::string, VerificationReport>& all) {
  json j = json::object();
  for (const auto& [key, report] : all) j[key] = report_to_json(report);
  return j;
}

}  // namespace holocalc
