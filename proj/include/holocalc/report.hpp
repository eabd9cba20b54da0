#ifndef HOLOCALC_REPORT_HPP
#define HOLOCALC_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "holocalc/holonomy.hpp"

namespace holocalc {

using json = nlohmann::ordered_json;

/// Outcome of one verification check.  "pass" means the computed value
/// agrees with what the construction predicts for this kind of jet; the
/// residual is the measured quantity (a norm for identities, a dimension
/// defect for rank statements).
struct CheckEntry {
  bool pass = false;
  double residual = 0.0;
};

struct VerificationReport {
  std::string model;
  int epsilon = -1;
  double c = 1.0;
  Index dim_g = 0, dim_k = 0, dim_p = 0;
  Index dim_tangent = 0, dim_normal = 0, dim_first_normal = 0,
        dim_osculating = 0;
  Index hol_ambient_dim = 0, hol_plus_dim = 0, hol_minus_dim = 0,
        hol_extrinsic_dim = 0, hol_codim = 0;
  bool hermitian = false;
  std::string classification;  // human-readable expectation, not serialized
  std::map<std::string, CheckEntry> checks;
  double tol = kDefaultTol;
  double ode_step = 1e-3;
  std::uint64_t seed = 0;

  bool all_pass() const;
};

json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

struct RunConfig {
  std::string model = "su3_so3";
  double c = 1.0;
  double tol = kDefaultTol;
  double ode_step = 1e-3;
  std::uint64_t seed = 0;
  std::string jet_file;  // used when model == "custom"
};

/// Runs the full check battery on one jet.  Check thresholds are pinned
/// multiples of cfg.tol; random draws come from a generator seeded with
/// cfg.seed so reports are reproducible.
VerificationReport verify_jet(const TwoJet& jet, const RunConfig& cfg);

/// Builds the jet a config describes: a family jet for curved catalog
/// models, the orbit jet for flat ones, or a jet loaded from cfg.jet_file
/// when model == "custom".
TwoJet jet_from_config(const RunConfig& cfg);

/// Sweep over the whole catalog: every curved model at c = 1 and c = -0.5,
/// the flat orbit jet, and the transplanted sphere surface jet.  Keys are
/// "<model>/c=<value>", "<model>/orbit", "sphere4/veronese"; the map order
/// is the deterministic output order.
std::map<std::string, VerificationReport> verify_all(const RunConfig& cfg);

json aggregate_to_json(const std::map<std::string, VerificationReport>& all);

}  // namespace holocalc

#endif
