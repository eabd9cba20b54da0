// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds.  Thresholds are pinned absolute numbers, independent of any
// runtime configuration.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "exact_oracle.hpp"
#include "holocalc/report.hpp"

namespace {

using namespace holocalc;

struct NamedJet {
  std::string key;
  TwoJet jet;
};

std::vector<NamedJet> sweep_jets() {
  std::vector<NamedJet> out;
  for (const ModelPtr& m : catalog()) {
    const AdmissibleElement a = find_admissible(*m);
    if (m->flat()) {
      out.push_back({m->name() + "/orbit", orbit_jet(m, a)});
    } else {
      out.push_back({m->name() + "/c=1", family_jet(m, a, 1.0)});
      out.push_back({m->name() + "/c=-0.5", family_jet(m, a, -0.5)});
    }
  }
  out.push_back({"sphere4/veronese", veronese_sphere_jet()});
  return out;
}

std::vector<NamedJet> family_jets() {
  std::vector<NamedJet> out;
  for (NamedJet& nj : sweep_jets())
    if (nj.jet.label() == "family") out.push_back(std::move(nj));
  return out;
}

Vector random_unit(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = gauss(rng);
  return v / v.norm();
}

int failed_subchecks = 0;

bool sub(bool ok, const char* what, const std::string& where) {
  if (!ok) {
    ++failed_subchecks;
    std::fprintf(stderr, "  subcheck failed: %s [%s]\n", what, where.c_str());
  }
  return ok;
}

// 1. Codimension table of the catalog sweep, sphere-surface dimension
//    alternative, default rank tolerance, and wall time under ten seconds.
bool criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto all = verify_all(RunConfig{});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  bool ok = true;
  ok &= sub(all.at("quadric3/c=1").hol_codim == 1, "codim 1", "quadric3");
  for (const std::string key : {"sphere5/c=1", "su3_so3/c=1", "sl3_so3/c=1",
                                "grassmann33/c=1"})
    ok &= sub(all.at(key).hol_codim == 0, "codim 0", key);
  const Index ver = all.at("sphere4/veronese").hol_extrinsic_dim;
  ok &= sub(ver == 4 || ver == 6, "extrinsic dim in {4, 6}", "veronese");
  ok &= sub(RunConfig{}.tol == 1e-9, "default rank tolerance 1e-9", "config");
  ok &= sub(secs < 10.0, "sweep under 10 s", std::to_string(secs) + " s");
  return ok;
}

// 2. Holonomy certificates on every jet of the sweep: the two parts meet
//    trivially, the span closes under brackets, it is stable under the
//    second fundamental form operators, and conjugation by the normal
//    reflection preserves it.
bool criterion2() {
  bool ok = true;
  for (const NamedJet& nj : sweep_jets()) {
    const HolonomyResult hol = extrinsic_hol(nj.jet);
    ok &= sub(hol.direct_sum_defect == 0.0, "direct sum", nj.key);
    ok &= sub(hol.o_invariance_residual <= 1e-8, "osculating invariance",
              nj.key);
    ok &= sub(hol.closure_residual <= 1e-8, "bracket closure", nj.key);
    ok &= sub(hol.stability_residual <= 1e-8, "operator stability", nj.key);
    ok &= sub(hol.reflection_residual <= 1e-8, "reflection invariance",
              nj.key);
  }
  return ok;
}

// 3. Operator span identities on the family jets: the second fundamental
//    form operators span the odd part of the ambient curvature algebra;
//    the extrinsic holonomy contains the ambient commutator ideal; and the
//    jet-level odd part recovers that span, with a one dimensional
//    correction by the complex structure in the Hermitian case.
bool criterion3() {
  bool ok = true;
  for (const NamedJet& nj : family_jets()) {
    const SymmetricSpaceModel& m = nj.jet.model();
    const HolonomyResult hol = extrinsic_hol(nj.jet);
    const Subspace h_span = h_operator_span(nj.jet);
    const Subspace ambient_odd =
        intersection(hol.ambient, odd_operator_span(nj.jet));
    ok &= sub(h_span.equality_residual(ambient_odd) <= 1e-8,
              "h spans the odd ambient part", nj.key);
    const Subspace ideal =
        commutator_ideal_span(hol.ambient, m.dim_p(), m.tol());
    ok &= sub(hol.extrinsic.containment_residual(ideal) <= 1e-8,
              "extrinsic contains the commutator ideal", nj.key);
    const std::optional<Matrix> j = hermitian_structure(m);
    if (!j) {
      ok &= sub(h_span.equality_residual(hol.minus_part) <= 1e-8,
                "h span equals the odd holonomy part", nj.key);
    } else {
      Matrix ext(flatten(*j).size(), 1);
      ext.col(0) = flatten(*j);
      const Subspace corrected =
          sum(hol.minus_part, Subspace::span(ext, m.tol()));
      ok &= sub(corrected.equality_residual(h_span) <= 1e-8,
                "odd part plus the complex structure equals the h span",
                nj.key);
      ok &= sub(hol.minus_part.dim() + 1 == h_span.dim(),
                "complex structure correction is one dimensional", nj.key);
      ok &= sub(j_least_squares_residual(nj.jet, *j) <= 1e-8,
                "complex structure lies in the h span", nj.key);
    }
  }
  return ok;
}

// 4. Lagrangian geometry of the quadric jet: the complex structure maps
//    the tangent space onto the normal space, is trace-orthogonal to the
//    extrinsic holonomy, and lies in the span of the jet operators.
bool criterion4() {
  const ModelPtr m = find_model("quadric3");
  const TwoJet jet = family_jet(m, find_admissible(*m), 1.0);
  const std::optional<Matrix> j = hermitian_structure(*m);
  bool ok = sub(j.has_value(), "complex structure exists", "quadric3");
  if (!j) return false;
  ok &= sub(lagrangian_residual(jet, *j) <= 1e-9, "Lagrangian tangent",
            "quadric3");
  ok &= sub(j_orthogonality_residual(extrinsic_hol(jet).extrinsic, *j) <= 1e-9,
            "trace orthogonality", "quadric3");
  ok &= sub(j_least_squares_residual(jet, *j) <= 1e-8, "j in the h span",
            "quadric3");
  return ok;
}

// 5. Pointwise curvature identities of every jet: semiparallelity, the
//    curvature invariance of the tangent and first normal spaces, the
//    composite fundamental identity on curved models, and the four-form
//    annihilation.
bool criterion5() {
  bool ok = true;
  std::mt19937_64 rng(81);
  for (const NamedJet& nj : sweep_jets()) {
    const SymmetricSpaceModel& m = nj.jet.model();
    ok &= sub(check_semiparallel(nj.jet) <= 1e-8, "semiparallel", nj.key);
    ok &= sub(check_curvature_invariance(m, nj.jet.tangent()) <= 1e-9,
              "tangent curvature invariance", nj.key);
    ok &= sub(check_curvature_invariance(m, first_normal(nj.jet)) <= 1e-9,
              "first normal curvature invariance", nj.key);
    if (!m.flat())
      ok &= sub(check_fundamental(nj.jet) <= 1e-8, "fundamental identity",
                nj.key);
    ok &= sub(curvature_four_form_residual(nj.jet, rng, 20) <= 1e-8,
              "four-form annihilation", nj.key);
  }
  return ok;
}

// 6. Parallel transport: the single-segment solution matches the matrix
//    exponential, broken paths match the product of exponentials, and the
//    extrinsic holonomy is stable under conjugation by transports over
//    twenty seeded paths per jet.
bool criterion6() {
  bool ok = true;
  std::mt19937_64 rng(82);
  for (const NamedJet& nj : sweep_jets()) {
    const Index dp = nj.jet.model().dim_p();
    for (int trial = 0; trial < 2; ++trial) {
      const Vector x = nj.jet.tangent().project(random_unit(rng, dp));
      const Matrix mu = transport_mu(nj.jet, {{x, 1.0}}, 1e-3);
      ok &= sub((mu - expm(nj.jet.h_of(x))).norm() <= 1e-8,
                "single segment matches expm", nj.key);
    }
    const Vector x = nj.jet.tangent().project(random_unit(rng, dp));
    const Vector y = nj.jet.tangent().project(random_unit(rng, dp));
    const Matrix mu = transport_mu(nj.jet, {{x, 0.8}, {y, 0.6}}, 1e-3);
    const Matrix target = expm(Matrix(0.8 * nj.jet.h_of(x))) *
                          expm(Matrix(0.6 * nj.jet.h_of(y)));
    ok &= sub((mu - target).norm() <= 1e-6, "broken path matches product",
              nj.key);
    const HolonomyResult hol = extrinsic_hol(nj.jet);
    ok &= sub(transport_stability_residual(nj.jet, hol.extrinsic, rng, 20,
                                           1e-3) <= 1e-6,
              "holonomy stable under transport", nj.key);
  }
  return ok;
}

// 7. The flat orbit jet is 1-full and nondegenerate with tangent dimension
//    two and normal dimension three.
bool criterion7() {
  const ModelPtr m = find_model("euclid_su3_so3");
  const TwoJet jet = orbit_jet(m, find_admissible(*m));
  bool ok = true;
  ok &= sub(jet.tangent().dim() == 2, "tangent dim 2", "euclid orbit");
  ok &= sub(jet.normal().dim() == 3, "normal dim 3", "euclid orbit");
  ok &= sub(first_normal(jet).dim() == 3, "first normal dim 3",
            "euclid orbit");
  ok &= sub(check_one_full(jet), "1-full", "euclid orbit");
  ok &= sub(check_nondegenerate(jet), "nondegenerate", "euclid orbit");
  return ok;
}

// 8. Ambient structure: curvature algebra dimension equals the isotropy
//    dimension on every curved model, the compact and split forms of the
//    rank-two model have matching eigensplit dimensions with the explicit
//    correspondence preserving admissibility, and the curvature sign
//    identity holds over one hundred seeded pairs per model.
bool criterion8() {
  bool ok = true;
  for (const ModelPtr& m : catalog()) {
    if (m->flat()) continue;
    ok &= sub(hol_ambient(*m).dim() == m->dim_k(),
              "ambient holonomy dim equals dim k", m->name());
  }

  const ModelPtr su3 = find_model("su3_so3");
  const ModelPtr sl3 = find_model("sl3_so3");
  const AdmissibleElement a_su3 = find_admissible(*su3);
  const AdmissibleElement a_sl3 = find_admissible(*sl3);
  const Eigensplit e_su3 = eigensplit(*su3, a_su3);
  const Eigensplit e_sl3 = eigensplit(*sl3, a_sl3);
  ok &= sub(e_su3.k0.size() == e_sl3.k0.size() &&
                e_su3.k_eps.size() == e_sl3.k_eps.size() &&
                e_su3.p0.dim() == e_sl3.p0.dim() &&
                e_su3.p_eps.dim() == e_sl3.p_eps.dim(),
            "dual forms share eigensplit dims", "su3_so3 vs sl3_so3");
  const Matrix mapped = sl3_element_from_su3(a_su3.X);
  ok &= sub(sl3->p_span().containment_residual(flatten(mapped)) <= 1e-8,
            "correspondence lands in the split form", "duality map");
  ok &= sub(a_sl3.residual <= 1e-8, "split form admissibility",
            "sl3_so3");

  std::mt19937_64 rng(83);
  for (const ModelPtr& m : catalog()) {
    if (m->flat()) continue;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = random_unit(rng, m->dim_p());
      const Vector y = random_unit(rng, m->dim_p());
      const double lhs = x.dot(m->curvature_op(x, y) * y);
      const Matrix b = bracket(m->p_matrix(x), m->p_matrix(y));
      const double rhs = static_cast<double>(m->epsilon()) * m->killing(b, b);
      worst = std::max(worst,
                       std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    ok &= sub(worst <= 1e-10, "curvature sign identity", m->name());
  }
  return ok;
}

// 9. Exact arithmetic agreement: dimensions, eigensplits, holonomy and
//    rank computations reproduced over the rationals on integer inputs
//    match the floating point route with zero mismatches.
bool criterion9() {
  int mismatches = 0;
  const auto tally = [&](bool same, const char* what,
                         const std::string& where) {
    if (!sub(same, what, where)) ++mismatches;
  };

  for (const oracle::ExactModel& em : oracle::exact_catalog()) {
    const ModelPtr m = find_model(em.name);
    tally(m->dim_k() == static_cast<Index>(em.k.size()), "dim k", em.name);
    tally(m->dim_p() == static_cast<Index>(em.p.size()), "dim p", em.name);
    std::vector<oracle::RatMat> combined = em.k;
    combined.insert(combined.end(), em.p.begin(), em.p.end());
    tally(m->dim_g() == oracle::span_dim(combined), "dim g by span", em.name);
    tally(m->dim_g() == oracle::closure_dim(combined), "dim g by closure",
          em.name);
    const oracle::SplitDims sd = oracle::eigensplit_dims(em);
    const Eigensplit es = eigensplit(*m, find_admissible(*m));
    tally(static_cast<int>(es.k0.size()) == sd.k0, "eigensplit k0", em.name);
    tally(static_cast<int>(es.k_eps.size()) == sd.keps, "eigensplit k_eps",
          em.name);
    tally(static_cast<int>(es.p0.dim()) == sd.p0, "eigensplit p0", em.name);
    tally(static_cast<int>(es.p_eps.dim()) == sd.peps, "eigensplit p_eps",
          em.name);
    tally(static_cast<int>(hol_ambient(*m).dim()) ==
              oracle::hol_ambient_dim(em),
          "ambient holonomy dim", em.name);
  }

  const oracle::QuadricHol q = oracle::quadric_hol_dims();
  const ModelPtr quadric = find_model("quadric3");
  const TwoJet jet = family_jet(quadric, find_admissible(*quadric), 1.0);
  const HolonomyResult hol = extrinsic_hol(jet);
  tally(static_cast<int>(first_normal(jet).dim()) == q.first_normal,
        "first normal dim", "quadric3");
  tally(static_cast<int>(hol.plus.dim()) == q.plus, "even part dim",
        "quadric3");
  tally(static_cast<int>(hol.minus_part.dim()) == q.minus, "odd part dim",
        "quadric3");
  tally(static_cast<int>(h_operator_span(jet).dim()) == q.h_span,
        "h span dim", "quadric3");
  tally(static_cast<int>(hol.extrinsic.dim()) == q.extrinsic,
        "extrinsic dim", "quadric3");

  std::mt19937_64 rng(84);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix fm(7, 7);
    std::vector<std::vector<oracle::Rat>> rm(7, std::vector<oracle::Rat>(7));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        const int v = entry(rng);
        fm(i, j) = v;
        rm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      }
    tally(static_cast<int>(numerical_rank(fm)) == oracle::rank(rm),
          "dense rank", "trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 10; ++trial) {
    Matrix left(7, 3), right(3, 7);
    std::vector<std::vector<int>> li(7, std::vector<int>(3)),
        ri(3, std::vector<int>(7));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 3; ++j) li[i][j] = entry(rng), left(i, j) = li[i][j];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 7; ++j) ri[i][j] = entry(rng), right(i, j) = ri[i][j];
    const Matrix fm = left * right;
    std::vector<std::vector<oracle::Rat>> rm(7, std::vector<oracle::Rat>(7));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        oracle::Rat acc = 0;
        for (int k = 0; k < 3; ++k) acc += li[i][k] * ri[k][j];
        rm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
      }
    tally(static_cast<int>(numerical_rank(fm)) == oracle::rank(rm),
          "low rank product", "trial " + std::to_string(trial));
  }

  for (int trial = 0; trial < 5; ++trial) {
    Matrix fa = Matrix::Zero(5, 5), fb = Matrix::Zero(5, 5);
    oracle::RatMat ra = oracle::RatMat::zero(5, 5),
                   rb = oracle::RatMat::zero(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        const int va = entry(rng), vb = entry(rng);
        fa(i, j) = va, fa(j, i) = -va;
        fb(i, j) = vb, fb(j, i) = -vb;
        ra.at(i, j) = va, ra.at(j, i) = -va;
        rb.at(i, j) = vb, rb.at(j, i) = -vb;
      }
    tally(static_cast<int>(bracket_closure({fa, fb}).dim()) ==
              oracle::closure_dim({ra, rb}),
          "generated algebra dim", "trial " + std::to_string(trial));
  }

  return mismatches == 0;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
      {"codimension table and sweep timing", criterion1},
      {"holonomy certificates on every jet", criterion2},
      {"operator span identities", criterion3},
      {"Lagrangian geometry of the quadric jet", criterion4},
      {"pointwise curvature identities", criterion5},
      {"parallel transport agreement and stability", criterion6},
      {"flat orbit fullness", criterion7},
      {"ambient dimension, duality and curvature sign", criterion8},
      {"exact arithmetic agreement", criterion9},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  criterion %zu threw: %s\n", i + 1, e.what());
      ok = false;
    }
    std::printf("criterion %zu: %s  %s\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].first);
    all_ok &= ok;
  }
  if (!all_ok)
    std::printf("acceptance: FAIL (%d subchecks failed)\n", failed_subchecks);
  else
    std::printf("acceptance: PASS\n");
  return all_ok ? 0 : 1;
}
