#include "holocalc/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holocalc {

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

Subspace span_of_flattened(const std::vector<Matrix>& ops, Index dp,
                           double tol) {
  if (ops.empty()) return Subspace::zero(dp * dp, tol);
  Matrix cols(dp * dp, static_cast<Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i)
    cols.col(static_cast<Index>(i)) = flatten(ops[i]);
  return Subspace::span(cols, tol);
}

}  // namespace

Subspace hol_ambient(const SymmetricSpaceModel& m) {
  const Index dp = m.dim_p();
  if (m.flat()) return Subspace::zero(dp * dp, m.tol());
  std::vector<Matrix> gens;
  for (Index i = 0; i < dp; ++i)
    for (Index j = i + 1; j < dp; ++j)
      gens.push_back(
          m.curvature_op(Vector(Vector::Unit(dp, i)), Vector(Vector::Unit(dp, j))));
  return bracket_closure(gens, m.tol());
}

Subspace hol_plus(const TwoJet& jet, double* o_residual) {
  const SymmetricSpaceModel& m = jet.model();
  const Index dp = m.dim_p();
  const Subspace osc = second_osculating(jet);
  const Matrix po = osc.projector();
  double worst = 0.0;
  std::vector<Matrix> gens;
  const auto add_pairs = [&](const Matrix& basis) {
    for (Index i = 0; i < basis.cols(); ++i)
      for (Index j = i + 1; j < basis.cols(); ++j) {
        const Matrix r = m.curvature_op(basis.col(i), basis.col(j));
        for (Index k = 0; k < osc.dim(); ++k)
          worst = std::max(worst, osc.containment_residual(
                                      Vector(r * osc.basis_vector(k))));
        gens.push_back(Matrix(po * r * po));
      }
  };
  add_pairs(jet.tangent().basis());
  add_pairs(first_normal(jet).basis());
  if (o_residual) *o_residual = worst;
  if (worst > 1e-4)
    throw std::runtime_error(
        m.name() +
        ": curvature generator does not preserve the osculating space");
  return span_of_flattened(gens, dp, m.tol());
}

Subspace hol_minus(const TwoJet& jet, const Subspace& plus) {
  const Index dp = jet.model().dim_p();
  std::vector<Matrix> gens;
  for (const Matrix& h : jet.h_ops())
    for (Index i = 0; i < plus.dim(); ++i) {
      const Matrix a = unflatten(plus.basis_vector(i), dp, dp);
      gens.push_back(bracket(h, a));
    }
  return span_of_flattened(gens, dp, jet.model().tol());
}

HolonomyResult extrinsic_hol(const TwoJet& jet) {
  const SymmetricSpaceModel& m = jet.model();
  const Index dp = m.dim_p();
  HolonomyResult r;
  r.ambient = hol_ambient(m);
  r.plus = hol_plus(jet, &r.o_invariance_residual);
  r.minus_part = hol_minus(jet, r.plus);
  r.extrinsic = sum(r.plus, r.minus_part);
  r.codim = r.ambient.dim() - r.extrinsic.dim();
  r.direct_sum_defect =
      static_cast<double>(intersection(r.plus, r.minus_part).dim());

  for (Index i = 0; i < r.extrinsic.dim(); ++i) {
    const Matrix a = unflatten(r.extrinsic.basis_vector(i), dp, dp);
    for (Index j = i + 1; j < r.extrinsic.dim(); ++j) {
      const Matrix b = unflatten(r.extrinsic.basis_vector(j), dp, dp);
      r.closure_residual =
          std::max(r.closure_residual,
                   r.extrinsic.containment_residual(flatten(bracket(a, b))));
    }
    for (const Matrix& h : jet.h_ops())
      r.stability_residual =
          std::max(r.stability_residual,
                   r.extrinsic.containment_residual(flatten(bracket(h, a))));
    const Matrix& sigma = jet.split().reflection;
    r.reflection_residual =
        std::max(r.reflection_residual,
                 r.extrinsic.containment_residual(flatten(Matrix(
                     sigma * a * sigma))));
  }
  return r;
}

Subspace h_operator_span(const TwoJet& jet) {
  return span_of_flattened(jet.h_ops(), jet.model().dim_p(),
                           jet.model().tol());
}

Subspace commutator_ideal_span(const Subspace& ops, Index matrix_dim,
                               double tol) {
  std::vector<Matrix> comms;
  for (Index i = 0; i < ops.dim(); ++i)
    for (Index j = i + 1; j < ops.dim(); ++j)
      comms.push_back(bracket(unflatten(ops.basis_vector(i), matrix_dim,
                                        matrix_dim),
                              unflatten(ops.basis_vector(j), matrix_dim,
                                        matrix_dim)));
  return span_of_flattened(comms, matrix_dim, tol);
}

Subspace odd_operator_span(const TwoJet& jet) {
  const Matrix& tb = jet.tangent().basis();
  const Matrix& nb = jet.normal().basis();
  std::vector<Matrix> ops;
  for (Index a = 0; a < tb.cols(); ++a)
    for (Index b = 0; b < nb.cols(); ++b)
      ops.push_back(Matrix(tb.col(a) * nb.col(b).transpose() -
                           nb.col(b) * tb.col(a).transpose()));
  return span_of_flattened(ops, jet.model().dim_p(), jet.model().tol());
}

std::optional<Matrix> hermitian_structure(const SymmetricSpaceModel& m) {
  const MatrixLieAlgebra k_alg(m.k_basis(), m.tol());
  const Subspace z = center(k_alg);
  if (z.dim() == 0) return std::nullopt;
  if (z.dim() > 1)
    throw std::runtime_error(m.name() +
                             ": isotropy center of dimension above one");
  const Index n = m.ambient_matrix_dim();
  const Matrix zmat = unflatten(z.basis_vector(0), n, n);
  const Matrix j0 = m.isotropy_op(zmat);
  const Matrix sq = j0 * j0;
  const Index dp = m.dim_p();
  const double lambda_sq = -sq.trace() / static_cast<double>(dp);
  if (lambda_sq <= 0.0)
    throw std::runtime_error(m.name() + ": center does not act complexly");
  const double residual =
      (sq + lambda_sq * Matrix::Identity(dp, dp)).norm();
  if (residual > 1e-8 * std::max(1.0, lambda_sq))
    throw std::runtime_error(
        m.name() + ": center action does not square to a multiple of -id");
  return Matrix(j0 / std::sqrt(lambda_sq));
}

double lagrangian_residual(const TwoJet& jet, const Matrix& j) {
  if (jet.tangent().dim() != jet.normal().dim()) return 1.0;
  double worst = 0.0;
  for (Index i = 0; i < jet.tangent().dim(); ++i)
    worst = std::max(worst, jet.normal().containment_residual(Vector(
                                j * jet.tangent().basis_vector(i))));
  return worst;
}

double j_orthogonality_residual(const Subspace& hol, const Matrix& j) {
  const Index dp = j.rows();
  double worst = 0.0;
  for (Index i = 0; i < hol.dim(); ++i) {
    const Matrix a = unflatten(hol.basis_vector(i), dp, dp);
    worst = std::max(worst, rel(std::abs((j * a).trace()), j.norm()));
  }
  return worst;
}

double j_least_squares_residual(const TwoJet& jet, const Matrix& j) {
  const Index dp = jet.model().dim_p();
  Matrix stacked(dp * dp, static_cast<Index>(jet.h_ops().size()));
  for (std::size_t i = 0; i < jet.h_ops().size(); ++i)
    stacked.col(static_cast<Index>(i)) = flatten(jet.h_ops()[i]);
  const Vector target = flatten(j);
  const Vector coeff = least_squares_solve(stacked, target);
  return rel((stacked * coeff - target).norm(), j.norm());
}

Index centralizer_diagnostic(const TwoJet& jet) {
  const SymmetricSpaceModel& m = jet.model();
  const Subspace ambient = hol_ambient(m);
  if (ambient.dim() == 0) return 0;
  const Subspace odd = odd_operator_span(jet);
  const Subspace even = odd.orthogonal_complement();  // block-diagonal part
  // The ambient curvature algebra splits along the tangent grading; its
  // even part is what gets centralized.
  const Subspace ambient_even = intersection(ambient, even);
  const Subspace ambient_odd = intersection(ambient, odd);
  const MatrixLieAlgebra so_p(so_basis(m.dim_p()), m.tol());
  const Subspace centralizer = centralizer_in(so_p, ambient_even);
  return intersection(centralizer, ambient_odd).dim();
}

Matrix transport_mu(const TwoJet& jet,
                    const std::vector<std::pair<Vector, double>>& segments,
                    double step) {
  if (step <= 0.0)
    throw std::invalid_argument("transport_mu: step must be positive");
  const Index dp = jet.model().dim_p();
  Matrix mu = Matrix::Identity(dp, dp);
  for (const auto& [dir, duration] : segments) {
    if (duration < 0.0)
      throw std::invalid_argument("transport_mu: negative duration");
    if (duration == 0.0) continue;
    const Matrix h = jet.h_of(dir);
    const auto steps = static_cast<long>(std::ceil(duration / step));
    const double dt = duration / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
      const Matrix k1 = mu * h;
      const Matrix k2 = (mu + 0.5 * dt * k1) * h;
      const Matrix k3 = (mu + 0.5 * dt * k2) * h;
      const Matrix k4 = (mu + dt * k3) * h;
      mu += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return mu;
}

double transport_stability_residual(const TwoJet& jet, const Subspace& hol,
                                    std::mt19937_64& rng, int paths,
                                    double step) {
  const Index dp = jet.model().dim_p();
  double worst = 0.0;
  for (int p = 0; p < paths; ++p) {
    const std::vector<std::pair<Vector, double>> segments{
        {random_unit_in(jet.tangent().basis(), rng), 1.0},
        {random_unit_in(jet.tangent().basis(), rng), 1.0}};
    const Matrix mu = transport_mu(jet, segments, step);
    const Matrix mu_inv = mu.inverse();
    for (Index i = 0; i < hol.dim(); ++i) {
      const Matrix a = unflatten(hol.basis_vector(i), dp, dp);
      worst = std::max(
          worst, hol.containment_residual(flatten(Matrix(mu * a * mu_inv))));
    }
  }
  return worst;
}

double transport_curvature_residual(const TwoJet& jet, std::mt19937_64& rng,
                                    int trials, double step) {
  const SymmetricSpaceModel& m = jet.model();
  const Subspace osc = second_osculating(jet);
  const Matrix po = osc.projector();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const std::vector<std::pair<Vector, double>> segments{
        {random_unit_in(jet.tangent().basis(), rng), 1.0},
        {random_unit_in(jet.tangent().basis(), rng), 1.0}};
    const Matrix mu = transport_mu(jet, segments, step);
    const Matrix mu_inv = mu.inverse();
    const Vector y1 = random_unit_in(osc.basis(), rng);
    const Vector y2 = random_unit_in(osc.basis(), rng);
    const Matrix lhs = m.curvature_op(Vector(mu * y1), Vector(mu * y2));
    const Matrix rhs = mu * m.curvature_op(y1, y2) * mu_inv;
    worst = std::max(worst,
                     rel(((lhs - rhs) * po).norm(),
                         std::max(lhs.norm(), rhs.norm())));
  }
  return worst;
}

Classification classify_jet(const TwoJet& jet, const HolonomyResult& hol) {
  Classification out;
  const SymmetricSpaceModel& m = jet.model();
  if (jet.label() == "custom") {
    out.expectation = "none (user-supplied jet)";
    return out;
  }
  if (m.flat()) {
    out.expectation = "extrinsic dim 0 (flat ambient)";
    out.residual = static_cast<double>(hol.extrinsic.dim());
    out.pass = hol.extrinsic.dim() == 0;
    return out;
  }
  if (jet.c() == 0.0) {
    out.expectation = "none (totally geodesic member)";
    return out;
  }
  if (!check_one_full(jet)) {
    out.expectation = "none (jet is not 1-full)";
    return out;
  }
  const std::optional<Matrix> j = hermitian_structure(m);
  if (j && lagrangian_residual(jet, *j) <= 1e-8) {
    // Lagrangian jet over a Hermitian model drops exactly the center
    // direction: extrinsic holonomy is the commutator ideal.
    const Subspace ideal =
        commutator_ideal_span(hol.ambient, m.dim_p(), m.tol());
    const double eq = hol.extrinsic.equality_residual(ideal);
    out.expectation = "codim 1, extrinsic = commutator ideal (Lagrangian case)";
    out.residual = std::max(eq, std::abs(static_cast<double>(hol.codim - 1)));
    out.pass = hol.codim == 1 && eq <= 1e-8;
    return out;
  }
  if (m.name() == "sphere4" && jet.tangent().dim() == 2) {
    const Index d = hol.extrinsic.dim();
    out.expectation = "extrinsic dim in {4, 6} (surface in the 4-sphere)";
    out.pass = d == 4 || d == 6;
    out.residual = out.pass ? 0.0 : static_cast<double>(d);
    return out;
  }
  out.expectation = "codim 0";
  out.residual = static_cast<double>(hol.codim);
  out.pass = hol.codim == 0;
  return out;
}

}  // namespace holocalc
