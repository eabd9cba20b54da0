#include "holocalc/liealg.hpp"

#include <cmath>

namespace holocalc {

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

Matrix stack_flattened(const std::vector<Matrix>& mats) {
  if (mats.empty()) return Matrix(0, 0);
  Matrix cols(mats.front().size(), static_cast<Index>(mats.size()));
  for (size_t i = 0; i < mats.size(); ++i)
    cols.col(static_cast<Index>(i)) = flatten(mats[i]);
  return cols;
}

}  // namespace

MatrixLieAlgebra::MatrixLieAlgebra(std::vector<Matrix> basis, double tol)
    : basis_(std::move(basis)), tol_(tol) {
  if (basis_.empty())
    throw std::invalid_argument("MatrixLieAlgebra: empty basis");
  matrix_dim_ = basis_.front().rows();
  for (const Matrix& b : basis_)
    if (b.rows() != matrix_dim_ || b.cols() != matrix_dim_)
      throw std::invalid_argument("MatrixLieAlgebra: basis shape mismatch");
  const Matrix cols = stack_flattened(basis_);
  flat_span_ = Subspace::span(cols, tol_);
  if (flat_span_.dim() != dim())
    throw std::invalid_argument("MatrixLieAlgebra: basis not independent");
  coord_solver_.compute(cols);
  // Closure check plus the ad-matrices in basis coordinates.
  ad_basis_.reserve(basis_.size());
  for (Index i = 0; i < dim(); ++i) {
    Matrix ad_i(dim(), dim());
    for (Index j = 0; j < dim(); ++j) {
      const Matrix br = bracket(basis_[i], basis_[j]);
      closure_residual_ =
          std::max(closure_residual_,
                   flat_span_.containment_residual(flatten(br)));
      ad_i.col(j) = coord_solver_.solve(flatten(br));
    }
    ad_basis_.push_back(std::move(ad_i));
  }
  if (closure_residual_ > tol_)
    throw std::invalid_argument(
        "MatrixLieAlgebra: basis span is not bracket-closed");
}

Vector MatrixLieAlgebra::coordinates(const Matrix& a) const {
  return coord_solver_.solve(flatten(a));
}

Matrix MatrixLieAlgebra::from_coordinates(const Vector& x) const {
  Matrix a = Matrix::Zero(matrix_dim_, matrix_dim_);
  for (Index i = 0; i < dim(); ++i) a += x(i) * basis_[i];
  return a;
}

Matrix MatrixLieAlgebra::ad(const Vector& x) const {
  Matrix a = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) a += x(i) * ad_basis_[i];
  return a;
}

Matrix killing_form(const MatrixLieAlgebra& g) {
  const Index n = g.dim();
  Matrix b(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      b(i, j) = (g.ad_basis(i) * g.ad_basis(j)).trace();
      b(j, i) = b(i, j);
    }
  return b;
}

double killing_invariance_residual(const MatrixLieAlgebra& g) {
  const Matrix b = killing_form(g);
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  // B([x,y],z) in coordinates: (ad(x) e_y)^T B e_z.
  double worst = 0.0;
  for (Index x = 0; x < g.dim(); ++x) {
    const Matrix adx = g.ad_basis(x);
    const Matrix m = adx.transpose() * b + b * adx;
    worst = std::max(worst, m.cwiseAbs().maxCoeff());
  }
  return worst / scale;
}

Subspace bracket_closure(const std::vector<Matrix>& generators, double tol) {
  if (generators.empty())
    throw std::invalid_argument("bracket_closure: no generators");
  const Index d = generators.front().rows();
  Subspace space = Subspace::span(stack_flattened(generators), tol);
  const Index max_rounds = std::max<Index>(1, d * (d - 1) / 2);
  for (Index round = 0; round < max_rounds; ++round) {
    std::vector<Matrix> next;
    next.reserve(space.dim() * (space.dim() + 1) / 2);
    for (Index i = 0; i < space.dim(); ++i)
      for (Index j = i + 1; j < space.dim(); ++j)
        next.push_back(bracket(unflatten(space.basis_vector(i), d, d),
                               unflatten(space.basis_vector(j), d, d)));
    Matrix cols(d * d, space.dim() + static_cast<Index>(next.size()));
    cols.leftCols(space.dim()) = space.basis();
    for (size_t k = 0; k < next.size(); ++k)
      cols.col(space.dim() + static_cast<Index>(k)) = flatten(next[k]);
    Subspace grown = Subspace::span(cols, tol);
    if (grown.dim() == space.dim()) return space;
    space = grown;
  }
  throw std::runtime_error(
      "bracket_closure: did not stabilize within the round cap");
}

Subspace center(const MatrixLieAlgebra& g) {
  // x is central iff sum_i x_i ad(e_i) = 0.
  Matrix m(g.dim() * g.dim(), g.dim());
  for (Index i = 0; i < g.dim(); ++i) m.col(i) = flatten(g.ad_basis(i));
  const Subspace row_space = Subspace::span(m.transpose(), g.tol());
  const Subspace kernel = row_space.orthogonal_complement();
  std::vector<Matrix> elems;
  for (Index i = 0; i < kernel.dim(); ++i)
    elems.push_back(g.from_coordinates(kernel.basis_vector(i)));
  if (elems.empty())
    return Subspace::zero(g.matrix_dim() * g.matrix_dim(), g.tol());
  return Subspace::span(stack_flattened(elems), g.tol());
}

Subspace commutator_ideal(const MatrixLieAlgebra& g) {
  std::vector<Matrix> brackets;
  for (Index i = 0; i < g.dim(); ++i)
    for (Index j = i + 1; j < g.dim(); ++j)
      brackets.push_back(bracket(g.basis()[i], g.basis()[j]));
  if (brackets.empty())
    return Subspace::zero(g.matrix_dim() * g.matrix_dim(), g.tol());
  return Subspace::span(stack_flattened(brackets), g.tol());
}

Subspace centralizer_in(const MatrixLieAlgebra& ambient, const Subspace& s) {
  const Index d = ambient.matrix_dim();
  if (s.ambient_dim() != d * d)
    throw std::invalid_argument("centralizer_in: coordinate size mismatch");
  // Constraints [sum_i a_i e_i, b_k] = 0 for every basis vector b_k of s.
  Matrix m(s.dim() * d * d, ambient.dim());
  for (Index k = 0; k < s.dim(); ++k) {
    const Matrix bk = unflatten(s.basis_vector(k), d, d);
    for (Index i = 0; i < ambient.dim(); ++i)
      m.block(k * d * d, i, d * d, 1) = flatten(bracket(ambient.basis()[i], bk));
  }
  const Subspace kernel =
      Subspace::span(m.transpose(), ambient.tol()).orthogonal_complement();
  std::vector<Matrix> elems;
  for (Index i = 0; i < kernel.dim(); ++i)
    elems.push_back(ambient.from_coordinates(kernel.basis_vector(i)));
  if (elems.empty()) return Subspace::zero(d * d, ambient.tol());
  return Subspace::span(stack_flattened(elems), ambient.tol());
}

std::vector<Matrix> so_basis(Index d) {
  std::vector<Matrix> basis;
  basis.reserve(d * (d - 1) / 2);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1.0;
      e(j, i) = -1.0;
      basis.push_back(std::move(e));
    }
  return basis;
}

}  // namespace holocalc
