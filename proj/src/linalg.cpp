#include "holocalc/linalg.hpp"

#include <cmath>

namespace holocalc {

Index numerical_rank(const Matrix& cols, double tol) {
  return orthonormalize_columns(cols, tol).cols();
}

Subspace Subspace::zero(Index ambient_dim, double tol) {
  return Subspace(Matrix(ambient_dim, 0), tol);
}

Subspace Subspace::full(Index ambient_dim, double tol) {
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim), tol);
}

Subspace Subspace::span(const Matrix& vectors, double tol) {
  return Subspace(orthonormalize_columns(vectors, tol), tol);
}

Subspace Subspace::from_orthonormal(const Matrix& basis, double tol) {
  const double err =
      (basis.transpose() * basis -
       Matrix::Identity(basis.cols(), basis.cols()))
          .norm();
  if (err > 1e-8)
    throw std::invalid_argument("Subspace: basis is not orthonormal");
  return Subspace(basis, tol);
}

double Subspace::containment_residual(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  const double nrm = v.norm();
  return (v - project(v)).norm() / std::max(1.0, nrm);
}

double Subspace::containment_residual(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim())
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  double worst = 0.0;
  for (Index i = 0; i < other.dim(); ++i)
    worst = std::max(worst, containment_residual(Vector(other.basis_.col(i))));
  return worst;
}

double Subspace::equality_residual(const Subspace& other) const {
  return std::max(containment_residual(other),
                  other.containment_residual(*this));
}

Subspace Subspace::orthogonal_complement() const {
  // Orthonormalize [basis | I]; the columns accepted after the basis span
  // the complement.
  const Index n = ambient_dim();
  Matrix ext(n, dim() + n);
  ext.leftCols(dim()) = basis_;
  ext.rightCols(n) = Matrix::Identity(n, n);
  const Matrix q = orthonormalize_columns(ext, tol_);
  return Subspace(q.rightCols(q.cols() - dim()), tol_);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  Matrix cols(a.ambient_dim(), a.dim() + b.dim());
  cols.leftCols(a.dim()) = a.basis();
  cols.rightCols(b.dim()) = b.basis();
  return Subspace::span(cols, std::min(a.tol(), b.tol()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  return sum(a.orthogonal_complement(), b.orthogonal_complement())
      .orthogonal_complement();
}

SymEig sym_eig(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("sym_eig: matrix not square");
  const double scale = std::max(1.0, a.norm());
  if ((a - a.transpose()).norm() > 1e-10 * scale)
    throw std::invalid_argument("sym_eig: matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("sym_eig: eigensolver failed");
  return SymEig{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix expm(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("expm: matrix not square");
  const Index n = a.rows();
  const double nrm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double s = 1.0;
  while (nrm * s > 0.5) {
    s *= 0.5;
    ++squarings;
  }
  const Matrix b = a * s;
  // Horner evaluation of the order-16 Taylor polynomial; the truncation
  // error at norm 1/2 is far below double round-off.
  Matrix result = Matrix::Identity(n, n);
  for (int k = 16; k >= 1; --k)
    result = Matrix::Identity(n, n) + (b * result) / static_cast<double>(k);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Vector least_squares_solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("least_squares_solve: size mismatch");
  return a.completeOrthogonalDecomposition().solve(b);
}

Vector flatten(const Matrix& a) {
  Vector v(a.rows() * a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

Matrix unflatten(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("unflatten: size mismatch");
  Matrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

}  // namespace holocalc
