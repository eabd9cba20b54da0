#ifndef HOLOCALC_LINALG_HPP
#define HOLOCALC_LINALG_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace holocalc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Default relative tolerance for rank decisions and containment tests.
inline constexpr double kDefaultTol = 1e-9;

/// Thrown when an eigenvalue clustering required by a construction is
/// ambiguous at the working tolerance.
struct degeneracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass.  Input columns
/// whose residual after projection onto the accepted columns falls below
/// tol * max(1, largest input column norm) are discarded.  Works for any
/// real scalar type.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
orthonormalize_columns(const Eigen::MatrixBase<Derived>& cols,
                       double tol = kDefaultTol) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Mat a = cols.derived();
  Scalar scale(1);
  for (Index j = 0; j < a.cols(); ++j) scale = std::max(scale, a.col(j).norm());
  Mat q(a.rows(), std::min(a.rows(), a.cols()));
  Index r = 0;
  for (Index j = 0; j < a.cols(); ++j) {
    Vec v = a.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (Index i = 0; i < r; ++i) v -= q.col(i).dot(v) * q.col(i);
    const Scalar nrm = v.norm();
    if (nrm > Scalar(tol) * scale) q.col(r++) = v / nrm;
  }
  return q.leftCols(r);
}

/// Rank of the column span at the given relative tolerance.
Index numerical_rank(const Matrix& cols, double tol = kDefaultTol);

/// A linear subspace of R^n held as an orthonormal column basis plus the
/// tolerance that was used to build it.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient_dim, double tol = kDefaultTol);
  static Subspace full(Index ambient_dim, double tol = kDefaultTol);
  /// Span of the given columns (not assumed independent or normalized).
  static Subspace span(const Matrix& vectors, double tol = kDefaultTol);
  /// Wraps columns that are already orthonormal (checked).
  static Subspace from_orthonormal(const Matrix& basis,
                                   double tol = kDefaultTol);

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(Index i) const { return basis_.col(i); }
  double tol() const { return tol_; }

  Vector project(const Vector& v) const {
    return basis_ * (basis_.transpose() * v);
  }
  Matrix projector() const { return basis_ * basis_.transpose(); }

  /// ||v - proj(v)|| / max(1, ||v||).
  double containment_residual(const Vector& v) const;
  bool contains(const Vector& v) const {
    return containment_residual(v) <= tol_;
  }
  /// Worst containment residual over the other space's basis vectors.
  double containment_residual(const Subspace& other) const;
  bool contains(const Subspace& other) const {
    return containment_residual(other) <= tol_;
  }
  /// Mutual containment residual.
  double equality_residual(const Subspace& other) const;
  bool equals(const Subspace& other) const {
    return equality_residual(other) <= tol_;
  }

  Subspace orthogonal_complement() const;

 private:
  Subspace(Matrix basis, double tol) : basis_(std::move(basis)), tol_(tol) {}
  Matrix basis_{0, 0};
  double tol_ = kDefaultTol;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Eigendecomposition of a symmetric matrix; values ascending,
/// A = vectors * diag(values) * vectors^T.
struct SymEig {
  Vector values;
  Matrix vectors;
};
SymEig sym_eig(const Matrix& a);

/// Matrix exponential by scaling-and-squaring with a truncated series
/// evaluated once the scaled norm is at most 1/2.
Matrix expm(const Matrix& a);

/// Minimum-norm least-squares solution of A x = b.
Vector least_squares_solve(const Matrix& a, const Vector& b);

/// Row-major flattening of a matrix and its inverse; operator-coordinate
/// vectors use these together with the Frobenius inner product.
Vector flatten(const Matrix& a);
Matrix unflatten(const Vector& v, Index rows, Index cols);

}  // namespace holocalc

#endif
