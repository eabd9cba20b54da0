#ifndef HOLOCALC_LIEALG_HPP
#define HOLOCALC_LIEALG_HPP

#include <vector>

#include "holocalc/linalg.hpp"

namespace holocalc {

/// Commutator [a, b] = ab - ba.
Matrix bracket(const Matrix& a, const Matrix& b);

/// A Lie algebra of real d x d matrices given by a basis.  The constructor
/// verifies that the span is closed under the bracket at the stated
/// tolerance.  The basis is kept exactly as supplied; coordinates are
/// computed against it by least squares.
class MatrixLieAlgebra {
 public:
  explicit MatrixLieAlgebra(std::vector<Matrix> basis,
                            double tol = kDefaultTol);

  Index matrix_dim() const { return matrix_dim_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  double tol() const { return tol_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  /// Span of the flattened basis inside R^(d*d).
  const Subspace& flat_span() const { return flat_span_; }

  /// Basis coordinates of a matrix in the span (least squares).
  Vector coordinates(const Matrix& a) const;
  Matrix from_coordinates(const Vector& x) const;

  /// ad(x) in basis coordinates for x given in basis coordinates.
  Matrix ad(const Vector& x) const;
  const Matrix& ad_basis(Index i) const { return ad_basis_[i]; }

  /// Worst containment residual of basis brackets in the span.
  double closure_residual() const { return closure_residual_; }

 private:
  std::vector<Matrix> basis_;
  std::vector<Matrix> ad_basis_;
  Subspace flat_span_;
  Eigen::CompleteOrthogonalDecomposition<Matrix> coord_solver_;
  Index matrix_dim_ = 0;
  double tol_ = kDefaultTol;
  double closure_residual_ = 0.0;
};

/// Gram matrix of the Killing form B(x, y) = trace(ad x . ad y) in the
/// algebra's basis coordinates.
Matrix killing_form(const MatrixLieAlgebra& g);

/// Worst residual of B([x,y],z) + B(y,[x,z]) over basis triples, scaled by
/// the largest entry of B.
double killing_invariance_residual(const MatrixLieAlgebra& g);

/// Smallest subspace of flattened d x d matrices that contains the
/// generators and is closed under the bracket.  Iteration count is capped
/// at dim so(d); failure to stabilize raises std::runtime_error.
Subspace bracket_closure(const std::vector<Matrix>& generators,
                         double tol = kDefaultTol);

/// Center, commutator ideal and centralizers, returned as subspaces of
/// flattened matrix coordinates.
Subspace center(const MatrixLieAlgebra& g);
Subspace commutator_ideal(const MatrixLieAlgebra& g);
/// Elements of `ambient` commuting with every element of `s` (given in
/// flattened coordinates).
Subspace centralizer_in(const MatrixLieAlgebra& ambient, const Subspace& s);

/// Basis of so(d): elementary rotations e_i e_j^T - e_j e_i^T for i < j.
std::vector<Matrix> so_basis(Index d);

}  // namespace holocalc

#endif
