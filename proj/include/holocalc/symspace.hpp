#ifndef HOLOCALC_SYMSPACE_HPP
#define HOLOCALC_SYMSPACE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holocalc/liealg.hpp"

namespace holocalc {

/// Ambient model of a symmetric space G/K: a matrix Lie algebra g with an
/// involution theta splitting it as k + p, together with the sign epsilon
/// chosen so that epsilon * Killing is positive definite on p.  The stored
/// k basis is orthonormal for the positive inner product on k and the p
/// basis is orthonormal for the metric on p, so isotropy and curvature
/// operators come out as genuinely skew matrices in p coordinates.
///
/// A flat model keeps the algebraic data of the space it wraps but reports
/// zero curvature; it serves as the euclidean ambient for orbit geometry.
class SymmetricSpaceModel {
 public:
  struct Init {
    std::string name;
    int epsilon = -1;
    bool flat = false;
    std::vector<Matrix> k_raw;
    std::vector<Matrix> p_raw;
    std::function<Matrix(const Matrix&)> theta;
    std::optional<Matrix> admissible_seed;
  };

  explicit SymmetricSpaceModel(Init init, double tol = kDefaultTol);

  const std::string& name() const { return name_; }
  int epsilon() const { return epsilon_; }
  bool flat() const { return flat_; }
  double tol() const { return tol_; }
  const MatrixLieAlgebra& g() const { return g_; }
  const std::vector<Matrix>& k_basis() const { return k_basis_; }
  const std::vector<Matrix>& p_basis() const { return p_basis_; }
  const Subspace& k_span() const { return k_span_; }
  const Subspace& p_span() const { return p_span_; }
  const Matrix& killing_gram() const { return killing_gram_; }
  const std::optional<Matrix>& admissible_seed() const {
    return admissible_seed_;
  }

  Index ambient_matrix_dim() const { return g_.matrix_dim(); }
  Index dim_g() const { return g_.dim(); }
  Index dim_k() const { return static_cast<Index>(k_basis_.size()); }
  Index dim_p() const { return static_cast<Index>(p_basis_.size()); }

  Matrix theta(const Matrix& x) const { return theta_(x); }

  /// Killing form of g evaluated on matrices.
  double killing(const Matrix& x, const Matrix& y) const;

  /// Coordinates with respect to the orthonormal p basis (the metric on p
  /// is the standard dot product in these coordinates).
  Vector p_coords(const Matrix& x) const;
  Matrix p_matrix(const Vector& v) const;
  /// Coordinates with respect to the orthonormal k basis.
  Vector k_coords(const Matrix& x) const;
  Matrix k_matrix(const Vector& v) const;
  /// Coordinates with respect to the combined [k | p] orthonormal basis.
  Vector onb_coords(const Matrix& x) const;

  /// The isotropy action ad(z)|p of z in k as a dim_p x dim_p matrix.
  Matrix isotropy_op(const Matrix& z) const;
  /// Curvature operator R(x, y) = -ad([x, y])|p in p coordinates; zero for
  /// flat models.
  Matrix curvature_op(const Vector& x, const Vector& y) const;

 private:
  std::string name_;
  int epsilon_;
  bool flat_;
  double tol_;
  MatrixLieAlgebra g_;
  std::function<Matrix(const Matrix&)> theta_;
  std::vector<Matrix> k_basis_, p_basis_;
  Subspace k_span_{}, p_span_{};
  Matrix killing_gram_;
  std::optional<Matrix> admissible_seed_;
  Matrix k_stack_, p_stack_, onb_stack_;  // flattened orthonormal bases
  Eigen::CompleteOrthogonalDecomposition<Matrix> k_solver_, p_solver_,
      onb_solver_;
};

using ModelPtr = std::shared_ptr<const SymmetricSpaceModel>;

/// The built-in ambient models.  Construction is deterministic.
const std::vector<ModelPtr>& catalog();
/// Lookup by name; throws std::invalid_argument for unknown names.
ModelPtr find_model(std::string_view name);

/// Worst residual of the structural requirements of a model: theta fixes k
/// and negates p, brackets respect the k/p block rules, and k and p are
/// Killing-orthogonal.
double cartan_residual(const SymmetricSpaceModel& m);

/// A nonzero element X of p with ad(X)^3 = epsilon * ad(X).
struct AdmissibleElement {
  Matrix X;         // ambient matrix form
  Vector x;         // p coordinates
  double residual;  // relative norm of ad(X)^3 - epsilon * ad(X)
};

/// Finds an admissible element: rescales the model's seed element when one
/// is present, otherwise searches over a maximal abelian subspace of p.
AdmissibleElement find_admissible(const SymmetricSpaceModel& m);

/// Splitting of k and p into the kernel and the unit-eigenvalue space of
/// ad(X)^2.  Raises degeneracy_error if some eigenvalue of ad(X)^2 sits
/// away from both clusters at 10x the model tolerance.
struct Eigensplit {
  std::vector<Matrix> k0, k_eps;  // orthonormal within each part
  Subspace p0, p_eps;             // p-coordinate subspaces
};
Eigensplit eigensplit(const SymmetricSpaceModel& m, const AdmissibleElement& a);

/// J y = -epsilon [X, y]; exchanges the two unit-eigenvalue parts and
/// squares to epsilon times the identity there.
Matrix j_bracket(const SymmetricSpaceModel& m, const AdmissibleElement& a,
                 const Matrix& y);

/// The p spaces of the su(3)/so(3) and sl(3,R)/so(3) models correspond by
/// multiplying with i; this maps a realified su(3) p element to the matching
/// sl(3,R) p element.
Matrix sl3_element_from_su3(const Matrix& realified);

}  // namespace holocalc

#endif
