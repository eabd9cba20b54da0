#ifndef HOLOCALC_HOLONOMY_HPP
#define HOLOCALC_HOLONOMY_HPP

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "holocalc/submanifold.hpp"

namespace holocalc {

/// Holonomy data of a jet.  All operator spans live in flattened dim_p x
/// dim_p coordinates; restricted operators stay ambient-sized (P_O A P_O).
/// Certificate residuals are recorded, not thrown: a failed certificate
/// marks the jet as outside the theory, which is itself a result.
struct HolonomyResult {
  Subspace ambient;    // curvature algebra of the ambient space
  Subspace plus;       // even part of the extrinsic holonomy
  Subspace minus_part; // odd part
  Subspace extrinsic;  // plus + minus
  Index codim = 0;     // dim ambient - dim extrinsic
  double o_invariance_residual = 0.0;  // generators preserve the osculating space
  double direct_sum_defect = 0.0;      // dim of plus ∩ minus
  double closure_residual = 0.0;       // brackets stay inside extrinsic
  double stability_residual = 0.0;     // [𝐡(x), extrinsic] ⊂ extrinsic
  double reflection_residual = 0.0;    // conjugation by the normal reflection
};

/// Curvature algebra of the ambient model: span of R(e_i, e_j) over the p
/// basis, closed under brackets.  Flat models give the zero subspace.
Subspace hol_ambient(const SymmetricSpaceModel& m);

/// Even part: spans of the O-restricted curvature operators over tangent
/// pairs and over first-normal pairs.  Throws std::runtime_error if a
/// generator fails to preserve O grossly (non-parallel input jet); writes
/// the worst invariance residual to *o_residual when given.
Subspace hol_plus(const TwoJet& jet, double* o_residual = nullptr);

/// Odd part: span of [𝐡(x), A] over tangent basis x and A in plus.
Subspace hol_minus(const TwoJet& jet, const Subspace& plus);

/// Assembles the full extrinsic holonomy with its certificates.
HolonomyResult extrinsic_hol(const TwoJet& jet);

/// Span of 𝐡(x) over tangent basis vectors, flattened.
Subspace h_operator_span(const TwoJet& jet);

/// Span of all pairwise brackets of an operator subspace (its derived
/// algebra when the subspace is a Lie algebra).
Subspace commutator_ideal_span(const Subspace& ops, Index matrix_dim,
                               double tol);

/// Odd operators relative to the tangent split, as a subspace of flattened
/// dim_p x dim_p matrices (basis t_a n_b^T - n_b t_a^T).
Subspace odd_operator_span(const TwoJet& jet);

/// If the isotropy algebra k has a one dimensional center, the normalized
/// isotropy action of its generator: j with j^2 = -id.  Returns nothing
/// when the center is trivial; throws std::runtime_error when the center
/// has dimension above one or the candidate does not square to -id.
std::optional<Matrix> hermitian_structure(const SymmetricSpaceModel& m);

/// Residual of j(tangent) = normal.
double lagrangian_residual(const TwoJet& jet, const Matrix& j);

/// max |trace(j A)| over an orthonormal basis of the span.
double j_orthogonality_residual(const Subspace& hol, const Matrix& j);

/// Least-squares distance from j to the span of the 𝐡 operators.
double j_least_squares_residual(const TwoJet& jet, const Matrix& j);

/// dim of (centralizer of the even ambient part in so(p)) ∩ odd ambient
/// part; small values force a nonzero odd extrinsic part.
Index centralizer_diagnostic(const TwoJet& jet);

/// Parallel transport along a broken geodesic: solves mu' = mu 𝐡(x_seg) per
/// segment with a classical fourth-order scheme at fixed step size, no
/// renormalization.  Directions are read through their tangent components.
Matrix transport_mu(const TwoJet& jet,
                    const std::vector<std::pair<Vector, double>>& segments,
                    double step);

/// Containment of Ad(mu)(hol) in hol over seeded random two-segment paths.
double transport_stability_residual(const TwoJet& jet, const Subspace& hol,
                                    std::mt19937_64& rng, int paths,
                                    double step);

/// Residual of R(mu y1, mu y2) = mu R(y1, y2) mu^{-1} on the osculating
/// space over seeded random paths and pairs.
double transport_curvature_residual(const TwoJet& jet, std::mt19937_64& rng,
                                    int trials, double step);

/// Expected-versus-computed holonomy for jets this artifact can build:
/// flat orbits (zero), Lagrangian jets over a Hermitian model (codim 1,
/// commutator ideal), tangent-dim-2 jets in the sphere(4) model (dim 4 or
/// 6), everything else codim 0.  Custom, rescaled-to-zero, or non-1-full
/// jets carry no expectation.
struct Classification {
  std::string expectation;  // human-readable statement of the expected value
  bool pass = true;
  double residual = 0.0;
};
Classification classify_jet(const TwoJet& jet, const HolonomyResult& hol);

}  // namespace holocalc

#endif
