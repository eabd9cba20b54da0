#ifndef HOLOCALC_SUBMANIFOLD_HPP
#define HOLOCALC_SUBMANIFOLD_HPP

#include <random>
#include <string>
#include <vector>

#include "holocalc/symspace.hpp"

namespace holocalc {

/// Splitting of operators on p relative to a tangent subspace W: the plus
/// part preserves W and its orthogonal complement, the minus part exchanges
/// them, and A = plus(A) + minus(A).  The reflection is -id on W and +id on
/// the complement.
struct GradedSplit {
  Matrix tangent_proj, normal_proj, reflection;

  Matrix plus(const Matrix& a) const {
    return tangent_proj * a * tangent_proj + normal_proj * a * normal_proj;
  }
  Matrix minus(const Matrix& a) const {
    return tangent_proj * a * normal_proj + normal_proj * a * tangent_proj;
  }
};

GradedSplit graded_split(const Subspace& tangent);

/// Second-order data of a submanifold through the base point: the tangent
/// space T inside p, its orthogonal complement, and the operator form of
/// the second fundamental form, one skew matrix per tangent basis vector.
/// The scale c records which member of the associated family the jet
/// belongs to (1 for plain orbit jets).
class TwoJet {
 public:
  TwoJet(ModelPtr model, std::string label, double c, Subspace tangent,
         std::vector<Matrix> h_ops);

  const SymmetricSpaceModel& model() const { return *model_; }
  ModelPtr model_ptr() const { return model_; }
  const std::string& label() const { return label_; }
  double c() const { return c_; }
  const Subspace& tangent() const { return tangent_; }
  const Subspace& normal() const { return normal_; }
  const std::vector<Matrix>& h_ops() const { return h_ops_; }
  const GradedSplit& split() const { return split_; }

  /// The operator 𝐡(x) for x in ambient p coordinates; x is read through
  /// its tangent components.
  Matrix h_of(const Vector& x) const;
  /// The bilinear form h(x, y) = 𝐡(x) y as a normal vector in p coords.
  Vector h_bilinear(const Vector& x, const Vector& y) const {
    return h_of(x) * y;
  }

 private:
  ModelPtr model_;
  std::string label_;
  double c_;
  Subspace tangent_, normal_;
  std::vector<Matrix> h_ops_;
  GradedSplit split_;
};

/// Jet of the isotropy orbit through an admissible element in a flat
/// ambient model: tangent is the unit eigenspace of ad(X)^2, normal its
/// kernel, and 𝐡(y) = ad([J y, .])|p with J y = -epsilon [X, y].
TwoJet orbit_jet(ModelPtr model, const AdmissibleElement& a);

/// Jet of the family member M_c in a curved ambient model: same tangent
/// and normal as the orbit jet, with 𝐡 scaled by c; c = 0 gives the
/// totally geodesic jet.
TwoJet family_jet(ModelPtr model, const AdmissibleElement& a, double c);

/// The rank-one orbit of the flat su(3)/so(3) model is a surface in a round
/// sphere; this transplants its jet into the sphere(4) model by an isometric
/// identification that removes the radial direction and rescales 𝐡 to the
/// model's curvature.
TwoJet veronese_sphere_jet();

/// Span of the values h(x, y) over tangent pairs.
Subspace first_normal(const TwoJet& jet);
/// tangent + first_normal; the largest subspace the jet's operators see.
Subspace second_osculating(const TwoJet& jet);

/// Structural residual of the jet data: skewness of each 𝐡(x), the
/// exchange property (𝐡(x) maps T to the normal space and back), symmetry
/// of h, and adjointness of the shape-operator view.
double jet_structure_residual(const TwoJet& jet);

/// Residual of 𝐡(x)(O) ⊂ O over tangent basis vectors, O the osculating
/// space.
double osculating_stability_residual(const TwoJet& jet);

/// Semiparallelity: 𝐡(R^M(x,y) z) = [R^N(x,y) - [𝐡(x),𝐡(y)], 𝐡(z)] over
/// tangent basis triples, where R^M is the tangent block of
/// R^N(x,y) - [𝐡(x),𝐡(y)].
double check_semiparallel(const TwoJet& jet);

/// Residual of R(u,v) w staying inside S for u, v, w in S.
double check_curvature_invariance(const SymmetricSpaceModel& m,
                                  const Subspace& s);

/// Composite curvature identity on the osculating space over tangent basis
/// pairs:
///   R^N(h(x,x), h(y,y)) = [𝐡(x), [𝐡(y), R^N(x,y)]]
///                         - R^N(𝐡(x)𝐡(y)x, y) - R^N(x, 𝐡(x)𝐡(y)y),
/// together with the block residuals that R^N(xi, eta) preserves O and
/// restricts to the even part of so(O) for xi, eta in the first normal
/// space.
double check_fundamental(const TwoJet& jet);

/// Each 𝐡(x) annihilates the curvature four-form on O:
/// sum_i R(v1, ..., 𝐡(x) v_i, ..., v4) = 0, sampled over random tuples.
double curvature_four_form_residual(const TwoJet& jet, std::mt19937_64& rng,
                                    int trials);

/// 𝐡(x) acts as a derivation against the curvature operator on O:
/// [𝐡(x), R(y1,y2)] = R(𝐡(x)y1, y2) + R(y1, 𝐡(x)y2) for tangent y's,
/// sampled over random tuples.
double curvature_derivation_residual(const TwoJet& jet, std::mt19937_64& rng,
                                     int trials);

/// first_normal = normal (the jet sees its entire normal space).
double one_full_residual(const TwoJet& jet);
bool check_one_full(const TwoJet& jet);

/// x -> 𝐡(x) has trivial kernel; the residual is the rank deficiency.
double nondegeneracy_defect(const TwoJet& jet);
bool check_nondegenerate(const TwoJet& jet);

/// 𝐡(T) lies inside the isotropy image ad(k)|p.
double eschenburg_residual(const TwoJet& jet);
bool check_eschenburg(const TwoJet& jet);

/// Reads a jet from a plain-text file: ambient model name, optional c,
/// tangent vectors, and one 𝐡 matrix per tangent vector (see README for
/// the exact grammar).  Throws std::invalid_argument on malformed input.
TwoJet load_jet_file(const std::string& path);

}  // namespace holocalc

#endif
