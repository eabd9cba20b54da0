#include "holocalc/submanifold.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace holocalc {

namespace {

double rel(double num, double scale) { return num / std::max(1.0, scale); }

Vector random_unit_in(const Matrix& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector raw(basis.cols());
  for (Index i = 0; i < raw.size(); ++i) raw[i] = gauss(rng);
  Vector v = basis * raw;
  const double n = v.norm();
  if (n < 1e-12) {
    v.setZero();
    v += basis.col(0);
    return v;
  }
  return Vector(v / n);
}

}  // namespace

GradedSplit graded_split(const Subspace& tangent) {
  const Matrix p = tangent.projector();
  const Matrix q = Matrix::Identity(p.rows(), p.cols()) - p;
  return GradedSplit{p, q, Matrix(q - p)};
}

TwoJet::TwoJet(ModelPtr model, std::string label, double c, Subspace tangent,
               std::vector<Matrix> h_ops)
    : model_(std::move(model)),
      label_(std::move(label)),
      c_(c),
      tangent_(std::move(tangent)),
      normal_(tangent_.orthogonal_complement()),
      h_ops_(std::move(h_ops)),
      split_(graded_split(tangent_)) {
  if (!model_) throw std::invalid_argument("TwoJet: null model");
  const Index dp = model_->dim_p();
  if (tangent_.ambient_dim() != dp)
    throw std::invalid_argument("TwoJet: tangent lives in the wrong space");
  if (tangent_.dim() == 0)
    throw std::invalid_argument("TwoJet: empty tangent space");
  if (static_cast<Index>(h_ops_.size()) != tangent_.dim())
    throw std::invalid_argument("TwoJet: need one operator per tangent vector");
  for (const Matrix& h : h_ops_)
    if (h.rows() != dp || h.cols() != dp)
      throw std::invalid_argument("TwoJet: operator of wrong size");
}

Matrix TwoJet::h_of(const Vector& x) const {
  const Vector coeff = tangent_.basis().transpose() * x;
  Matrix h = Matrix::Zero(model_->dim_p(), model_->dim_p());
  for (Index i = 0; i < coeff.size(); ++i)
    h += coeff[i] * h_ops_[static_cast<std::size_t>(i)];
  return h;
}

namespace {

TwoJet build_jet(ModelPtr m, const AdmissibleElement& a, double c,
                 std::string label) {
  const Eigensplit split = eigensplit(*m, a);
  const Matrix& tb = split.p_eps.basis();
  std::vector<Matrix> h;
  h.reserve(static_cast<std::size_t>(tb.cols()));
  for (Index i = 0; i < tb.cols(); ++i) {
    const Matrix jy = j_bracket(*m, a, m->p_matrix(tb.col(i)));
    h.push_back(Matrix(c * m->isotropy_op(jy)));
  }
  return TwoJet(std::move(m), std::move(label), c, split.p_eps, std::move(h));
}

}  // namespace

TwoJet orbit_jet(ModelPtr model, const AdmissibleElement& a) {
  if (!model->flat())
    throw std::invalid_argument(model->name() +
                                ": orbit_jet needs a flat ambient model");
  return build_jet(std::move(model), a, 1.0, "orbit");
}

TwoJet family_jet(ModelPtr model, const AdmissibleElement& a, double c) {
  if (model->flat())
    throw std::invalid_argument(model->name() +
                                ": family_jet needs a curved ambient model");
  return build_jet(std::move(model), a, c, "family");
}

TwoJet veronese_sphere_jet() {
  const ModelPtr flat = find_model("euclid_su3_so3");
  const ModelPtr sphere = find_model("sphere4");
  const AdmissibleElement adm = find_admissible(*flat);
  const TwoJet orbit = orbit_jet(flat, adm);

  // Radius of the orbit sphere and curvature of the target model fix the
  // homothety; second fundamental forms of unit vectors scale by its
  // inverse.
  const double radius = adm.x.norm();
  const Vector e0 = Vector::Unit(sphere->dim_p(), 0);
  const Vector e1 = Vector::Unit(sphere->dim_p(), 1);
  const double kappa = (sphere->curvature_op(e0, e1) * e1).dot(e0);
  const double scale = radius * std::sqrt(kappa);

  // Isometry from the orthogonal complement of the radial direction onto
  // the tangent space of the sphere model: tangent directions first, then
  // the normal directions inside the sphere.
  const Vector radial = adm.x / radius;
  const Matrix tb = orbit.tangent().basis();
  const Matrix nb_full = orbit.normal().basis();
  const Matrix nb_reduced = orthonormalize_columns(
      Matrix(nb_full - radial * (radial.transpose() * nb_full)),
      flat->tol());
  Matrix phi(tb.cols() + nb_reduced.cols(), flat->dim_p());
  phi.topRows(tb.cols()) = tb.transpose();
  phi.bottomRows(nb_reduced.cols()) = nb_reduced.transpose();
  if (phi.rows() != sphere->dim_p())
    throw std::runtime_error("veronese_sphere_jet: dimension mismatch");

  std::vector<Matrix> h;
  for (Index i = 0; i < tb.cols(); ++i)
    h.push_back(
        Matrix(scale * phi * orbit.h_of(tb.col(i)) * phi.transpose()));
  Matrix span_t = Matrix::Zero(sphere->dim_p(), tb.cols());
  span_t.topRows(tb.cols()).setIdentity();
  return TwoJet(sphere, "veronese", scale,
                Subspace::from_orthonormal(span_t, sphere->tol()),
                std::move(h));
}

Subspace first_normal(const TwoJet& jet) {
  const Matrix& tb = jet.tangent().basis();
  const Index dp = jet.model().dim_p();
  std::vector<Vector> values;
  for (Index i = 0; i < tb.cols(); ++i)
    for (Index j = i; j < tb.cols(); ++j)
      values.push_back(Vector(jet.h_of(tb.col(i)) * tb.col(j)));
  Matrix cols(dp, static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    cols.col(static_cast<Index>(i)) = values[i];
  return Subspace::span(cols, jet.model().tol());
}

Subspace second_osculating(const TwoJet& jet) {
  return sum(jet.tangent(), first_normal(jet));
}

double jet_structure_residual(const TwoJet& jet) {
  double worst = 0.0;
  const Matrix& tb = jet.tangent().basis();
  const Matrix& nb = jet.normal().basis();
  const auto& h = jet.h_ops();
  for (const Matrix& a : h) {
    worst = std::max(worst, rel((a + a.transpose()).norm(), a.norm()));
    worst = std::max(worst, rel(jet.split().plus(a).norm(), a.norm()));
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      const double scale = std::max(h[i].norm(), h[j].norm());
      worst = std::max(
          worst, rel((h[i] * tb.col(static_cast<Index>(j)) -
                      h[j] * tb.col(static_cast<Index>(i)))
                         .norm(),
                     scale));
    }
  // Shape-operator adjointness: <h(x,y), xi> = <y, S_xi x> with
  // S_xi x = -𝐡(x) xi.
  for (std::size_t i = 0; i < h.size(); ++i)
    for (Index j = 0; j < tb.cols(); ++j)
      for (Index k = 0; k < nb.cols(); ++k) {
        const double lhs = (h[i] * tb.col(j)).dot(nb.col(k));
        const double rhs = -tb.col(j).dot(h[i] * nb.col(k));
        worst = std::max(worst, rel(std::abs(lhs - rhs), h[i].norm()));
      }
  return worst;
}

double osculating_stability_residual(const TwoJet& jet) {
  const Subspace osc = second_osculating(jet);
  double worst = 0.0;
  for (const Matrix& a : jet.h_ops())
    for (Index j = 0; j < osc.dim(); ++j)
      worst = std::max(worst, osc.containment_residual(
                                  Vector(a * osc.basis_vector(j))));
  return worst;
}

double check_semiparallel(const TwoJet& jet) {
  const SymmetricSpaceModel& m = jet.model();
  const Matrix& tb = jet.tangent().basis();
  const Matrix& pt = jet.split().tangent_proj;
  const auto& h = jet.h_ops();
  double worst = 0.0;
  for (Index i = 0; i < tb.cols(); ++i)
    for (Index j = i + 1; j < tb.cols(); ++j) {
      const Matrix rn = m.curvature_op(tb.col(i), tb.col(j));
      const Matrix comm =
          h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)] -
          h[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(i)];
      const Matrix rbar = rn - comm;
      const Matrix rm = pt * rbar * pt;
      for (Index k = 0; k < tb.cols(); ++k) {
        const Matrix& hk = h[static_cast<std::size_t>(k)];
        const Matrix lhs = jet.h_of(Vector(rm * tb.col(k)));
        const Matrix rhs = rbar * hk - hk * rbar;
        worst = std::max(
            worst, rel((lhs - rhs).norm(),
                       rbar.norm() * std::max(1.0, hk.norm())));
      }
    }
  return worst;
}

double check_curvature_invariance(const SymmetricSpaceModel& m,
                                  const Subspace& s) {
  if (s.dim() < 2) return 0.0;
  double worst = 0.0;
  for (Index i = 0; i < s.dim(); ++i)
    for (Index j = i + 1; j < s.dim(); ++j) {
      const Matrix r = m.curvature_op(s.basis_vector(i), s.basis_vector(j));
      for (Index k = 0; k < s.dim(); ++k)
        worst = std::max(
            worst, s.containment_residual(Vector(r * s.basis_vector(k))));
    }
  return worst;
}

double check_fundamental(const TwoJet& jet) {
  const SymmetricSpaceModel& m = jet.model();
  if (m.flat()) return 0.0;
  const Matrix& tb = jet.tangent().basis();
  const auto& h = jet.h_ops();
  const Subspace osc = second_osculating(jet);
  const Matrix po = osc.projector();
  const Matrix& pt = jet.split().tangent_proj;
  double worst = 0.0;
  for (Index i = 0; i < tb.cols(); ++i)
    for (Index j = i + 1; j < tb.cols(); ++j) {
      const Matrix& hx = h[static_cast<std::size_t>(i)];
      const Matrix& hy = h[static_cast<std::size_t>(j)];
      const Vector x = tb.col(i);
      const Vector y = tb.col(j);
      const Matrix lhs =
          m.curvature_op(Vector(hx * x), Vector(hy * y));
      const Matrix rxy = m.curvature_op(x, y);
      const Matrix inner = hy * rxy - rxy * hy;
      const Matrix nested = hx * inner - inner * hx;
      const Matrix rhs = nested - m.curvature_op(Vector(hx * hy * x), y) -
                         m.curvature_op(x, Vector(hx * hy * y));
      worst = std::max(worst, rel(((lhs - rhs) * po).norm(),
                                  std::max(lhs.norm(), rhs.norm())));
    }
  const Subspace fn = first_normal(jet);
  for (Index i = 0; i < fn.dim(); ++i)
    for (Index j = i + 1; j < fn.dim(); ++j) {
      const Matrix r = m.curvature_op(fn.basis_vector(i), fn.basis_vector(j));
      for (Index k = 0; k < osc.dim(); ++k)
        worst = std::max(
            worst, osc.containment_residual(Vector(r * osc.basis_vector(k))));
      const Matrix r_osc = po * r * po;
      const Matrix pn = po - pt;  // first-normal block inside O
      const Matrix odd = pt * r_osc * pn + pn * r_osc * pt;
      worst = std::max(worst, rel(odd.norm(), r_osc.norm()));
    }
  return worst;
}

double curvature_four_form_residual(const TwoJet& jet, std::mt19937_64& rng,
                                    int trials) {
  const SymmetricSpaceModel& m = jet.model();
  const Subspace osc = second_osculating(jet);
  const auto flat4 = [&](const Vector& a, const Vector& b, const Vector& c,
                         const Vector& d) {
    return (m.curvature_op(a, b) * c).dot(d);
  };
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Vector x = random_unit_in(jet.tangent().basis(), rng);
    const Matrix hx = jet.h_of(x);
    Vector v[4];
    for (auto& vi : v) vi = random_unit_in(osc.basis(), rng);
    const double sum = flat4(Vector(hx * v[0]), v[1], v[2], v[3]) +
                       flat4(v[0], Vector(hx * v[1]), v[2], v[3]) +
                       flat4(v[0], v[1], Vector(hx * v[2]), v[3]) +
                       flat4(v[0], v[1], v[2], Vector(hx * v[3]));
    worst = std::max(worst, rel(std::abs(sum), std::max(1.0, hx.norm())));
  }
  return worst;
}

double curvature_derivation_residual(const TwoJet& jet, std::mt19937_64& rng,
                                     int trials) {
  const SymmetricSpaceModel& m = jet.model();
  const Subspace osc = second_osculating(jet);
  const Matrix po = osc.projector();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Vector x = random_unit_in(jet.tangent().basis(), rng);
    const Vector y1 = random_unit_in(jet.tangent().basis(), rng);
    const Vector y2 = random_unit_in(jet.tangent().basis(), rng);
    const Matrix hx = jet.h_of(x);
    const Matrix r = m.curvature_op(y1, y2);
    const Matrix d = (hx * r - r * hx) - m.curvature_op(Vector(hx * y1), y2) -
                     m.curvature_op(y1, Vector(hx * y2));
    worst = std::max(
        worst, rel((d * po).norm(), r.norm() * std::max(1.0, hx.norm())));
  }
  return worst;
}

double one_full_residual(const TwoJet& jet) {
  return first_normal(jet).equality_residual(jet.normal());
}

bool check_one_full(const TwoJet& jet) {
  const Subspace fn = first_normal(jet);
  return fn.dim() == jet.normal().dim() && one_full_residual(jet) <= 1e-8;
}

double nondegeneracy_defect(const TwoJet& jet) {
  const Index dp = jet.model().dim_p();
  Matrix stacked(dp * dp, static_cast<Index>(jet.h_ops().size()));
  for (std::size_t i = 0; i < jet.h_ops().size(); ++i)
    stacked.col(static_cast<Index>(i)) = flatten(jet.h_ops()[i]);
  const Index rank = numerical_rank(stacked, jet.model().tol());
  return static_cast<double>(jet.tangent().dim() - rank);
}

bool check_nondegenerate(const TwoJet& jet) {
  return nondegeneracy_defect(jet) == 0.0;
}

double eschenburg_residual(const TwoJet& jet) {
  const SymmetricSpaceModel& m = jet.model();
  const Index dp = m.dim_p();
  Matrix iso(dp * dp, m.dim_k());
  for (Index i = 0; i < m.dim_k(); ++i)
    iso.col(i) =
        flatten(m.isotropy_op(m.k_basis()[static_cast<std::size_t>(i)]));
  const Subspace image = Subspace::span(iso, m.tol());
  double worst = 0.0;
  for (const Matrix& h : jet.h_ops())
    worst = std::max(worst, image.containment_residual(Vector(flatten(h))));
  return worst;
}

bool check_eschenburg(const TwoJet& jet) {
  return eschenburg_residual(jet) <= 1e-8;
}

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens_.push_back(tok);
    }
  }

  bool done() const { return pos_ >= tokens_.size(); }

  std::string next(const std::string& what) {
    if (done())
      throw std::invalid_argument("jet file: unexpected end while reading " +
                                  what);
    return tokens_[pos_++];
  }

  bool peek_is(const std::string& word) const {
    return !done() && tokens_[pos_] == word;
  }

  void expect(const std::string& word) {
    const std::string got = next("keyword '" + word + "'");
    if (got != word)
      throw std::invalid_argument("jet file: expected '" + word + "', got '" +
                                  got + "'");
  }

  double number(const std::string& what) {
    const std::string tok = next(what);
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("jet file: bad number '" + tok +
                                  "' while reading " + what);
    }
  }

  Index count(const std::string& what) {
    const double v = number(what);
    if (v < 1.0 || v != std::floor(v))
      throw std::invalid_argument("jet file: bad count while reading " + what);
    return static_cast<Index>(v);
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

TwoJet load_jet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("jet file: cannot open " + path);
  TokenReader reader(in);

  reader.expect("ambient");
  const ModelPtr model = find_model(reader.next("model name"));
  const Index dp = model->dim_p();

  double c = 1.0;
  if (reader.peek_is("c")) {
    reader.expect("c");
    c = reader.number("c value");
  }

  reader.expect("tangent");
  const Index m = reader.count("tangent vector count");
  Matrix raw_t(dp, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < dp; ++j)
      raw_t(j, i) = reader.number("tangent vector entry");

  reader.expect("h");
  const Index mh = reader.count("operator count");
  if (mh != m)
    throw std::invalid_argument(
        "jet file: need exactly one operator per tangent vector");
  std::vector<Matrix> raw_h;
  for (Index i = 0; i < m; ++i) {
    Matrix h(dp, dp);
    for (Index r = 0; r < dp; ++r)
      for (Index col = 0; col < dp; ++col)
        h(r, col) = reader.number("operator entry");
    raw_h.push_back(std::move(h));
  }
  if (!reader.done())
    throw std::invalid_argument("jet file: trailing tokens after operators");

  const Matrix onb = orthonormalize_columns(raw_t, model->tol());
  if (onb.cols() != m)
    throw std::invalid_argument("jet file: tangent vectors are dependent");
  std::vector<Matrix> h_ops;
  for (Index i = 0; i < m; ++i) {
    const Vector coeff = least_squares_solve(raw_t, Vector(onb.col(i)));
    Matrix h = Matrix::Zero(dp, dp);
    for (Index j = 0; j < m; ++j)
      h += coeff[j] * raw_h[static_cast<std::size_t>(j)];
    h_ops.push_back(std::move(h));
  }
  return TwoJet(model, "custom", c,
                Subspace::from_orthonormal(onb, model->tol()),
                std::move(h_ops));
}

}  // namespace holocalc
