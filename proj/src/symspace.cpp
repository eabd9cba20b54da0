#include "holocalc/symspace.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace holocalc {

namespace {

Matrix stack_flattened(const std::vector<Matrix>& mats) {
  const Index nsq = mats.front().size();
  Matrix out(nsq, static_cast<Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i)
    out.col(static_cast<Index>(i)) = flatten(mats[i]);
  return out;
}

/// Orthonormalizes raw basis matrices with respect to a positive definite
/// Gram matrix via Cholesky: if gram = L L^T, the rows of L^{-1} give the
/// coefficients of an orthonormal basis in terms of the raw one.
std::vector<Matrix> gram_orthonormalize(const std::vector<Matrix>& raw,
                                        const Matrix& gram,
                                        const std::string& where) {
  const SymEig eig = sym_eig(gram);
  const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  if (eig.values.minCoeff() <= 1e-6 * scale)
    throw std::invalid_argument(where +
                                ": inner product is not positive definite");
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument(where + ": Cholesky factorization failed");
  const Index d = gram.rows();
  const Matrix linv =
      llt.matrixL().solve(Matrix(Matrix::Identity(d, d)));
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) {
    Matrix m = Matrix::Zero(raw.front().rows(), raw.front().cols());
    for (Index j = 0; j < d; ++j)
      m += linv(i, j) * raw[static_cast<std::size_t>(j)];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

SymmetricSpaceModel::SymmetricSpaceModel(Init init, double tol)
    : name_(std::move(init.name)),
      epsilon_(init.epsilon),
      flat_(init.flat),
      tol_(tol),
      g_([&] {
        std::vector<Matrix> combined = init.k_raw;
        combined.insert(combined.end(), init.p_raw.begin(), init.p_raw.end());
        return MatrixLieAlgebra(combined, tol);
      }()),
      theta_(std::move(init.theta)),
      admissible_seed_(std::move(init.admissible_seed)) {
  if (epsilon_ != 1 && epsilon_ != -1)
    throw std::invalid_argument(name_ + ": epsilon must be +1 or -1");
  if (init.k_raw.empty() || init.p_raw.empty())
    throw std::invalid_argument(name_ + ": k and p bases must be nonempty");
  if (!theta_) throw std::invalid_argument(name_ + ": missing involution");

  const Index dk = static_cast<Index>(init.k_raw.size());
  const Index dp = static_cast<Index>(init.p_raw.size());
  killing_gram_ = killing_form(g_);

  // Orthonormalize: minus Killing on k and epsilon times Killing on p are
  // both positive definite, giving one positive inner product on g.
  const Matrix gram_k = -killing_gram_.topLeftCorner(dk, dk);
  const Matrix gram_p =
      static_cast<double>(epsilon_) * killing_gram_.bottomRightCorner(dp, dp);
  k_basis_ = gram_orthonormalize(init.k_raw, gram_k, name_ + " (k)");
  p_basis_ = gram_orthonormalize(init.p_raw, gram_p, name_ + " (p)");

  k_stack_ = stack_flattened(k_basis_);
  p_stack_ = stack_flattened(p_basis_);
  onb_stack_ = Matrix(k_stack_.rows(), dk + dp);
  onb_stack_ << k_stack_, p_stack_;
  k_span_ = Subspace::span(k_stack_, tol_);
  p_span_ = Subspace::span(p_stack_, tol_);
  k_solver_.compute(k_stack_);
  p_solver_.compute(p_stack_);
  onb_solver_.compute(onb_stack_);

  if (k_span_.dim() != dk || p_span_.dim() != dp)
    throw std::invalid_argument(name_ + ": degenerate k or p basis");
  if (cartan_residual(*this) > 1e-8)
    throw std::invalid_argument(name_ + ": k/p structure checks failed");
}

double SymmetricSpaceModel::killing(const Matrix& x, const Matrix& y) const {
  const Vector cx = g_.coordinates(x);
  const Vector cy = g_.coordinates(y);
  return cx.dot(killing_gram_ * cy);
}

Vector SymmetricSpaceModel::p_coords(const Matrix& x) const {
  return p_solver_.solve(flatten(x));
}

Matrix SymmetricSpaceModel::p_matrix(const Vector& v) const {
  const Index n = ambient_matrix_dim();
  return unflatten(p_stack_ * v, n, n);
}

Vector SymmetricSpaceModel::k_coords(const Matrix& x) const {
  return k_solver_.solve(flatten(x));
}

Matrix SymmetricSpaceModel::k_matrix(const Vector& v) const {
  const Index n = ambient_matrix_dim();
  return unflatten(k_stack_ * v, n, n);
}

Vector SymmetricSpaceModel::onb_coords(const Matrix& x) const {
  return onb_solver_.solve(flatten(x));
}

Matrix SymmetricSpaceModel::isotropy_op(const Matrix& z) const {
  Matrix op(dim_p(), dim_p());
  for (Index j = 0; j < dim_p(); ++j)
    op.col(j) = p_coords(bracket(z, p_basis_[static_cast<std::size_t>(j)]));
  return op;
}

Matrix SymmetricSpaceModel::curvature_op(const Vector& x,
                                         const Vector& y) const {
  if (flat_) return Matrix::Zero(dim_p(), dim_p());
  return -isotropy_op(bracket(p_matrix(x), p_matrix(y)));
}

double cartan_residual(const SymmetricSpaceModel& m) {
  double worst = 0.0;
  const auto relative = [](double r, double scale) {
    return r / std::max(1.0, scale);
  };
  for (const Matrix& k : m.k_basis()) {
    worst = std::max(worst, relative((m.theta(k) - k).norm(), k.norm()));
    worst = std::max(worst,
                     relative((m.theta(m.theta(k)) - k).norm(), k.norm()));
  }
  for (const Matrix& p : m.p_basis())
    worst = std::max(worst, relative((m.theta(p) + p).norm(), p.norm()));
  // Bracket block rules: [k,k] and [p,p] land in k, [k,p] lands in p.
  for (const Matrix& a : m.k_basis()) {
    for (const Matrix& b : m.k_basis())
      worst = std::max(worst, m.k_span().containment_residual(
                                  Vector(flatten(bracket(a, b)))));
    for (const Matrix& b : m.p_basis())
      worst = std::max(worst, m.p_span().containment_residual(
                                  Vector(flatten(bracket(a, b)))));
  }
  for (const Matrix& a : m.p_basis())
    for (const Matrix& b : m.p_basis())
      worst = std::max(worst, m.k_span().containment_residual(
                                  Vector(flatten(bracket(a, b)))));
  // k and p are orthogonal for the Killing form.
  const Index dk = m.dim_k();
  const Index dp = m.dim_p();
  const Matrix cross = m.killing_gram().topRightCorner(dk, dp);
  worst = std::max(
      worst, cross.cwiseAbs().maxCoeff() /
                 std::max(1.0, m.killing_gram().cwiseAbs().maxCoeff()));
  return worst;
}

namespace {

/// ad(X) on g in the orthonormal [k | p] basis.
Matrix ad_in_onb(const SymmetricSpaceModel& m, const Matrix& X) {
  const Index d = m.dim_g();
  Matrix ad(d, d);
  Index col = 0;
  for (const Matrix& b : m.k_basis()) ad.col(col++) = m.onb_coords(bracket(X, b));
  for (const Matrix& b : m.p_basis()) ad.col(col++) = m.onb_coords(bracket(X, b));
  return ad;
}

double admissibility_residual(const SymmetricSpaceModel& m, const Matrix& X) {
  const Matrix ad = ad_in_onb(m, X);
  const double cube_scale = std::max(1.0, std::pow(ad.norm(), 3));
  return (ad * ad * ad - static_cast<double>(m.epsilon()) * ad).norm() /
         cube_scale;
}

/// Rescales a direction so that the nonzero eigenvalue cluster of ad(X)^2
/// lands exactly at epsilon.  Throws degeneracy_error if the spectrum does
/// not consist of one cluster at zero and one other cluster, and
/// invalid_argument if the nonzero cluster has the wrong sign.
AdmissibleElement rescale_admissible(const SymmetricSpaceModel& m,
                                     const Matrix& seed) {
  const Matrix ad = ad_in_onb(m, seed);
  const Matrix sq = 0.5 * (ad * ad + (ad * ad).transpose());
  const SymEig eig = sym_eig(sq);
  const double scale = eig.values.cwiseAbs().maxCoeff();
  if (scale <= 1e-12)
    throw std::invalid_argument(m.name() +
                                ": candidate element has ad(X)^2 = 0");
  double mu_sum = 0.0;
  int mu_count = 0;
  for (Index i = 0; i < eig.values.size(); ++i)
    if (std::abs(eig.values[i]) > 0.5 * scale) {
      mu_sum += eig.values[i];
      ++mu_count;
    }
  const double mu = mu_sum / mu_count;
  const double gap = 10.0 * m.tol() * std::max(1.0, scale);
  for (Index i = 0; i < eig.values.size(); ++i) {
    const double dist =
        std::min(std::abs(eig.values[i]), std::abs(eig.values[i] - mu));
    if (dist > gap)
      throw degeneracy_error(m.name() +
                             ": ad(X)^2 spectrum is not two well separated "
                             "clusters");
  }
  if (mu * static_cast<double>(m.epsilon()) <= 0.0)
    throw std::invalid_argument(
        m.name() + ": nonzero cluster of ad(X)^2 has the wrong sign");
  const Matrix X = seed / std::sqrt(std::abs(mu));
  return AdmissibleElement{X, m.p_coords(X), admissibility_residual(m, X)};
}

/// Cubic relation residual after rescaling the direction so that the top
/// eigenvalue of ad(dir)^2 lands at epsilon.  Continuous in the direction
/// and zero exactly where the direction is admissible up to scale; any
/// eigenvalue strictly between the extremes keeps it away from zero.
double scaled_cubic_residual(const SymmetricSpaceModel& m, const Matrix& dir) {
  const Matrix ad = ad_in_onb(m, dir);
  const Matrix sq = 0.5 * (ad * ad + (ad * ad).transpose());
  const double scale = sym_eig(sq).values.cwiseAbs().maxCoeff();
  if (scale <= 1e-12) return 1.0;
  return admissibility_residual(m, dir / std::sqrt(scale));
}

/// Greedily grows a maximal abelian subspace of p from a random start.
std::vector<Vector> maximal_abelian(const SymmetricSpaceModel& m,
                                    std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Index dp = m.dim_p();
  const auto random_unit = [&](const Matrix& cols) {
    Vector raw(cols.cols());
    for (Index i = 0; i < raw.size(); ++i) raw[i] = gauss(rng);
    Vector v = cols * raw;
    return Vector(v / v.norm());
  };
  std::vector<Vector> abelian{random_unit(Matrix::Identity(dp, dp))};
  while (static_cast<Index>(abelian.size()) < dp) {
    // Kernel of w -> ([w, a])_a over the current abelian set.
    const Index nsq =
        m.ambient_matrix_dim() * m.ambient_matrix_dim();
    Matrix constraints(static_cast<Index>(abelian.size()) * nsq, dp);
    for (std::size_t ai = 0; ai < abelian.size(); ++ai) {
      const Matrix a_mat = m.p_matrix(abelian[ai]);
      for (Index j = 0; j < dp; ++j)
        constraints.block(static_cast<Index>(ai) * nsq, j, nsq, 1) = flatten(
            bracket(m.p_basis()[static_cast<std::size_t>(j)], a_mat));
    }
    const Subspace kernel =
        Subspace::span(constraints.transpose(), m.tol()).orthogonal_complement();
    Matrix current(dp, static_cast<Index>(abelian.size()));
    for (std::size_t i = 0; i < abelian.size(); ++i)
      current.col(static_cast<Index>(i)) = abelian[i];
    const Subspace span_a = Subspace::span(current, m.tol());
    if (kernel.dim() <= span_a.dim()) break;
    Vector w = random_unit(kernel.basis());
    w -= span_a.project(w);
    if (w.norm() < 1e-8) break;
    abelian.push_back(w / w.norm());
  }
  return abelian;
}

/// Scans directions cos(t) a + sin(t) b for local minima of the rescaled
/// cubic relation residual and refines each by golden section search.
std::vector<Vector> scan_plane(const SymmetricSpaceModel& m, const Vector& a,
                               const Vector& b) {
  const auto dir_at = [&](double t) {
    return Vector(std::cos(t) * a + std::sin(t) * b);
  };
  const auto spread_at = [&](double t) {
    return scaled_cubic_residual(m, m.p_matrix(dir_at(t)));
  };
  constexpr int kGrid = 720;
  const double pi = std::acos(-1.0);
  std::vector<double> value(kGrid);
  for (int i = 0; i < kGrid; ++i) value[i] = spread_at(pi * i / kGrid);
  std::vector<std::pair<double, int>> minima;
  for (int i = 0; i < kGrid; ++i) {
    const double prev = value[(i + kGrid - 1) % kGrid];
    const double next = value[(i + 1) % kGrid];
    if (value[i] <= prev && value[i] <= next) minima.emplace_back(value[i], i);
  }
  std::sort(minima.begin(), minima.end());
  if (minima.size() > 8) minima.resize(8);
  std::vector<Vector> dirs;
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  for (const auto& [val, idx] : minima) {
    double lo = pi * (idx - 1) / kGrid;
    double hi = pi * (idx + 1) / kGrid;
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = spread_at(x1);
    double f2 = spread_at(x2);
    for (int it = 0; it < 90; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - golden * (hi - lo);
        f1 = spread_at(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + golden * (hi - lo);
        f2 = spread_at(x2);
      }
    }
    dirs.push_back(dir_at(0.5 * (lo + hi)));
  }
  return dirs;
}

AdmissibleElement search_admissible(const SymmetricSpaceModel& m) {
  std::mt19937_64 rng(0x11293305ULL);  // fixed seed: search is deterministic
  const std::vector<Vector> abelian = maximal_abelian(m, rng);
  std::vector<Vector> candidates;
  if (abelian.size() == 1) {
    candidates.push_back(abelian.front());
  } else {
    Matrix cols(m.dim_p(), static_cast<Index>(abelian.size()));
    for (std::size_t i = 0; i < abelian.size(); ++i)
      cols.col(static_cast<Index>(i)) = abelian[i];
    const Matrix onb = orthonormalize_columns(cols, m.tol());
    for (Index i = 0; i < onb.cols(); ++i) candidates.push_back(onb.col(i));
    for (Index i = 0; i < onb.cols(); ++i)
      for (Index j = i + 1; j < onb.cols(); ++j)
        for (const Vector& d : scan_plane(m, onb.col(i), onb.col(j)))
          candidates.push_back(d);
  }
  for (const Vector& c : candidates) {
    try {
      AdmissibleElement found = rescale_admissible(m, m.p_matrix(c));
      if (found.residual <= 10.0 * m.tol()) return found;
    } catch (const degeneracy_error&) {
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error(m.name() + ": no admissible element found");
}

}  // namespace

AdmissibleElement find_admissible(const SymmetricSpaceModel& m) {
  if (m.admissible_seed()) return rescale_admissible(m, *m.admissible_seed());
  return search_admissible(m);
}

Eigensplit eigensplit(const SymmetricSpaceModel& m,
                      const AdmissibleElement& a) {
  const auto split_part = [&](const std::vector<Matrix>& basis,
                              const std::function<Vector(const Matrix&)>&
                                  coords) -> std::pair<Matrix, Matrix> {
    const Index d = static_cast<Index>(basis.size());
    Matrix sq(d, d);
    for (Index j = 0; j < d; ++j)
      sq.col(j) = coords(
          bracket(a.X, bracket(a.X, basis[static_cast<std::size_t>(j)])));
    const Matrix sym = 0.5 * (sq + sq.transpose());
    const SymEig eig = sym_eig(sym);
    const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    const double gap = 10.0 * m.tol() * scale;
    const double eps = static_cast<double>(m.epsilon());
    std::vector<Index> zero_idx, eps_idx;
    for (Index i = 0; i < d; ++i) {
      if (std::abs(eig.values[i]) <= gap)
        zero_idx.push_back(i);
      else if (std::abs(eig.values[i] - eps) <= gap)
        eps_idx.push_back(i);
      else
        throw degeneracy_error(
            m.name() + ": eigenvalue of ad(X)^2 away from both clusters");
    }
    Matrix v0(d, static_cast<Index>(zero_idx.size()));
    Matrix v1(d, static_cast<Index>(eps_idx.size()));
    for (std::size_t i = 0; i < zero_idx.size(); ++i)
      v0.col(static_cast<Index>(i)) = eig.vectors.col(zero_idx[i]);
    for (std::size_t i = 0; i < eps_idx.size(); ++i)
      v1.col(static_cast<Index>(i)) = eig.vectors.col(eps_idx[i]);
    return {v0, v1};
  };

  const auto combine = [](const std::vector<Matrix>& basis, const Matrix& v) {
    std::vector<Matrix> out;
    for (Index c = 0; c < v.cols(); ++c) {
      Matrix mat = Matrix::Zero(basis.front().rows(), basis.front().cols());
      for (Index r = 0; r < v.rows(); ++r)
        mat += v(r, c) * basis[static_cast<std::size_t>(r)];
      out.push_back(std::move(mat));
    }
    return out;
  };

  const auto [k0_v, keps_v] = split_part(
      m.k_basis(), [&](const Matrix& x) { return m.k_coords(x); });
  const auto [p0_v, peps_v] = split_part(
      m.p_basis(), [&](const Matrix& x) { return m.p_coords(x); });

  Eigensplit split;
  split.k0 = combine(m.k_basis(), k0_v);
  split.k_eps = combine(m.k_basis(), keps_v);
  split.p0 = Subspace::from_orthonormal(p0_v, m.tol());
  split.p_eps = Subspace::from_orthonormal(peps_v, m.tol());
  return split;
}

Matrix j_bracket(const SymmetricSpaceModel& m, const AdmissibleElement& a,
                 const Matrix& y) {
  return -static_cast<double>(m.epsilon()) * bracket(a.X, y);
}

Matrix sl3_element_from_su3(const Matrix& realified) {
  if (realified.rows() != 6 || realified.cols() != 6)
    throw std::invalid_argument(
        "sl3_element_from_su3: expected a 6 x 6 matrix");
  const Matrix a = realified.block(0, 0, 3, 3);
  const Matrix s = realified.block(3, 0, 3, 3);
  const double scale = std::max(1.0, realified.norm());
  if ((realified.block(3, 3, 3, 3) - a).norm() > 1e-9 * scale ||
      (realified.block(0, 3, 3, 3) + s).norm() > 1e-9 * scale)
    throw std::invalid_argument(
        "sl3_element_from_su3: matrix is not of the form [[A, -S], [S, A]]");
  return a + s;
}

namespace {

Matrix unit_skew(Index i, Index j, Index n) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  m(j, i) = -1.0;
  return m;
}

Matrix unit_sym(Index i, Index j, Index n) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) += 1.0;
  m(j, i) += 1.0;
  return m;
}

std::function<Matrix(const Matrix&)> conjugation_by(Matrix d) {
  return [d = std::move(d)](const Matrix& x) { return Matrix(d * x * d); };
}

/// Realification of A + i S in su(3) as the 6 x 6 matrix [[A, -S], [S, A]].
Matrix realify(const Matrix& a, const Matrix& s) {
  Matrix m = Matrix::Zero(6, 6);
  m.block(0, 0, 3, 3) = a;
  m.block(3, 3, 3, 3) = a;
  m.block(0, 3, 3, 3) = -s;
  m.block(3, 0, 3, 3) = s;
  return m;
}

std::vector<Matrix> so_block_basis(Index n, Index lo, Index hi) {
  std::vector<Matrix> out;
  for (Index i = lo; i < hi; ++i)
    for (Index j = i + 1; j < hi; ++j) out.push_back(unit_skew(i, j, n));
  return out;
}

std::vector<Matrix> traceless_sym_basis3() {
  std::vector<Matrix> out;
  Matrix d1 = Matrix::Zero(3, 3);
  d1.diagonal() << 1.0, -1.0, 0.0;
  Matrix d2 = Matrix::Zero(3, 3);
  d2.diagonal() << 0.0, 1.0, -1.0;
  out.push_back(d1);
  out.push_back(d2);
  for (Index i = 0; i < 3; ++i)
    for (Index j = i + 1; j < 3; ++j) out.push_back(unit_sym(i, j, 3));
  return out;
}

ModelPtr make_round_sphere(const std::string& name, Index n) {
  // so(n+1) split by reflection in the last coordinate: k = so(n), p = R^n.
  SymmetricSpaceModel::Init init;
  init.name = name;
  init.epsilon = -1;
  init.k_raw = so_block_basis(n + 1, 0, n);
  for (Index i = 0; i < n; ++i) init.p_raw.push_back(unit_skew(i, n, n + 1));
  Vector diag = Vector::Ones(n + 1);
  diag[n] = -1.0;
  init.theta = conjugation_by(Matrix(diag.asDiagonal()));
  init.admissible_seed = unit_skew(0, n, n + 1);
  return std::make_shared<SymmetricSpaceModel>(std::move(init));
}

ModelPtr make_hyperbolic4() {
  // so(4,1) with the Lorentz form diag(1,1,1,1,-1): k = so(4), p given by
  // the symmetric pairings with the timelike direction.
  SymmetricSpaceModel::Init init;
  init.name = "hyperbolic4";
  init.epsilon = 1;
  init.k_raw = so_block_basis(5, 0, 4);
  for (Index i = 0; i < 4; ++i) init.p_raw.push_back(unit_sym(i, 4, 5));
  Vector diag = Vector::Ones(5);
  diag[4] = -1.0;
  init.theta = conjugation_by(Matrix(diag.asDiagonal()));
  init.admissible_seed = unit_sym(0, 4, 5);
  return std::make_shared<SymmetricSpaceModel>(std::move(init));
}

SymmetricSpaceModel::Init su3_so3_init(const std::string& name, bool flat) {
  SymmetricSpaceModel::Init init;
  init.name = name;
  init.epsilon = -1;
  init.flat = flat;
  for (const Matrix& a : so_block_basis(3, 0, 3))
    init.k_raw.push_back(realify(a, Matrix::Zero(3, 3)));
  for (const Matrix& s : traceless_sym_basis3())
    init.p_raw.push_back(realify(Matrix::Zero(3, 3), s));
  Vector diag(6);
  diag << 1.0, 1.0, 1.0, -1.0, -1.0, -1.0;
  init.theta = conjugation_by(Matrix(diag.asDiagonal()));
  Matrix seed_s = Matrix::Zero(3, 3);
  seed_s.diagonal() << 2.0, -1.0, -1.0;
  init.admissible_seed = realify(Matrix::Zero(3, 3), seed_s);
  return init;
}

ModelPtr make_sl3_so3() {
  // sl(3, R) with theta(x) = -x^T: k = so(3), p = traceless symmetric.
  SymmetricSpaceModel::Init init;
  init.name = "sl3_so3";
  init.epsilon = 1;
  init.k_raw = so_block_basis(3, 0, 3);
  init.p_raw = traceless_sym_basis3();
  init.theta = [](const Matrix& x) { return Matrix(-x.transpose()); };
  Matrix seed = Matrix::Zero(3, 3);
  seed.diagonal() << 2.0, -1.0, -1.0;
  init.admissible_seed = seed;
  return std::make_shared<SymmetricSpaceModel>(std::move(init));
}

ModelPtr make_quadric3() {
  // so(5) split by reflection in the first two coordinates: k = so(2) +
  // so(3), p = R^2 tensor R^3.  No seed: the admissible element is found
  // by the generic search.
  SymmetricSpaceModel::Init init;
  init.name = "quadric3";
  init.epsilon = -1;
  init.k_raw.push_back(unit_skew(0, 1, 5));
  for (const Matrix& m : so_block_basis(5, 2, 5)) init.k_raw.push_back(m);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 2; j < 5; ++j) init.p_raw.push_back(unit_skew(i, j, 5));
  Vector diag = Vector::Ones(5);
  diag[0] = diag[1] = -1.0;
  init.theta = conjugation_by(Matrix(diag.asDiagonal()));
  return std::make_shared<SymmetricSpaceModel>(std::move(init));
}

ModelPtr make_grassmann33() {
  // so(6) split by reflection across the two R^3 factors.
  SymmetricSpaceModel::Init init;
  init.name = "grassmann33";
  init.epsilon = -1;
  init.k_raw = so_block_basis(6, 0, 3);
  for (const Matrix& m : so_block_basis(6, 3, 6)) init.k_raw.push_back(m);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 3; j < 6; ++j) init.p_raw.push_back(unit_skew(i, j, 6));
  Vector diag(6);
  diag << 1.0, 1.0, 1.0, -1.0, -1.0, -1.0;
  init.theta = conjugation_by(Matrix(diag.asDiagonal()));
  Matrix seed = Matrix::Zero(6, 6);
  seed.block(0, 3, 3, 3) = Matrix::Identity(3, 3);
  seed.block(3, 0, 3, 3) = -Matrix::Identity(3, 3);
  init.admissible_seed = seed;
  return std::make_shared<SymmetricSpaceModel>(std::move(init));
}

std::vector<ModelPtr> build_catalog() {
  std::vector<ModelPtr> models;
  models.push_back(make_round_sphere("sphere4", 4));
  models.push_back(make_round_sphere("sphere5", 5));
  models.push_back(make_hyperbolic4());
  models.push_back(
      std::make_shared<SymmetricSpaceModel>(su3_so3_init("su3_so3", false)));
  models.push_back(make_sl3_so3());
  models.push_back(make_quadric3());
  models.push_back(make_grassmann33());
  models.push_back(std::make_shared<SymmetricSpaceModel>(
      su3_so3_init("euclid_su3_so3", true)));
  return models;
}

}  // namespace

const std::vector<ModelPtr>& catalog() {
  static const std::vector<ModelPtr> models = build_catalog();
  return models;
}

ModelPtr find_model(std::string_view name) {
  for (const ModelPtr& m : catalog())
    if (m->name() == name) return m;
  std::string known;
  for (const ModelPtr& m : catalog()) {
    if (!known.empty()) known += ", ";
    known += m->name();
  }
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (known: " + known + ")");
}

}  // namespace holocalc
