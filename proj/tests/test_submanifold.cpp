#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "holocalc/submanifold.hpp"

namespace {

using namespace holocalc;

Vector random_unit(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = gauss(rng);
  return v / v.norm();
}

TwoJet family_jet_of(const std::string& name, double c) {
  const ModelPtr m = find_model(name);
  return family_jet(m, find_admissible(*m), c);
}

TwoJet orbit_jet_of(const std::string& name) {
  const ModelPtr m = find_model(name);
  return orbit_jet(m, find_admissible(*m));
}

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / stem;
}

void write_jet_file(const std::filesystem::path& path, const TwoJet& jet,
                    const Matrix& tangent_rows,
                    const std::vector<Matrix>& h_mats) {
  std::ofstream out(path);
  out << "ambient " << jet.model().name() << "\n";
  out << "c " << jet.c() << "\n";
  out << "tangent " << tangent_rows.rows() << "\n";
  for (Index i = 0; i < tangent_rows.rows(); ++i) {
    for (Index j = 0; j < tangent_rows.cols(); ++j)
      out << (j ? " " : "") << tangent_rows(i, j);
    out << "\n";
  }
  out << "h " << h_mats.size() << "\n";
  char buf[32];
  for (const Matrix& h : h_mats)
    for (Index i = 0; i < h.rows(); ++i) {
      for (Index j = 0; j < h.cols(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", h(i, j));
        out << (j ? " " : "") << buf;
      }
      out << "\n";
    }
}

}  // namespace

TEST_SUITE("submanifold") {

TEST_CASE("orbit jet of the flat model is 1-full and nondegenerate") {
  const TwoJet jet = orbit_jet_of("euclid_su3_so3");
  CHECK(jet.label() == "orbit");
  CHECK(jet.c() == 1.0);
  CHECK(jet.tangent().dim() == 2);
  CHECK(jet.normal().dim() == 3);
  CHECK(first_normal(jet).dim() == 3);
  CHECK(one_full_residual(jet) < 1e-8);
  CHECK(check_one_full(jet));
  CHECK(nondegeneracy_defect(jet) == 0.0);
  CHECK(check_nondegenerate(jet));
  CHECK(check_eschenburg(jet));
  CHECK(jet_structure_residual(jet) < 1e-12);
}

TEST_CASE("family jets satisfy the identity battery at machine precision") {
  std::mt19937_64 rng(51);
  for (const ModelPtr& m : catalog()) {
    if (m->flat()) continue;
    const TwoJet jet = family_jet(m, find_admissible(*m), 1.0);
    CAPTURE(m->name());
    CHECK(jet_structure_residual(jet) < 1e-12);
    CHECK(check_semiparallel(jet) < 1e-12);
    CHECK(check_fundamental(jet) < 1e-12);
    CHECK(check_curvature_invariance(*m, jet.tangent()) < 1e-12);
    CHECK(check_curvature_invariance(*m, first_normal(jet)) < 1e-12);
    CHECK(curvature_four_form_residual(jet, rng, 10) < 1e-12);
    CHECK(curvature_derivation_residual(jet, rng, 10) < 1e-12);
    CHECK(osculating_stability_residual(jet) < 1e-12);
    CHECK(check_one_full(jet));
    CHECK(check_nondegenerate(jet));
    CHECK(check_eschenburg(jet));
  }
}

TEST_CASE("first normal space of a family jet is the zero eigenspace") {
  for (const std::string name : {"su3_so3", "quadric3", "grassmann33"}) {
    const ModelPtr m = find_model(name);
    const AdmissibleElement adm = find_admissible(*m);
    const Eigensplit split = eigensplit(*m, adm);
    const TwoJet jet = family_jet(m, adm, 1.0);
    CHECK(jet.tangent().equals(split.p_eps));
    CHECK(first_normal(jet).equals(split.p0));
  }
}

TEST_CASE("the family scale acts linearly on the second fundamental form") {
  const TwoJet base = family_jet_of("sphere5", 1.0);
  const TwoJet doubled = family_jet_of("sphere5", 2.0);
  const TwoJet zero = family_jet_of("sphere5", 0.0);
  REQUIRE(base.h_ops().size() == doubled.h_ops().size());
  for (std::size_t i = 0; i < base.h_ops().size(); ++i) {
    CHECK((doubled.h_ops()[i] - 2.0 * base.h_ops()[i]).norm() < 1e-12);
    CHECK(zero.h_ops()[i].norm() == 0.0);
  }
  CHECK_FALSE(check_one_full(zero));
  CHECK_FALSE(check_nondegenerate(zero));
  CHECK(check_semiparallel(zero) < 1e-12);
}

TEST_CASE("h is symmetric and normal valued") {
  std::mt19937_64 rng(52);
  const TwoJet jet = family_jet_of("grassmann33", 1.0);
  const Index dp = jet.model().dim_p();
  for (int trial = 0; trial < 5; ++trial) {
    const Vector x = jet.tangent().project(random_unit(rng, dp));
    const Vector y = jet.tangent().project(random_unit(rng, dp));
    CHECK((jet.h_bilinear(x, y) - jet.h_bilinear(y, x)).norm() < 1e-12);
    CHECK(jet.normal().containment_residual(jet.h_bilinear(x, y)) < 1e-12);
  }
}

TEST_CASE("graded split decomposes operators") {
  std::mt19937_64 rng(53);
  const TwoJet jet = family_jet_of("sphere5", 1.0);
  const GradedSplit& s = jet.split();
  CHECK((s.reflection * s.reflection -
         Matrix::Identity(s.reflection.rows(), s.reflection.cols()))
            .norm() < 1e-12);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(5, 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) a(i, j) = gauss(rng);
  CHECK((s.plus(a) + s.minus(a) - a).norm() < 1e-12);
  CHECK((s.reflection * s.plus(a) - s.plus(a) * s.reflection).norm() < 1e-12);
  CHECK((s.reflection * s.minus(a) + s.minus(a) * s.reflection).norm() <
        1e-12);
}

TEST_CASE("veronese transplant lands in the sphere with the right scale") {
  const TwoJet jet = veronese_sphere_jet();
  CHECK(jet.model().name() == "sphere4");
  CHECK(jet.label() == "veronese");
  // radius 2 orbit sphere and curvature 1/6 ambient combine to 2/sqrt(6).
  CHECK(jet.c() == doctest::Approx(0.8164965809277259).epsilon(1e-12));
  CHECK(jet.tangent().dim() == 2);
  CHECK(jet.normal().dim() == 2);
  CHECK(first_normal(jet).dim() == 2);
  CHECK(check_one_full(jet));
  CHECK(check_nondegenerate(jet));
  CHECK(check_eschenburg(jet));
  CHECK(jet_structure_residual(jet) < 1e-12);
  CHECK(check_semiparallel(jet) < 1e-12);
  CHECK(check_fundamental(jet) < 1e-12);
}

TEST_CASE("corrupted jets are detected") {
  const TwoJet good = family_jet_of("su3_so3", 1.0);
  std::vector<Matrix> bad_ops = good.h_ops();
  bad_ops[0] *= 1.5;
  const TwoJet bad(good.model_ptr(), "custom", good.c(), good.tangent(),
                   bad_ops);
  CHECK(check_semiparallel(bad) > 1e-3);

  // An operator outside the isotropy image breaks the isotropy containment.
  std::vector<Matrix> alien_ops = good.h_ops();
  Matrix alien = Matrix::Zero(5, 5);
  const Matrix tp = good.split().tangent_proj;
  const Matrix np = good.split().normal_proj;
  std::mt19937_64 rng(54);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix raw(5, 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) raw(i, j) = gauss(rng);
  alien = tp * raw * np;
  alien -= alien.transpose().eval();
  alien_ops[0] += alien;
  const TwoJet odd(good.model_ptr(), "custom", good.c(), good.tangent(),
                   alien_ops);
  CHECK(eschenburg_residual(odd) > 1e-3);
  CHECK_FALSE(check_eschenburg(odd));
}

TEST_CASE("jet constructor rejects inconsistent data") {
  const ModelPtr m = find_model("su3_so3");
  const TwoJet good = family_jet_of("su3_so3", 1.0);
  std::vector<Matrix> ops = good.h_ops();
  ops.pop_back();
  CHECK_THROWS_AS(TwoJet(m, "custom", 1.0, good.tangent(), ops),
                  std::invalid_argument);
  std::vector<Matrix> wrong_shape = good.h_ops();
  wrong_shape[0] = Matrix::Zero(3, 3);
  CHECK_THROWS_AS(TwoJet(m, "custom", 1.0, good.tangent(), wrong_shape),
                  std::invalid_argument);
}

TEST_CASE("jet files round trip through a non orthonormal basis") {
  const TwoJet orig = family_jet_of("su3_so3", 1.0);
  // Present the same jet in a mixed, rescaled tangent basis.
  const Matrix b = orig.tangent().basis();
  Matrix rows(2, b.rows());
  rows.row(0) = (2.0 * b.col(0) + b.col(1)).transpose();
  rows.row(1) = (b.col(0) - b.col(1)).transpose();
  const std::vector<Matrix> h_mats = {
      orig.h_of(Vector(rows.row(0).transpose())),
      orig.h_of(Vector(rows.row(1).transpose()))};
  const auto path = temp_file("holocalc_roundtrip.jet");
  write_jet_file(path, orig, rows, h_mats);
  const TwoJet loaded = load_jet_file(path.string());
  std::filesystem::remove(path);

  CHECK(loaded.label() == "custom");
  CHECK(loaded.model().name() == "su3_so3");
  CHECK(loaded.tangent().equals(orig.tangent()));
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 5; ++trial) {
    const Vector x = random_unit(rng, 5);
    CHECK((loaded.h_of(x) - orig.h_of(x)).norm() < 1e-9);
  }
}

TEST_CASE("malformed jet files are rejected") {
  const auto path = temp_file("holocalc_bad.jet");
  const auto expect_throw = [&](const std::string& text) {
    std::ofstream(path) << text;
    CHECK_THROWS_AS(load_jet_file(path.string()), std::invalid_argument);
  };
  expect_throw("");
  expect_throw("ambient nosuch\ntangent 1\n1 0 0 0 0\nh 1\n");
  expect_throw("ambient su3_so3\ntangent 1\n1 0 0\n");
  const std::string zeros5 = "0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n"
                             "0 0 0 0 0\n0 0 0 0 0\n";
  // Dependent tangent rows with an otherwise complete file.
  expect_throw("ambient su3_so3\ntangent 2\n1 0 0 0 0\n2 0 0 0 0\nh 2\n" +
               zeros5 + zeros5);
  expect_throw("tangent 1\n1 0 0 0 0\n");  // missing the model line
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_jet_file("/nonexistent/path.jet"),
                  std::invalid_argument);
}

}  // TEST_SUITE
