#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"

using namespace projqm;
using testutil::max_abs_diff;
using cplx = std::complex<double>;

namespace {

StateVectord make_state(std::initializer_list<cplx> amps) {
  StateVectord v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const cplx& a : amps) v[i++] = a;
  return v;
}

BlochVectord random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    const double x = normal(rng);
    const double y = normal(rng);
    const double z = normal(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 0.1) return BlochVectord(x / r, y / r, z / r);
  }
}

// SO(3) image of a dim-2 group element, assembled column by column from the
// generator coefficients of g σ_j g†.
Eigen::Matrix3d adjoint_rotation(const SpecialUnitaryd& g) {
  const GeneratorBasisd basis(2);
  Eigen::Matrix3d r;
  const ComplexMatrixd sigmas[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrixd conjugated = g.matrix() * sigmas[j] * g.matrix().adjoint();
    const RealVectord coeffs = traceless_decompose(HermitianOperatord(conjugated), basis);
    for (int i = 0; i < 3; ++i) r(i, j) = coeffs[i + 1];
  }
  return r;
}

}  // namespace

TEST_CASE("pauli helpers satisfy the algebra") {
  CHECK(max_abs_diff((pauli_x() * pauli_x()).eval(), ComplexMatrixd::Identity(2, 2)) == 0.0);
  const ComplexMatrixd commutator = pauli_x() * pauli_y() - pauli_y() * pauli_x();
  CHECK(max_abs_diff(commutator, (cplx(0, 2) * pauli_z()).eval()) == 0.0);
}

TEST_CASE("BlochVector enforces unit length") {
  CHECK_THROWS_AS(BlochVectord(0.0, 0.0, 0.5), NotUnit);
  CHECK_THROWS_AS(BlochVectord(1.0, 1.0, 1.0), NotUnit);
  const BlochVectord b(0.0, 1.0, 0.0);
  CHECK(b.y() == 1.0);
  CHECK(b.dot(BlochVectord(0.0, 0.0, 1.0)) == 0.0);
}

TEST_CASE("bloch_vector maps rays onto the sphere") {
  SUBCASE("poles and equator landmarks") {
    const auto north = bloch_vector(canonicalize(make_state({1.0, 0.0})));
    CHECK(north.x() == 0.0);
    CHECK(north.y() == 0.0);
    CHECK(north.z() == 1.0);
    const auto plus_x = bloch_vector(canonicalize(make_state({1.0, 1.0})));
    CHECK(std::abs(plus_x.x() - 1.0) < 1e-15);
    CHECK(std::abs(plus_x.y()) < 1e-15);
    CHECK(std::abs(plus_x.z()) < 1e-15);
    const auto plus_y = bloch_vector(canonicalize(make_state({1.0, cplx(0, 1)})));
    CHECK(std::abs(plus_y.x()) < 1e-15);
    CHECK(std::abs(plus_y.y() - 1.0) < 1e-15);
    CHECK(std::abs(plus_y.z()) < 1e-15);
  }
  SUBCASE("representative rescaling does not move the image") {
    auto rng = testutil::make_rng(41);
    for (int i = 0; i < 50; ++i) {
      const StateVectord v = testutil::random_state(rng, 2);
      const cplx c = testutil::random_nonzero_scalar(rng);
      const auto b1 = bloch_vector(canonicalize(v));
      const auto b2 = bloch_vector(canonicalize((c * v).eval()));
      CHECK(std::abs(b1.x() - b2.x()) < 1e-12);
      CHECK(std::abs(b1.y() - b2.y()) < 1e-12);
      CHECK(std::abs(b1.z() - b2.z()) < 1e-12);
    }
  }
  SUBCASE("only dim 2 has a sphere image") {
    CHECK_THROWS_AS(bloch_vector(canonicalize(make_state({1.0, 0.0, 0.0}))), DimensionMismatch);
  }
}

TEST_CASE("from_bloch inverts the sphere map") {
  SUBCASE("poles") {
    const auto north = from_bloch(BlochVectord(0.0, 0.0, 1.0));
    CHECK(max_abs_diff(north.canonical(), make_state({1.0, 0.0})) < 1e-15);
    const auto south = from_bloch(BlochVectord(0.0, 0.0, -1.0));
    CHECK(max_abs_diff(south.canonical(), make_state({0.0, 1.0})) < 1e-15);
  }
  SUBCASE("random round trips") {
    auto rng = testutil::make_rng(42);
    for (int i = 0; i < 200; ++i) {
      const BlochVectord b = random_direction(rng);
      const BlochVectord back = bloch_vector(from_bloch(b));
      CHECK(std::abs(back.x() - b.x()) < 1e-9);
      CHECK(std::abs(back.y() - b.y()) < 1e-9);
      CHECK(std::abs(back.z() - b.z()) < 1e-9);
    }
  }
  SUBCASE("state round trips up to the ray") {
    auto rng = testutil::make_rng(43);
    for (int i = 0; i < 100; ++i) {
      const auto p = canonicalize(testutil::random_state(rng, 2));
      const auto back = from_bloch(bloch_vector(p));
      CHECK(1.0 - fidelity(p, back) < 1e-9);
    }
  }
}

TEST_CASE("fidelity follows the angle law on the sphere") {
  auto rng = testutil::make_rng(44);
  for (int i = 0; i < 200; ++i) {
    const auto p = canonicalize(testutil::random_state(rng, 2));
    const auto q = canonicalize(testutil::random_state(rng, 2));
    const double law = (1.0 + bloch_vector(p).dot(bloch_vector(q))) / 2.0;
    CHECK(std::abs(fidelity(p, q) - law) < 1e-9);
  }
}

TEST_CASE("group action on rays is rotation of the sphere") {
  auto rng = testutil::make_rng(45);
  for (int i = 0; i < 120; ++i) {
    const SpecialUnitaryd g = testutil::random_special_unitary(rng, 2);
    const auto p = canonicalize(testutil::random_state(rng, 2));
    const Eigen::Matrix3d r = adjoint_rotation(g);
    const BlochVectord b = bloch_vector(p);
    const Eigen::Vector3d rotated = r * Eigen::Vector3d(b.x(), b.y(), b.z());
    const BlochVectord moved = bloch_vector(group_act(g, p));
    CHECK(std::abs(moved.x() - rotated.x()) < 1e-8);
    CHECK(std::abs(moved.y() - rotated.y()) < 1e-8);
    CHECK(std::abs(moved.z() - rotated.z()) < 1e-8);
  }
}

TEST_CASE("spin_operators scale the pauli set") {
  SUBCASE("frozen matrices at unit action") {
    const auto s = spin_operators();
    ComplexMatrixd sz(2, 2);
    sz << 0.5, 0.0, 0.0, -0.5;
    CHECK(max_abs_diff(s.z.matrix(), sz) == 0.0);
  }
  SUBCASE("commutation relations at any scale") {
    for (const double hbar : {1.0, 2.5}) {
      const auto s = spin_operators(hbar);
      const ComplexMatrixd lhs = s.x.matrix() * s.y.matrix() - s.y.matrix() * s.x.matrix();
      CHECK(max_abs_diff(lhs, (cplx(0, hbar) * s.z.matrix()).eval()) < 1e-14);
      const auto es = eigensystem(s.x);
      CHECK(es.eigenvalues[0] == doctest::Approx(-hbar / 2));
      CHECK(es.eigenvalues[1] == doctest::Approx(hbar / 2));
    }
  }
  SUBCASE("the z spin fixes the poles") {
    const auto s = spin_operators();
    const auto north = canonicalize(make_state({1.0, 0.0}));
    const auto south = canonicalize(make_state({0.0, 1.0}));
    CHECK(projectively_equal(apply_operator(s.z, north), north));
    CHECK(projectively_equal(apply_operator(s.z, south), south));
  }
  SUBCASE("the scale must be positive") {
    CHECK_THROWS_AS(spin_operators(0.0), Error);
    CHECK_THROWS_AS(spin_operators(-1.0), Error);
  }
}
