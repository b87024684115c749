// bloch.hpp - the dim-2 worked example: CP^1 as the Bloch sphere and the
// spin-1/2 operators.
#pragma once

#include <algorithm>
#include <cmath>

#include "operators.hpp"
#include "projective.hpp"

namespace projqm {

template <typename Scalar = double>
ComplexMatrix<Scalar> pauli_x() {
  ComplexMatrix<Scalar> m(2, 2);
  m << Complex<Scalar>(0), Complex<Scalar>(1), Complex<Scalar>(1), Complex<Scalar>(0);
  return m;
}

template <typename Scalar = double>
ComplexMatrix<Scalar> pauli_y() {
  ComplexMatrix<Scalar> m(2, 2);
  m << Complex<Scalar>(0), Complex<Scalar>(0, -1), Complex<Scalar>(0, 1), Complex<Scalar>(0);
  return m;
}

template <typename Scalar = double>
ComplexMatrix<Scalar> pauli_z() {
  ComplexMatrix<Scalar> m(2, 2);
  m << Complex<Scalar>(1), Complex<Scalar>(0), Complex<Scalar>(0), Complex<Scalar>(-1);
  return m;
}

/// A unit direction on the sphere CP^1 is identified with.
template <typename Scalar = double>
class BlochVector {
 public:
  BlochVector(Scalar x, Scalar y, Scalar z, Scalar tol = Scalar(kNormTolerance))
      : x_(x), y_(y), z_(z) {
    if (std::abs(std::sqrt(x * x + y * y + z * z) - Scalar(1)) > tol)
      throw NotUnit("bloch vector must have unit length");
  }

  Scalar x() const { return x_; }
  Scalar y() const { return y_; }
  Scalar z() const { return z_; }

  Scalar dot(const BlochVector& other) const {
    return x_ * other.x_ + y_ * other.y_ + z_ * other.z_;
  }

 private:
  Scalar x_, y_, z_;
};

using BlochVectord = BlochVector<double>;

/// Sphere image of a dim-2 point: for canonical (a, b),
/// (2Re(ā·b), 2Im(ā·b), |a|² - |b|²). The ray of (1, 0) maps to the north pole.
template <typename Scalar>
BlochVector<Scalar> bloch_vector(const ProjectivePoint<Scalar>& p) {
  if (p.dim() != 2)
    throw DimensionMismatch("bloch vector is defined for dimension 2 only");
  const Complex<Scalar> a = p.canonical()[0];
  const Complex<Scalar> b = p.canonical()[1];
  const Complex<Scalar> cross = std::conj(a) * b;
  return BlochVector<Scalar>(Scalar(2) * cross.real(), Scalar(2) * cross.imag(),
                             std::norm(a) - std::norm(b));
}

/// Inverse sphere map: (cos(θ/2), e^{iφ} sin(θ/2)) with polar angle θ and
/// azimuth φ measured from +x.
template <typename Scalar>
ProjectivePoint<Scalar> from_bloch(const BlochVector<Scalar>& b) {
  const Scalar theta = std::acos(std::clamp(b.z(), Scalar(-1), Scalar(1)));
  const Scalar phi = std::atan2(b.y(), b.x());
  StateVector<Scalar> v(2);
  v[0] = Complex<Scalar>(std::cos(theta / Scalar(2)));
  v[1] = std::polar(std::sin(theta / Scalar(2)), phi);
  return ProjectivePoint<Scalar>(std::move(v));
}

template <typename Scalar = double>
struct SpinOperators {
  HermitianOperator<Scalar> x, y, z;
};

using SpinOperatorsd = SpinOperators<double>;

/// s = (hbar/2)·σ, the spin-1/2 observables.
template <typename Scalar = double>
SpinOperators<Scalar> spin_operators(Scalar hbar = Scalar(1)) {
  if (!(hbar > Scalar(0))) throw Error("hbar must be positive");
  const Scalar half = hbar / Scalar(2);
  return {HermitianOperator<Scalar>(half * pauli_x<Scalar>()),
          HermitianOperator<Scalar>(half * pauli_y<Scalar>()),
          HermitianOperator<Scalar>(half * pauli_z<Scalar>())};
}

}  // namespace projqm
