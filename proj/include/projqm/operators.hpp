// operators.hpp - Hermitian observables acting on projective points, the
// special unitary action with a constructive transitivity witness, and the
// generalized Gell-Mann generator decomposition.
#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "projective.hpp"

namespace projqm {

template <typename Scalar = double>
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix<Scalar> matrix,
                             Scalar tol = Scalar(kNormTolerance))
      : matrix_(std::move(matrix)) {
    if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols())
      throw DimensionMismatch("operator matrix must be square");
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol)
      throw NotHermitian("matrix is not Hermitian within tolerance");
  }

  const ComplexMatrix<Scalar>& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix<Scalar> matrix_;
};

using HermitianOperatord = HermitianOperator<double>;

template <typename Scalar = double>
class SpecialUnitary {
 public:
  explicit SpecialUnitary(ComplexMatrix<Scalar> matrix,
                          Scalar tol = Scalar(kNormTolerance))
      : matrix_(std::move(matrix)) {
    if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols())
      throw DimensionMismatch("group element must be square");
    const Eigen::Index d = matrix_.rows();
    if ((matrix_.adjoint() * matrix_ - ComplexMatrix<Scalar>::Identity(d, d))
            .cwiseAbs()
            .maxCoeff() > tol)
      throw NotUnitary("matrix is not unitary within tolerance");
    if (std::abs(matrix_.determinant() - Complex<Scalar>(1)) > tol)
      throw NotSpecialUnitary("determinant is not 1 within tolerance");
  }

  const ComplexMatrix<Scalar>& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix<Scalar> matrix_;
};

using SpecialUnitaryd = SpecialUnitary<double>;

template <typename Scalar>
struct Eigensystem {
  RealVector<Scalar> eigenvalues;  // ascending
  RepresentationBasis<Scalar> eigenbasis;
};

using Eigensystemd = Eigensystem<double>;

/// Spectral decomposition A = V diag(λ) V†, eigenvalues ascending, each
/// eigenvector's first significant component made real positive.
template <typename Scalar>
Eigensystem<Scalar> eigensystem(const HermitianOperator<Scalar>& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(a.matrix());
  if (solver.info() != Eigen::Success)
    throw Error("eigendecomposition did not converge");
  ComplexMatrix<Scalar> vectors = solver.eigenvectors();
  for (Eigen::Index k = 0; k < vectors.cols(); ++k)
    detail::fix_leading_phase<Scalar>(vectors.col(k), Scalar(kZeroTolerance));
  return {solver.eigenvalues(), RepresentationBasis<Scalar>(std::move(vectors))};
}

/// The induced map on projective space, canonicalize(A · p). Undefined when p
/// lies in the kernel of A.
template <typename Scalar>
ProjectivePoint<Scalar> apply_operator(const HermitianOperator<Scalar>& a,
                                       const ProjectivePoint<Scalar>& p,
                                       Scalar zero_tol = Scalar(kZeroTolerance)) {
  if (a.dim() != p.dim())
    throw DimensionMismatch("operator and point dimensions differ");
  StateVector<Scalar> image = a.matrix() * p.canonical();
  if (!(image.cwiseAbs().maxCoeff() > zero_tol))
    throw KernelState("operator annihilates the state");
  return ProjectivePoint<Scalar>(std::move(image), zero_tol);
}

/// p ↦ g·p. Unitary, so the image always exists and fidelities are preserved.
template <typename Scalar>
ProjectivePoint<Scalar> group_act(const SpecialUnitary<Scalar>& g,
                                  const ProjectivePoint<Scalar>& p) {
  if (g.dim() != p.dim())
    throw DimensionMismatch("group element and point dimensions differ");
  return ProjectivePoint<Scalar>(g.matrix() * p.canonical());
}

namespace detail {

// Unitary whose first column is the given unit vector, by Householder QR.
template <typename Scalar>
ComplexMatrix<Scalar> unitary_completion(const StateVector<Scalar>& v) {
  Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(v);
  ComplexMatrix<Scalar> q = qr.householderQ();
  const Complex<Scalar> r = qr.matrixQR()(0, 0);
  if (!(std::abs(r) > Scalar(kZeroTolerance)))
    throw AllZero("cannot complete a zero vector to a unitary");
  q.col(0) *= r / std::abs(r);
  return q;
}

}  // namespace detail

/// A group element carrying p to q: complete both canonical representatives
/// to unitaries, form U_q·U_p†, and divide out the principal (n+1)-th root of
/// the determinant. Witnesses that the action is transitive.
template <typename Scalar>
SpecialUnitary<Scalar> transitive_element(const ProjectivePoint<Scalar>& p,
                                          const ProjectivePoint<Scalar>& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("transitive element needs points of equal dimension");
  ComplexMatrix<Scalar> u = detail::unitary_completion(q.canonical()) *
                            detail::unitary_completion(p.canonical()).adjoint();
  const Complex<Scalar> det = u.determinant();
  u *= std::pow(det, Scalar(-1) / Scalar(p.dim()));
  return SpecialUnitary<Scalar>(std::move(u));
}

/// Generalized Gell-Mann basis of d×d Hermitian matrices: the normalized
/// identity √(2/d)·I, then d(d-1)/2 symmetric, d(d-1)/2 antisymmetric and
/// d-1 diagonal traceless generators, all with Tr(G_i G_j) = 2δ_ij. The d=2
/// traceless elements are exactly the Pauli matrices.
template <typename Scalar = double>
class GeneratorBasis {
 public:
  explicit GeneratorBasis(Eigen::Index matrix_dim) : dim_(matrix_dim) {
    if (dim_ < 2) throw DimensionMismatch("generator basis needs dimension >= 2");
    const Eigen::Index d = dim_;
    elements_.reserve(static_cast<std::size_t>(d * d));
    labels_.reserve(static_cast<std::size_t>(d * d));

    push(std::sqrt(Scalar(2) / Scalar(d)) * ComplexMatrix<Scalar>::Identity(d, d),
         "identity");
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = j + 1; k < d; ++k) {
        ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(d, d);
        m(j, k) = Complex<Scalar>(1);
        m(k, j) = Complex<Scalar>(1);
        push(std::move(m), "sym(" + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = j + 1; k < d; ++k) {
        ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(d, d);
        m(j, k) = Complex<Scalar>(0, -1);
        m(k, j) = Complex<Scalar>(0, 1);
        push(std::move(m), "antisym(" + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    for (Eigen::Index l = 1; l < d; ++l) {
      ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(d, d);
      const Scalar scale = std::sqrt(Scalar(2) / Scalar(l * (l + 1)));
      for (Eigen::Index i = 0; i < l; ++i) m(i, i) = scale;
      m(l, l) = -Scalar(l) * scale;
      push(std::move(m), "diag(" + std::to_string(l) + ")");
    }
  }

  Eigen::Index matrix_dim() const { return dim_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(elements_.size()); }
  const std::vector<ComplexMatrix<Scalar>>& elements() const { return elements_; }
  const std::string& label(Eigen::Index i) const { return labels_.at(static_cast<std::size_t>(i)); }

 private:
  void push(ComplexMatrix<Scalar> m, std::string label) {
    elements_.push_back(std::move(m));
    labels_.push_back(std::move(label));
  }

  Eigen::Index dim_;
  std::vector<ComplexMatrix<Scalar>> elements_;
  std::vector<std::string> labels_;
};

using GeneratorBasisd = GeneratorBasis<double>;

template <typename Scalar = double>
GeneratorBasis<Scalar> generator_basis(Eigen::Index d) {
  return GeneratorBasis<Scalar>(d);
}

/// Coefficients c_i = Tr(A·G_i)/2, so that Σ c_i G_i = A.
template <typename Scalar>
RealVector<Scalar> traceless_decompose(const HermitianOperator<Scalar>& a,
                                       const GeneratorBasis<Scalar>& basis) {
  if (a.dim() != basis.matrix_dim())
    throw DimensionMismatch("operator and generator basis dimensions differ");
  RealVector<Scalar> coeffs(basis.size());
  for (Eigen::Index i = 0; i < basis.size(); ++i)
    coeffs[i] =
        (a.matrix() * basis.elements()[static_cast<std::size_t>(i)]).trace().real() /
        Scalar(2);
  return coeffs;
}

template <typename Scalar>
RealVector<Scalar> traceless_decompose(const HermitianOperator<Scalar>& a) {
  return traceless_decompose(a, GeneratorBasis<Scalar>(a.dim()));
}

/// Σ c_i G_i; inverse of traceless_decompose.
template <typename Scalar>
ComplexMatrix<Scalar> reconstruct(const GeneratorBasis<Scalar>& basis,
                                  const RealVector<Scalar>& coeffs) {
  if (coeffs.size() != basis.size())
    throw DimensionMismatch("coefficient count does not match the basis");
  const Eigen::Index d = basis.matrix_dim();
  ComplexMatrix<Scalar> sum = ComplexMatrix<Scalar>::Zero(d, d);
  for (Eigen::Index i = 0; i < basis.size(); ++i)
    sum += coeffs[i] * basis.elements()[static_cast<std::size_t>(i)];
  return sum;
}

}  // namespace projqm
