// projective.hpp - rays of a finite-dimensional state space as points of a
// complex projective space: canonical representatives, charts, superposition.
#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace projqm {

namespace detail {

// Rotate v by a global phase so its first component of modulus > zero_tol
// becomes real positive. That component is assigned exactly, so repeated
// application is a no-op.
template <typename Scalar>
void fix_leading_phase(Eigen::Ref<StateVector<Scalar>> v, Scalar zero_tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Scalar mag = std::abs(v[i]);
    if (mag > zero_tol) {
      v *= std::conj(v[i]) / mag;
      v[i] = Complex<Scalar>(mag, Scalar(0));
      return;
    }
  }
}

}  // namespace detail

/// A point of CP^n held as its canonical representative: unit Euclidean norm,
/// first amplitude of modulus > zero_tol real positive. Two representatives of
/// one ray canonicalize to the same vector, so rays compare component-wise.
template <typename Scalar = double>
class ProjectivePoint {
 public:
  explicit ProjectivePoint(StateVector<Scalar> representative,
                           Scalar zero_tol = Scalar(kZeroTolerance))
      : canonical_(std::move(representative)) {
    if (canonical_.size() < 2)
      throw DimensionMismatch("projective point needs at least two amplitudes");
    if (!(canonical_.cwiseAbs().maxCoeff() > zero_tol))
      throw AllZero("every amplitude is within the zero tolerance");
    canonical_ /= canonical_.norm();
    detail::fix_leading_phase<Scalar>(canonical_, zero_tol);
  }

  const StateVector<Scalar>& canonical() const { return canonical_; }

  /// Number of homogeneous amplitudes, n+1 for a point of CP^n.
  Eigen::Index dim() const { return canonical_.size(); }

 private:
  StateVector<Scalar> canonical_;
};

using ProjectivePointd = ProjectivePoint<double>;

/// Map a representative to the point of projective space it spans.
template <typename Derived>
auto canonicalize(const Eigen::MatrixBase<Derived>& v) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return ProjectivePoint<Real>(v);
}

/// ⟨w|v⟩ = Σ_k conj(w_k)·v_k, conjugate-linear in w.
template <typename DerivedV, typename DerivedW>
auto inner_product(const Eigen::MatrixBase<DerivedV>& v,
                   const Eigen::MatrixBase<DerivedW>& w) {
  if (v.size() != w.size())
    throw DimensionMismatch("inner product needs vectors of equal dimension");
  return w.dot(v);
}

/// |⟨q|p⟩|² on canonical representatives: 1 for equal rays, 0 for orthogonal.
template <typename Scalar>
Scalar fidelity(const ProjectivePoint<Scalar>& p, const ProjectivePoint<Scalar>& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("fidelity needs points of equal dimension");
  const Scalar overlap = std::norm(inner_product(p.canonical(), q.canonical()));
  return std::min(overlap, Scalar(1));
}

/// Same ray test, decided as 1 - fidelity ≤ tol.
template <typename Scalar>
bool projectively_equal(const ProjectivePoint<Scalar>& p, const ProjectivePoint<Scalar>& q,
                        Scalar tol = Scalar(kNormTolerance)) {
  return Scalar(1) - fidelity(p, q) <= tol;
}

/// Point spanned by Σ_i coeffs_i · vectors_i. Defined on representatives, not
/// points: relative phases of the inputs matter.
template <typename Scalar>
ProjectivePoint<Scalar> superpose(const std::vector<Complex<Scalar>>& coeffs,
                                  const std::vector<StateVector<Scalar>>& vectors,
                                  Scalar zero_tol = Scalar(kZeroTolerance)) {
  if (coeffs.empty() || coeffs.size() != vectors.size())
    throw DimensionMismatch("superpose needs matching nonempty coefficient and vector lists");
  const Eigen::Index dim = vectors.front().size();
  StateVector<Scalar> sum = StateVector<Scalar>::Zero(dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (vectors[i].size() != dim)
      throw DimensionMismatch("superpose needs vectors of equal dimension");
    sum += coeffs[i] * vectors[i];
  }
  if (!(sum.cwiseAbs().maxCoeff() > zero_tol))
    throw ZeroResult("superposition cancelled to the zero vector");
  return ProjectivePoint<Scalar>(std::move(sum), zero_tol);
}

/// Local coordinates of a projective point in the chart where one homogeneous
/// amplitude (the pivot) is scaled to 1; the pivot itself is omitted.
template <typename Scalar = double>
class ChartCoordinates {
 public:
  ChartCoordinates(Eigen::Index chart_index, StateVector<Scalar> coords)
      : chart_index_(chart_index), coords_(std::move(coords)) {
    if (coords_.size() < 1)
      throw DimensionMismatch("chart coordinates need at least one entry");
    if (chart_index_ < 0 || chart_index_ > coords_.size())
      throw DimensionMismatch("chart index out of range");
  }

  Eigen::Index chart_index() const { return chart_index_; }
  const StateVector<Scalar>& coords() const { return coords_; }
  Eigen::Index dim() const { return coords_.size() + 1; }

 private:
  Eigen::Index chart_index_;
  StateVector<Scalar> coords_;
};

using ChartCoordinatesd = ChartCoordinates<double>;

/// Ratios z^i / z^k of the homogeneous amplitudes, i ≠ k in index order.
template <typename Scalar>
ChartCoordinates<Scalar> to_chart(const ProjectivePoint<Scalar>& p, Eigen::Index k,
                                  Scalar zero_tol = Scalar(kZeroTolerance)) {
  const StateVector<Scalar>& z = p.canonical();
  if (k < 0 || k >= z.size()) throw DimensionMismatch("chart index out of range");
  if (!(std::abs(z[k]) > zero_tol))
    throw ZeroPivot("point lies outside the requested chart");
  StateVector<Scalar> coords(z.size() - 1);
  Eigen::Index out = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i)
    if (i != k) coords[out++] = z[i] / z[k];
  return ChartCoordinates<Scalar>(k, std::move(coords));
}

/// Insert 1 at the pivot index and canonicalize.
template <typename Scalar>
ProjectivePoint<Scalar> from_chart(const ChartCoordinates<Scalar>& c) {
  StateVector<Scalar> z(c.dim());
  Eigen::Index in = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i)
    z[i] = (i == c.chart_index()) ? Complex<Scalar>(1) : c.coords()[in++];
  return ProjectivePoint<Scalar>(std::move(z));
}

/// Re-express local coordinates in the chart with pivot j.
template <typename Scalar>
ChartCoordinates<Scalar> chart_transition(const ChartCoordinates<Scalar>& c, Eigen::Index j) {
  if (j == c.chart_index()) return c;
  return to_chart(from_chart(c), j);
}

/// An orthonormal basis, one state per column; the amplitudes of a fixed
/// abstract state in this basis are its representation.
template <typename Scalar = double>
class RepresentationBasis {
 public:
  explicit RepresentationBasis(ComplexMatrix<Scalar> states,
                               Scalar tol = Scalar(kNormTolerance))
      : states_(std::move(states)) {
    if (states_.rows() < 2 || states_.rows() != states_.cols())
      throw DimensionMismatch("representation basis must be square with dimension >= 2");
    const ComplexMatrix<Scalar> gram = states_.adjoint() * states_;
    const Scalar defect =
        (gram - ComplexMatrix<Scalar>::Identity(states_.rows(), states_.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (defect > tol) throw NotUnitary("basis states are not orthonormal");
  }

  static RepresentationBasis identity(Eigen::Index dim) {
    return RepresentationBasis(ComplexMatrix<Scalar>::Identity(dim, dim));
  }

  const ComplexMatrix<Scalar>& matrix() const { return states_; }
  Eigen::Index dim() const { return states_.rows(); }

 private:
  ComplexMatrix<Scalar> states_;
};

using RepresentationBasisd = RepresentationBasis<double>;

/// Amplitudes of the same abstract state after switching eigenbases:
/// to_b† · from_b · v. Round trips invert and inner products are preserved.
template <typename Scalar>
StateVector<Scalar> change_representation(const StateVector<Scalar>& v,
                                          const RepresentationBasis<Scalar>& from_b,
                                          const RepresentationBasis<Scalar>& to_b) {
  if (v.size() != from_b.dim() || from_b.dim() != to_b.dim())
    throw DimensionMismatch("representation change needs matching dimensions");
  return to_b.matrix().adjoint() * (from_b.matrix() * v);
}

}  // namespace projqm
