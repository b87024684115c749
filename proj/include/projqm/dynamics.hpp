// dynamics.hpp - unitary time evolution in both pictures and the
// expectation-flow form of the commutator bracket.
#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "operators.hpp"
#include "projective.hpp"

namespace projqm {

/// A Hamiltonian together with the action scale; the generator of evolution.
template <typename Scalar = double>
class HamiltonianSystem {
 public:
  explicit HamiltonianSystem(HermitianOperator<Scalar> hamiltonian,
                             Scalar hbar = Scalar(1))
      : hamiltonian_(std::move(hamiltonian)), hbar_(hbar) {
    if (!(hbar_ > Scalar(0))) throw Error("hbar must be positive");
  }

  const HermitianOperator<Scalar>& hamiltonian() const { return hamiltonian_; }
  Scalar hbar() const { return hbar_; }
  Eigen::Index dim() const { return hamiltonian_.dim(); }

 private:
  HermitianOperator<Scalar> hamiltonian_;
  Scalar hbar_;
};

using HamiltonianSystemd = HamiltonianSystem<double>;

namespace detail {

// Eigendecomposition of H reused across evaluation times; applies
// exp(-iHt/hbar) exactly instead of stepping the equation of motion.
template <typename Scalar>
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const HamiltonianSystem<Scalar>& sys) : hbar_(sys.hbar()) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(
        sys.hamiltonian().matrix());
    if (solver.info() != Eigen::Success)
      throw Error("eigendecomposition did not converge");
    vectors_ = solver.eigenvectors();
    values_ = solver.eigenvalues();
  }

  StateVector<Scalar> evolve(const StateVector<Scalar>& v, Scalar t) const {
    return vectors_ * (phases(t).asDiagonal() * (vectors_.adjoint() * v));
  }

  ComplexMatrix<Scalar> evolution_operator(Scalar t) const {
    return vectors_ * phases(t).asDiagonal() * vectors_.adjoint();
  }

 private:
  StateVector<Scalar> phases(Scalar t) const {
    return ((Complex<Scalar>(0, -1) * t / hbar_) *
            values_.template cast<Complex<Scalar>>().array())
        .exp()
        .matrix();
  }

  ComplexMatrix<Scalar> vectors_;
  RealVector<Scalar> values_;
  Scalar hbar_;
};

template <typename Scalar>
StateVector<Scalar> normalized_or_throw(const StateVector<Scalar>& v) {
  if (!(v.cwiseAbs().maxCoeff() > Scalar(kZeroTolerance)))
    throw AllZero("state has no amplitude above the zero tolerance");
  return v / v.norm();
}

}  // namespace detail

/// exp(-iHt/hbar)·v0 with v0 normalized on entry.
template <typename Scalar>
StateVector<Scalar> evolve_state(const HamiltonianSystem<Scalar>& sys,
                                 const StateVector<Scalar>& v0, Scalar t) {
  if (v0.size() != sys.dim())
    throw DimensionMismatch("state and Hamiltonian dimensions differ");
  return detail::SpectralPropagator<Scalar>(sys).evolve(detail::normalized_or_throw(v0), t);
}

/// Components da^i/dt = (1/i·hbar) Σ_j H_ij a^j of the evolution vector field
/// at amplitude tuple v.
template <typename Scalar>
StateVector<Scalar> tangent_vector(const HamiltonianSystem<Scalar>& sys,
                                   const StateVector<Scalar>& v) {
  if (v.size() != sys.dim())
    throw DimensionMismatch("state and Hamiltonian dimensions differ");
  return (Complex<Scalar>(0, -1) / sys.hbar()) * (sys.hamiltonian().matrix() * v);
}

/// (L·H - H·L)/(i·hbar), the rate of change of L in the Heisenberg picture.
template <typename Scalar>
HermitianOperator<Scalar> heisenberg_rhs(const HermitianOperator<Scalar>& l,
                                         const HamiltonianSystem<Scalar>& sys) {
  if (l.dim() != sys.dim())
    throw DimensionMismatch("observable and Hamiltonian dimensions differ");
  const ComplexMatrix<Scalar>& h = sys.hamiltonian().matrix();
  ComplexMatrix<Scalar> bracket = (Complex<Scalar>(0, -1) / sys.hbar()) *
                                  (l.matrix() * h - h * l.matrix());
  return HermitianOperator<Scalar>(std::move(bracket));
}

/// U(t)†·L·U(t) with U(t) = exp(-iHt/hbar).
template <typename Scalar>
HermitianOperator<Scalar> evolve_operator_heisenberg(const HamiltonianSystem<Scalar>& sys,
                                                     const HermitianOperator<Scalar>& l,
                                                     Scalar t) {
  if (l.dim() != sys.dim())
    throw DimensionMismatch("observable and Hamiltonian dimensions differ");
  const ComplexMatrix<Scalar> u = detail::SpectralPropagator<Scalar>(sys).evolution_operator(t);
  return HermitianOperator<Scalar>(u.adjoint() * l.matrix() * u);
}

/// ⟨v|L|v⟩ / ⟨v|v⟩; invariant under rescaling of v.
template <typename Scalar>
Scalar expectation(const HermitianOperator<Scalar>& l, const StateVector<Scalar>& v) {
  if (l.dim() != v.size())
    throw DimensionMismatch("observable and state dimensions differ");
  const Scalar nrm2 = v.squaredNorm();
  if (!(nrm2 > Scalar(0)))
    throw AllZero("expectation of the zero vector is undefined");
  return v.dot(l.matrix() * v).real() / nrm2;
}

/// |d/dt ⟨L⟩ψ(t) (central difference, step h) - ⟨(1/i·hbar)[L,H]⟩ψ(t)|.
/// Small residuals witness that the commutator bracket generates the
/// expectation flow.
template <typename Scalar>
Scalar poisson_flow_residual(const HamiltonianSystem<Scalar>& sys,
                             const HermitianOperator<Scalar>& l,
                             const StateVector<Scalar>& v0, Scalar t,
                             Scalar h = Scalar(1e-5)) {
  if (l.dim() != sys.dim())
    throw DimensionMismatch("observable and Hamiltonian dimensions differ");
  if (!(h > Scalar(0))) throw Error("finite-difference step must be positive");
  const detail::SpectralPropagator<Scalar> propagator(sys);
  const StateVector<Scalar> v = detail::normalized_or_throw(v0);
  const Scalar ahead = expectation(l, propagator.evolve(v, t + h));
  const Scalar behind = expectation(l, propagator.evolve(v, t - h));
  const Scalar derivative = (ahead - behind) / (Scalar(2) * h);
  const Scalar flow = expectation(heisenberg_rhs(l, sys), propagator.evolve(v, t));
  return std::abs(derivative - flow);
}

template <typename Scalar = double>
struct Trajectory {
  RealVector<Scalar> times;
  std::vector<StateVector<Scalar>> states;
  std::vector<ProjectivePoint<Scalar>> points;
  std::vector<std::pair<std::string, RealVector<Scalar>>> expectations;
};

using Trajectoryd = Trajectory<double>;

/// Evolve v0 across a strictly ascending time grid, recording amplitudes, the
/// underlying projective points, and expectation series per named observable.
template <typename Scalar>
Trajectory<Scalar> sample_trajectory(
    const HamiltonianSystem<Scalar>& sys, const StateVector<Scalar>& v0,
    const RealVector<Scalar>& times,
    const std::vector<std::pair<std::string, HermitianOperator<Scalar>>>& observables) {
  if (v0.size() != sys.dim())
    throw DimensionMismatch("state and Hamiltonian dimensions differ");
  for (const auto& [name, op] : observables)
    if (op.dim() != sys.dim())
      throw DimensionMismatch("observable '" + name + "' dimension differs");
  if (times.size() < 1) throw Error("time grid must be nonempty");
  for (Eigen::Index i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw Error("time grid must be strictly ascending");

  const detail::SpectralPropagator<Scalar> propagator(sys);
  const StateVector<Scalar> v = detail::normalized_or_throw(v0);

  Trajectory<Scalar> out;
  out.times = times;
  out.states.reserve(static_cast<std::size_t>(times.size()));
  out.points.reserve(static_cast<std::size_t>(times.size()));
  for (const auto& [name, op] : observables)
    out.expectations.emplace_back(name, RealVector<Scalar>(times.size()));
  for (Eigen::Index i = 0; i < times.size(); ++i) {
    StateVector<Scalar> state = propagator.evolve(v, times[i]);
    out.points.emplace_back(state);
    for (std::size_t j = 0; j < observables.size(); ++j)
      out.expectations[j].second[i] = expectation(observables[j].second, state);
    out.states.push_back(std::move(state));
  }
  return out;
}

}  // namespace projqm
