// helpers.hpp - fixed-seed random factories and comparison utilities shared
// by the unit and acceptance suites.
#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "projqm/projqm.hpp"

namespace testutil {

using namespace projqm;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::complex<double> random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

inline StateVectord random_state(std::mt19937_64& rng, Eigen::Index n) {
  StateVectord v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = random_complex(rng);
  if (!(v.cwiseAbs().maxCoeff() > 1e-6)) return random_state(rng, n);
  return v;
}

// States with every component bounded away from zero, so that all charts are
// admissible and coordinate ratios stay well conditioned.
inline StateVectord random_state_all_charts(std::mt19937_64& rng, Eigen::Index n) {
  while (true) {
    StateVectord v = random_state(rng, n);
    if (v.cwiseAbs().minCoeff() >= 1e-3) return v;
  }
}

inline std::complex<double> random_nonzero_scalar(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.25, 4.0);
  std::uniform_real_distribution<double> ang(-3.141592653589793, 3.141592653589793);
  const double m = mag(rng);
  const double a = ang(rng);
  return std::polar(m, a);
}

inline ComplexMatrixd random_matrix(std::mt19937_64& rng, Eigen::Index n) {
  ComplexMatrixd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = random_complex(rng);
  return m;
}

inline ComplexMatrixd random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  const ComplexMatrixd m = random_matrix(rng, n);
  return ((m + m.adjoint()) / 2.0).eval();
}

// Entries uniform in [-1,1]^2 keep the spectrum bounded, which keeps
// finite-difference truncation far below the flow tolerance.
inline ComplexMatrixd random_hermitian_uniform(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrixd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = u(rng);
      const double im = u(rng);
      m(r, c) = {re, im};
    }
  return ((m + m.adjoint()) / 2.0).eval();
}

inline ComplexMatrixd random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::HouseholderQR<ComplexMatrixd> qr(random_matrix(rng, n));
  ComplexMatrixd q = qr.householderQ();
  // fix column phases from the R diagonal for a well-spread ensemble
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> r = qr.matrixQR()(i, i);
    if (std::abs(r) > 0) q.col(i) *= r / std::abs(r);
  }
  return q;
}

inline SpecialUnitaryd random_special_unitary(std::mt19937_64& rng, Eigen::Index n) {
  ComplexMatrixd q = random_unitary(rng, n);
  q *= std::pow(q.determinant(), -1.0 / static_cast<double>(n));
  return SpecialUnitaryd(q);
}

// Integer spectrum in [-2,2] conjugated by a random unitary: eigenvalue
// repetitions (and kernels) occur by construction.
inline ComplexMatrixd random_degenerate_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_int_distribution<int> value(-2, 2);
  while (true) {
    RealVectord evals(n);
    for (Eigen::Index i = 0; i < n; ++i) evals[i] = value(rng);
    if (evals.cwiseAbs().maxCoeff() == 0) continue;
    const ComplexMatrixd u = random_unitary(rng, n);
    return (u * evals.cast<std::complex<double>>().asDiagonal() * u.adjoint()).eval();
  }
}

inline double max_abs_diff(const ComplexMatrixd& a, const ComplexMatrixd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const StateVectord& a, const StateVectord& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil
