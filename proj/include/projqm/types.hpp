// types.hpp - shared dense-type aliases and numerical tolerances
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace projqm {

// Default tolerances. kNormTolerance guards orthonormality and round-trip
// checks, kZeroTolerance decides when an amplitude counts as zero.
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kZeroTolerance = 1e-12;

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Amplitude tuple of a state in a chosen basis; one representative of a ray.
template <typename Scalar>
using StateVector = Eigen::Vector<Complex<Scalar>, Eigen::Dynamic>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealVector = Eigen::Vector<Scalar, Eigen::Dynamic>;

using Complexd = Complex<double>;
using StateVectord = StateVector<double>;
using ComplexMatrixd = ComplexMatrix<double>;
using RealVectord = RealVector<double>;

}  // namespace projqm
