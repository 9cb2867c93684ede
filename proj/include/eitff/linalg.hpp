#pragma once

#include <complex>

#include <Eigen/Dense>

namespace eitff {

using cd = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Field { Real, Complex };

inline const char* field_tag(Field f) { return f == Field::Real ? "R" : "C"; }

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// max |A* A - I|.
template <typename Derived>
double isometry_defect(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    M g = a.adjoint() * a;
    g -= M::Identity(g.rows(), g.cols());
    return max_abs(g);
}

/// Largest imaginary part, used to decide whether a complex matrix is real.
inline double imaginary_size(const ComplexMatrix& m) { return max_abs(m.imag()); }

} // namespace eitff
