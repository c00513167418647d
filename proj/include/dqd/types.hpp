// types.hpp — matrix aliases, Pauli operators, and the density-matrix value type

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

#include "dqd/errors.hpp"

namespace dqd {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Matrix4d = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;
using Vector4c = Eigen::Vector4cd;

inline Matrix2 pauli_id() { return Matrix2::Identity(); }

inline Matrix2 pauli_x() {
    Matrix2 m;
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix2 pauli_y() {
    Matrix2 m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Matrix2 pauli_z() {
    Matrix2 m;
    m << 1, 0, 0, -1;
    return m;
}

// Pauli by index: 0 -> I, 1 -> x, 2 -> y, 3 -> z.
Matrix2 pauli(int i);

Matrix4 kron(const Matrix2& a, const Matrix2& b);

// Two-qubit state in the computational basis {|00>, |01>, |10>, |11>}.
// Hermitian, unit trace, positive semidefinite within the stated tolerances.
struct DensityMatrix {
    Matrix4 mat = Matrix4::Zero();

    static constexpr double herm_tol = 1e-12;
    static constexpr double trace_tol = 1e-12;
    static constexpr double psd_tol = 1e-10;

    double herm_defect() const;
    double trace_defect() const;
    double min_eigenvalue() const;

    // Throws NotAState when any invariant is violated beyond tolerance.
    void check() const;
};

DensityMatrix maximally_mixed();
DensityMatrix bell_phi_plus();
DensityMatrix pure_state(const Vector4c& amplitudes);

// Sum of |entry| over all 12 off-diagonal slots.
double l1_off_diagonal(const Matrix4& m);

// Square roots of the eigenvalues of R = m (y(x)y) m* (y(x)y), descending.
// PSD input goes through the Hermitian similar matrix for full precision;
// eigenvalues in [-neg_tol, 0) are clamped there and worse ones throw.
// Non-PSD input (table matrices) is evaluated mechanically with clamping.
std::array<double, 4> wootters_sqrt_eigenvalues(const Matrix4& m, double neg_tol = 1e-10);

// max{0, sqrt(v1)-sqrt(v2)-sqrt(v3)-sqrt(v4)} over those eigenvalues,
// without state validation.
double wootters_combination(const Matrix4& m, double neg_tol = 1e-10);

} // namespace dqd
