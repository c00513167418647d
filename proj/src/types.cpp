#include "dqd/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dqd {

Matrix2 pauli(int i) {
    switch (i) {
    case 0: return pauli_id();
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw InvalidParameter("pauli index must be 0..3");
    }
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

double DensityMatrix::herm_defect() const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_defect() const {
    return std::abs(mat.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (mat + mat.adjoint()));
    return es.eigenvalues().minCoeff();
}

void DensityMatrix::check() const {
    if (!mat.allFinite())
        throw NotAState("density matrix has non-finite entries");
    if (const double h = herm_defect(); h > herm_tol) {
        std::ostringstream os;
        os << "density matrix not Hermitian (defect " << h << ")";
        throw NotAState(os.str());
    }
    if (const double t = trace_defect(); t > trace_tol) {
        std::ostringstream os;
        os << "density matrix trace differs from 1 by " << t;
        throw NotAState(os.str());
    }
    if (const double l = min_eigenvalue(); l < -psd_tol) {
        std::ostringstream os;
        os << "density matrix not PSD (lambda_min " << l << ")";
        throw NotAState(os.str());
    }
}

DensityMatrix maximally_mixed() {
    return DensityMatrix{0.25 * Matrix4::Identity()};
}

DensityMatrix pure_state(const Vector4c& amplitudes) {
    const double n = amplitudes.norm();
    if (!(n > 0) || !std::isfinite(n))
        throw InvalidParameter("state vector must have positive finite norm");
    const Vector4c psi = amplitudes / n;
    return DensityMatrix{psi * psi.adjoint()};
}

DensityMatrix bell_phi_plus() {
    Vector4c psi = Vector4c::Zero();
    psi(0) = 1.0 / std::sqrt(2.0);
    psi(3) = 1.0 / std::sqrt(2.0);
    return pure_state(psi);
}

double l1_off_diagonal(const Matrix4& m) {
    double sum = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) sum += std::abs(m(i, j));
    return sum;
}

std::array<double, 4> wootters_sqrt_eigenvalues(const Matrix4& m, double neg_tol) {
    const Matrix4 yy = kron(pauli_y(), pauli_y());
    const Matrix4 flipped = yy * m.conjugate() * yy;
    const Matrix4 herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4> es_m(herm);
    if (es_m.info() != Eigen::Success)
        throw NotAState("eigendecomposition failed on the input matrix");

    std::array<double, 4> s{};
    const double min_eig = es_m.eigenvalues().minCoeff();
    const double max_eig = es_m.eigenvalues().maxCoeff();
    if (min_eig >= -neg_tol) {
        // PSD input. With m = L L', the sqrt(lambda_i) are exactly the
        // singular values of the complex symmetric B = L^T (y(x)y) L, so no
        // square root of a noisy near-zero eigenvalue ever happens; rank
        // deficiencies (pure states, cold thermal states) give exact zeros
        // instead of sqrt(eps)-sized ghosts.
        Eigen::Vector4d d = es_m.eigenvalues();
        for (int i = 0; i < 4; ++i)
            d(i) = d(i) <= 16.0 * std::numeric_limits<double>::epsilon() * max_eig
                       ? 0.0
                       : std::sqrt(d(i));
        const Matrix4 factor = es_m.eigenvectors() * d.cast<Complex>().asDiagonal();
        const Matrix4 b = factor.transpose() * yy * factor;
        Eigen::JacobiSVD<Matrix4> svd(b);
        for (int i = 0; i < 4; ++i)
            s[i] = svd.singularValues()(i);
    } else {
        // Non-PSD input (published-table route): mechanical evaluation of R
        // itself, negative parts clamped.
        Eigen::ComplexEigenSolver<Matrix4> es(m * flipped);
        if (es.info() != Eigen::Success)
            throw NotAState("eigensolver failed on the R matrix");
        std::array<double, 4> lam{};
        for (int i = 0; i < 4; ++i)
            lam[i] = es.eigenvalues()(i).real();
        std::sort(lam.begin(), lam.end(), std::greater<>());
        for (int i = 0; i < 4; ++i)
            s[i] = std::sqrt(std::max(lam[i], 0.0));
    }
    return s;
}

double wootters_combination(const Matrix4& m, double neg_tol) {
    const auto s = wootters_sqrt_eigenvalues(m, neg_tol);
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

} // namespace dqd
