#include "dqd/core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace dqd {

namespace {

// Radicands below this are treated as degenerate: the analytic normalizers
// 1/sqrt(2(N^2+B^2)) would overflow long before the values become meaningful.
constexpr double radicand_floor = 1e-300;

constexpr double realness_tol = 1e-14;

void check_real(const Matrix4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(m(i, j).imag()) > realness_tol)
                throw NotAState("thermal-state matrix has a non-negligible imaginary part");
}

} // namespace

void ModelParams::check() const {
    if (!(temperature > 0))
        throw InvalidParameter("temperature must be > 0");
    if (!(coulomb >= 0) || !std::isfinite(coulomb))
        throw InvalidParameter("coulomb must be finite and >= 0");
    if (!std::isfinite(omega1) || !std::isfinite(omega2))
        throw InvalidParameter("tunneling amplitudes must be finite");
}

Matrix4d build_hamiltonian(const ModelParams& p) {
    p.check();
    Matrix4d h;
    const double o1 = p.omega1, o2 = p.omega2, v = p.coulomb;
    h << v,  o2, o1, 0,
         o2, -v, 0,  o1,
         o1, 0,  -v, o2,
         0,  o1, o2, v;
    return h;
}

Spectrum spectrum(const ModelParams& p) {
    p.check();
    Spectrum sp;
    sp.n_minus = p.omega1 - p.omega2;
    sp.n_plus = p.omega1 + p.omega2;
    const double e_minus = std::hypot(sp.n_minus, p.coulomb);
    const double e_plus = std::hypot(sp.n_plus, p.coulomb);
    sp.b_minus = p.coulomb + e_minus;
    sp.b_plus = p.coulomb + e_plus;
    const double rad_minus = sp.n_minus * sp.n_minus + sp.b_minus * sp.b_minus;
    const double rad_plus = sp.n_plus * sp.n_plus + sp.b_plus * sp.b_plus;
    if (rad_minus < radicand_floor || rad_plus < radicand_floor) {
        std::ostringstream os;
        os << "analytic normalizer undefined (omega1=" << p.omega1 << ", omega2=" << p.omega2
           << ", coulomb=" << p.coulomb << "); use the numeric path";
        throw DegenerateNormalizer(os.str());
    }
    sp.delta_minus = 1.0 / std::sqrt(2.0 * rad_minus);
    sp.delta_plus = 1.0 / std::sqrt(2.0 * rad_plus);
    sp.e = {e_minus, -e_minus, e_plus, -e_plus};
    return sp;
}

std::array<Vector4, 4> eigenvectors(const ModelParams& p) {
    const Spectrum sp = spectrum(p);
    const double bm = sp.b_minus, nm = sp.n_minus, dm = sp.delta_minus;
    const double bp = sp.b_plus, np = sp.n_plus, dp = sp.delta_plus;
    std::array<Vector4, 4> phi;
    phi[0] = dm * Vector4(-bm, nm, -nm, bm);
    phi[1] = dm * Vector4(-nm, -bm, bm, nm);
    phi[2] = dp * Vector4(bp, np, np, bp);
    phi[3] = dp * Vector4(np, -bp, -bp, np);
    return phi;
}

Matrix4 ThermalElements::to_matrix() const {
    Matrix4 m;
    m << e11, e12, e13, e14,
         e12, e22, e23, e13,
         e13, e23, e22, e12,
         e14, e13, e12, e11;
    return m;
}

void ThermalElements::check() const {
    if (std::abs(2.0 * (e11 + e22) - 1.0) > 1e-12)
        throw NotAState("structured elements do not carry unit trace");
    if (e11 < 0 || e22 < 0)
        throw NotAState("structured elements carry negative populations");
}

ThermalElements elements_from_matrix(const Matrix4& m, double tol) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(m(i, j).imag()) > tol)
                throw NotAState("matrix is not real; no structured layout");
    ThermalElements e;
    e.e11 = m(0, 0).real();
    e.e22 = m(1, 1).real();
    e.e12 = m(0, 1).real();
    e.e13 = m(0, 2).real();
    e.e14 = m(0, 3).real();
    e.e23 = m(1, 2).real();
    const double gap = (m - e.to_matrix()).cwiseAbs().maxCoeff();
    if (gap > tol) {
        std::ostringstream os;
        os << "matrix deviates from the structured layout by " << gap;
        throw NotAState(os.str());
    }
    return e;
}

std::array<double, 4> boltzmann_weights(const std::array<double, 4>& energies, double beta) {
    if (!std::isfinite(beta) || beta < 0)
        throw OverflowError("inverse temperature is not a finite non-negative number");
    double e_min = energies[0];
    for (double e : energies) e_min = std::min(e_min, e);
    std::array<double, 4> w{};
    double z = 0;
    for (int i = 0; i < 4; ++i) {
        const double x = beta * (energies[i] - e_min);
        if (!std::isfinite(x))
            throw OverflowError("Boltzmann exponent not representable after max-shift");
        w[i] = std::exp(-x);
        z += w[i];
    }
    for (double& wi : w) wi /= z;
    return w;
}

ThermalElements thermal_elements(const ModelParams& p) {
    const Spectrum sp = spectrum(p);
    const auto w = boltzmann_weights(sp.e, p.beta());
    const double dm2 = sp.delta_minus * sp.delta_minus;
    const double dp2 = sp.delta_plus * sp.delta_plus;
    const double bm = sp.b_minus, nm = sp.n_minus;
    const double bp = sp.b_plus, np = sp.n_plus;
    ThermalElements e;
    e.e11 = dm2 * (bm * bm * w[0] + nm * nm * w[1]) + dp2 * (bp * bp * w[2] + np * np * w[3]);
    e.e22 = dm2 * (nm * nm * w[0] + bm * bm * w[1]) + dp2 * (np * np * w[2] + bp * bp * w[3]);
    e.e12 = bm * nm * dm2 * (-w[0] + w[1]) + bp * np * dp2 * (w[2] - w[3]);
    e.e13 = bm * nm * dm2 * (w[0] - w[1]) + bp * np * dp2 * (w[2] - w[3]);
    e.e14 = -dm2 * (bm * bm * w[0] + nm * nm * w[1]) + dp2 * (bp * bp * w[2] + np * np * w[3]);
    e.e23 = -dm2 * (nm * nm * w[0] + bm * bm * w[1]) + dp2 * (np * np * w[2] + bp * bp * w[3]);
    return e;
}

DensityMatrix thermal_state_numeric(const ModelParams& p) {
    const Matrix4d h = build_hamiltonian(p);
    Eigen::SelfAdjointEigenSolver<Matrix4d> es(h);
    if (es.info() != Eigen::Success)
        throw NotAState("eigendecomposition of the Hamiltonian failed");
    std::array<double, 4> energies{};
    for (int i = 0; i < 4; ++i) energies[i] = es.eigenvalues()(i);
    const auto w = boltzmann_weights(energies, p.beta());
    Matrix4d rho = Matrix4d::Zero();
    for (int i = 0; i < 4; ++i) {
        const Eigen::Vector4d v = es.eigenvectors().col(i);
        rho += w[i] * v * v.transpose();
    }
    DensityMatrix out{rho.cast<Complex>()};
    check_real(out.mat);
    return out;
}

DensityMatrix thermal_state(const ModelParams& p) {
    try {
        DensityMatrix out{thermal_elements(p).to_matrix()};
        check_real(out.mat);
        return out;
    } catch (const DegenerateNormalizer&) {
        return thermal_state_numeric(p);
    }
}

ThermalElements thermal_elements_any(const ModelParams& p) {
    try {
        return thermal_elements(p);
    } catch (const DegenerateNormalizer&) {
        return elements_from_matrix(thermal_state_numeric(p).mat, 1e-9);
    }
}

} // namespace dqd
