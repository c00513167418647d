#include "dqd/channels.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dqd {

void MemoryParams::check() const {
    if (!(tau > 0) || !std::isfinite(tau))
        throw InvalidParameter("memory time tau must be finite and > 0");
    if (!(mu >= 0 && mu <= 1))
        throw InvalidParameter("correlation degree mu must lie in [0, 1]");
    if (!(flip_prob_base >= 0 && flip_prob_base <= 1))
        throw InvalidParameter("flip probability must lie in [0, 1]");
}

double memory_kernel_F(double t, double tau) {
    if (!(t >= 0) || !std::isfinite(t))
        throw InvalidParameter("time must be finite and >= 0");
    if (!(tau > 0) || !std::isfinite(tau))
        throw InvalidParameter("memory time tau must be finite and > 0");
    const double a = 1.0 / (2.0 * tau);
    const double disc = 1.0 - 16.0 * tau * tau; // (4 tau)^2 against 1
    if (std::abs(disc) < 1e-9)
        return std::exp(-a * t) * (1.0 + a * t); // shared limit of both branches
    const double v = std::sqrt(std::abs(disc));
    if (disc < 0) { // 4 tau > 1: oscillatory kernel with memory backflow
        const double x = a * v * t;
        return std::exp(-a * t) * (std::cos(x) + std::sin(x) / v);
    }
    // 4 tau < 1: cosh/sinh branch written with decaying exponentials only,
    // exact since v < 1.
    return 0.5 * (1.0 + 1.0 / v) * std::exp(-a * (1.0 - v) * t) +
           0.5 * (1.0 - 1.0 / v) * std::exp(-a * (1.0 + v) * t);
}

double flip_probability(double t, double tau) {
    return std::clamp(0.5 * (1.0 - memory_kernel_F(t, tau)), 0.0, 1.0);
}

double decoherence_factor(double t, double tau, double mu) {
    if (!(mu >= 0 && mu <= 1))
        throw InvalidParameter("correlation degree mu must lie in [0, 1]");
    const double f = memory_kernel_F(t, tau);
    return (1.0 - mu) * f * f + mu;
}

Matrix4d correlated_pauli_probabilities(double P, double mu) {
    if (!(P >= 0 && P <= 1))
        throw InvalidParameter("flip probability must lie in [0, 1]");
    if (!(mu >= 0 && mu <= 1))
        throw InvalidParameter("correlation degree mu must lie in [0, 1]");
    const double p0 = 1.0 - P;
    Matrix4d m = Matrix4d::Zero();
    m(0, 0) = (1.0 - mu) * p0 * p0 + mu * p0;
    m(0, 3) = (1.0 - mu) * p0 * P;
    m(3, 0) = (1.0 - mu) * P * p0;
    m(3, 3) = (1.0 - mu) * P * P + mu * P;
    return m;
}

double TwoQubitChannel::completeness_defect() const {
    Matrix4 sum = Matrix4::Zero();
    for (const auto& k : kraus_ops)
        sum += k.adjoint() * k;
    return (sum - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

DensityMatrix apply_channel(const DensityMatrix& rho, const TwoQubitChannel& ch) {
    if (const double d = ch.completeness_defect(); d > 1e-12) {
        std::ostringstream os;
        os << "Kraus set '" << ch.label << "' violates completeness by " << d;
        throw NotCptp(os.str());
    }
    Matrix4 out = Matrix4::Zero();
    for (const auto& k : ch.kraus_ops)
        out += k * rho.mat * k.adjoint();
    return DensityMatrix{out};
}

TwoQubitChannel correlated_dephasing_channel(double P, double mu) {
    const Matrix4d w = correlated_pauli_probabilities(P, mu);
    TwoQubitChannel ch;
    std::ostringstream os;
    os << "correlated_dephasing(P=" << P << ", mu=" << mu << ")";
    ch.label = os.str();
    for (int i : {0, 3})
        for (int j : {0, 3})
            ch.kraus_ops.push_back(std::sqrt(w(i, j)) * kron(pauli(i), pauli(j)));
    return ch;
}

DensityMatrix correlated_dephasing(const DensityMatrix& rho, double t, double tau, double mu,
                                   DephasingMode mode) {
    if (mode == DephasingMode::kraus_exact)
        return apply_channel(rho, correlated_dephasing_channel(flip_probability(t, tau), mu));
    const double g = decoherence_factor(t, tau, mu);
    Matrix4 out = g * rho.mat;
    out.diagonal() = rho.mat.diagonal();
    return DensityMatrix{out};
}

void ChannelFamily::check() const {
    if (!(s >= 0 && s <= 1))
        throw InvalidParameter("decoherence parameter s must lie in [0, 1]");
    if (!(decay_rate > 0))
        throw InvalidParameter("decay rate must be > 0");
}

double s_from_time(double t, double kappa) {
    if (!(t >= 0) || !(kappa > 0))
        throw InvalidParameter("s_from_time needs t >= 0 and kappa > 0");
    return 1.0 - std::exp(-kappa * t);
}

std::string channel_kind_name(ChannelKind k) {
    switch (k) {
    case ChannelKind::amplitude_damping: return "amplitude_damping";
    case ChannelKind::phase_flip: return "phase_flip";
    case ChannelKind::phase_damping: return "phase_damping";
    }
    return "?";
}

TwoQubitChannel make_channel(const ChannelFamily& f) {
    f.check();
    const double s = f.s;
    Matrix2 k1 = Matrix2::Zero(), k2 = Matrix2::Zero();
    switch (f.kind) {
    case ChannelKind::amplitude_damping:
        k1 << 1, 0, 0, std::sqrt(1.0 - s);
        k2 << 0, std::sqrt(s), 0, 0;
        break;
    case ChannelKind::phase_flip:
        k1 << std::sqrt(s), 0, 0, std::sqrt(s);
        k2 << std::sqrt(1.0 - s), 0, 0, -std::sqrt(1.0 - s);
        break;
    case ChannelKind::phase_damping:
        k1 << 1, 0, 0, std::sqrt(1.0 - s);
        k2 << 0, 0, 0, std::sqrt(s);
        break;
    }
    TwoQubitChannel ch;
    std::ostringstream os;
    os << channel_kind_name(f.kind) << "(s=" << s << ")";
    ch.label = os.str();
    for (const Matrix2& a : {k1, k2})
        for (const Matrix2& b : {k1, k2})
            ch.kraus_ops.push_back(kron(a, b));
    return ch;
}

ThermalElements paper_element_table(const ThermalElements& e, ChannelKind kind, double s) {
    ChannelFamily{kind, s}.check();
    ThermalElements out;
    switch (kind) {
    case ChannelKind::amplitude_damping:
        out.e11 = e.e11 + s * s * e.e11 + 2.0 * s * e.e22;
        out.e22 = -(1.0 - s) * (s * e.e11 + e.e22);
        out.e12 = std::sqrt(1.0 - s) * (1.0 + s) * e.e12;
        out.e13 = std::sqrt(1.0 - s) * (1.0 + s) * e.e13;
        out.e14 = (1.0 - s) * e.e14;
        out.e23 = (1.0 - s) * e.e23;
        break;
    case ChannelKind::phase_flip:
        out.e11 = e.e11;
        out.e22 = e.e22;
        out.e12 = (2.0 * s - 1.0) * e.e12;
        out.e13 = (2.0 * s - 1.0) * e.e13;
        out.e14 = (1.0 - 2.0 * s) * (1.0 - 2.0 * s) * e.e14;
        out.e23 = (1.0 - 2.0 * s) * (1.0 - 2.0 * s) * e.e23;
        break;
    case ChannelKind::phase_damping:
        out.e11 = e.e11;
        out.e22 = e.e22;
        out.e12 = std::sqrt(1.0 - s) * e.e12;
        out.e13 = std::sqrt(1.0 - s) * e.e13;
        out.e14 = (1.0 - s) * e.e14;
        out.e23 = (1.0 - s) * e.e23;
        break;
    }
    return out;
}

TableComparison paper_element_tables(const ThermalElements& e, ChannelKind kind, double s) {
    TableComparison cmp;
    cmp.table = paper_element_table(e, kind, s);
    const Matrix4 table_m = cmp.table.to_matrix();
    const DensityMatrix evolved = apply_channel(DensityMatrix{e.to_matrix()},
                                                make_channel(ChannelFamily{kind, s}));
    cmp.max_abs_gap = (table_m - evolved.mat).cwiseAbs().maxCoeff();
    cmp.trace_defect = std::abs(table_m.trace() - Complex(1.0, 0.0));
    Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (table_m + table_m.adjoint()));
    cmp.min_eigenvalue = es.eigenvalues().minCoeff();
    cmp.agrees = cmp.max_abs_gap <= 1e-12;
    return cmp;
}

} // namespace dqd
