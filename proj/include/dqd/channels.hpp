// channels.hpp — correlated dephasing with random-telegraph memory, the
// amplitude-damping / phase-flip / phase-damping Kraus channels, and the
// generic Kraus applicator that is the single evolution path for all of them.

#pragma once

#include <string>
#include <vector>

#include "dqd/core.hpp"
#include "dqd/types.hpp"

namespace dqd {

// Correlated-dephasing knobs: memory time tau, classical-correlation degree
// mu, and the static Pauli-z weight P used when no time dependence is wanted.
struct MemoryParams {
    double tau = 1;            // > 0
    double mu = 0;             // in [0, 1]
    double flip_prob_base = 0; // P in [0, 1]

    void check() const; // throws InvalidParameter
};

// Random-telegraph memory kernel.
//   4*tau > 1 (non-Markovian): F = e^{-t/2tau} [cos(v t/2tau) + sin(v t/2tau)/v]
//   4*tau < 1 (Markovian):     F = e^{-t/2tau} [cosh(v t/2tau) + sinh(v t/2tau)/v]
// with v = sqrt(|1 - (4 tau)^2|); both branches meet the limit
// e^{-t/2tau} (1 + t/2tau) at 4*tau = 1, which is used near the boundary.
// |F| <= 1 on t >= 0.
double memory_kernel_F(double t, double tau);

// P(t) = (1 - F(t))/2, clamped to [0, 1] against rounding.
double flip_probability(double t, double tau);

// gamma = (1 - mu) F^2(t) + mu; equals 1 at t = 0 and for mu = 1.
double decoherence_factor(double t, double tau, double mu);

// Joint weights P_ij = (1-mu) P_i P_j + mu P_i delta_ij with
// P0 = 1-P, P1 = P2 = 0, P3 = P. Only the {0,3}x{0,3} entries are nonzero;
// the sixteen weights are non-negative and sum to 1.
Matrix4d correlated_pauli_probabilities(double P, double mu);

// Finite Kraus set for a two-qubit channel.
struct TwoQubitChannel {
    std::vector<Matrix4> kraus_ops;
    std::string label;

    // max |(sum K'K - I)_ij|
    double completeness_defect() const;
};

// rho -> sum K rho K'. Verifies the completeness relation first and throws
// NotCptp on violation. The authoritative evolution path for every channel.
DensityMatrix apply_channel(const DensityMatrix& rho, const TwoQubitChannel& ch);

// The four-operator correlated dephasing set sqrt(P_ij) tau_i (x) tau_j over
// indices {0,3}x{0,3}.
TwoQubitChannel correlated_dephasing_channel(double P, double mu);

enum class DephasingMode {
    paper_uniform_gamma, // every off-diagonal element scaled by gamma(t)
    kraus_exact          // exact Kraus map: single-qubit coherences pick up
                         // F(t), two-qubit coherences gamma(t)
};

// Correlated-dephasing evolution of a state at time t. The two modes agree
// only where F^2 = gamma (t = 0, or mu = 0 on e14/e23 slots); the uniform
// mode matches the published evolved-matrix form, the kraus mode the
// channel's own operator sum.
DensityMatrix correlated_dephasing(const DensityMatrix& rho, double t, double tau, double mu,
                                   DephasingMode mode);

enum class ChannelKind { amplitude_damping, phase_flip, phase_damping };

struct ChannelFamily {
    ChannelKind kind = ChannelKind::amplitude_damping;
    double s = 0;          // decoherence parameter in [0, 1]
    double decay_rate = 1; // kappa > 0, used by s_from_time

    void check() const; // throws InvalidParameter
};

// Product channel {K_k (x) K_l} from the single-qubit Kraus pair of the family.
TwoQubitChannel make_channel(const ChannelFamily& f);

// s = 1 - e^{-kappa t}.
double s_from_time(double t, double kappa);

std::string channel_kind_name(ChannelKind k);

// Literal evaluation of the published per-element tables (delta for AD,
// pi for PF, phi for PD) on structured elements. The PF and PD tables equal
// the Kraus map; the AD table does not (its e22 entry is negative and its
// trace drifts), which is why the Kraus applicator stays authoritative.
ThermalElements paper_element_table(const ThermalElements& e, ChannelKind kind, double s);

// Table evaluation together with its gap against the Kraus oracle.
struct TableComparison {
    ThermalElements table;
    double max_abs_gap = 0;    // elementwise vs apply_channel output
    double trace_defect = 0;   // |tr(table matrix) - 1|
    double min_eigenvalue = 0; // of the table matrix
    bool agrees = false;       // max_abs_gap <= 1e-12
};

TableComparison paper_element_tables(const ThermalElements& e, ChannelKind kind, double s);

} // namespace dqd
