// core.hpp — two-qubit charge-qubit model: Hamiltonian, analytic spectrum,
// eigenvectors, and the thermal state in closed form and via eigendecomposition.

#pragma once

#include <array>

#include "dqd/types.hpp"

namespace dqd {

// Physical knobs in units where hbar = k_B = 1; all energies share one
// arbitrary unit and time is dimensionless.
struct ModelParams {
    double omega1 = 0;      // tunneling amplitude, qubit 1
    double omega2 = 0;      // tunneling amplitude, qubit 2
    double coulomb = 0;     // inter-qubit Coulomb interaction, >= 0
    double temperature = 1; // > 0 (infinity admitted and means beta = 0)

    void check() const; // throws InvalidParameter
    double beta() const { return 1.0 / temperature; }
};

// H = omega1 x(x)I + omega2 I(x)x + coulomb z(x)z, real symmetric, trace 0.
Matrix4d build_hamiltonian(const ModelParams& p);

// Analytic spectrum. Sign pairing: E1 = +sqrt(N-^2+V^2), E2 = -E1,
// E3 = +sqrt(N+^2+V^2), E4 = -E3; this is the pairing under which the
// analytic eigenvectors satisfy H|phi_i> = E_i|phi_i>.
struct Spectrum {
    double n_minus = 0;     // omega1 - omega2
    double n_plus = 0;      // omega1 + omega2
    double b_minus = 0;     // V + sqrt(N-^2 + V^2)
    double b_plus = 0;      // V + sqrt(N+^2 + V^2)
    double delta_minus = 0; // 1/sqrt(2(N-^2 + B-^2))
    double delta_plus = 0;  // 1/sqrt(2(N+^2 + B+^2))
    std::array<double, 4> e{}; // E1..E4
};

// Throws DegenerateNormalizer when N^2 + B^2 vanishes (V = 0, omega1 = +/-omega2).
Spectrum spectrum(const ModelParams& p);

// Normalized eigenvectors paired with Spectrum::e; real in this basis.
std::array<Vector4, 4> eigenvectors(const ModelParams& p);

// The six independent real elements of the thermal state; the full matrix is
//   [ e11 e12 e13 e14 ]
//   [ e12 e22 e23 e13 ]
//   [ e13 e23 e22 e12 ]
//   [ e14 e13 e12 e11 ]
struct ThermalElements {
    double e11 = 0;
    double e22 = 0;
    double e12 = 0;
    double e13 = 0;
    double e14 = 0;
    double e23 = 0;

    Matrix4 to_matrix() const;
    void check() const; // unit trace and non-negative populations
};

// Extracts the six elements from a structured matrix; throws NotAState when
// the layout symmetry or realness is violated beyond tol.
ThermalElements elements_from_matrix(const Matrix4& m, double tol = 1e-9);

// Boltzmann weights exp(-beta (E_i - E_min)) normalized to sum 1; the shift
// keeps every exponent <= 0 so arbitrarily small temperatures are safe.
std::array<double, 4> boltzmann_weights(const std::array<double, 4>& energies, double beta);

// Closed-form Gibbs elements. Throws DegenerateNormalizer or OverflowError.
ThermalElements thermal_elements(const ModelParams& p);

// Gibbs state from the closed form, falling back to the numeric
// eigendecomposition on DegenerateNormalizer.
DensityMatrix thermal_state(const ModelParams& p);

// Gibbs state assembled from a numeric eigendecomposition of the Hamiltonian.
// Independent of the closed-form route; also the fallback for degenerate
// normalizers.
DensityMatrix thermal_state_numeric(const ModelParams& p);

// Closed form when available, otherwise elements of the numeric state (the
// Gibbs state always carries the structured layout since H commutes with x(x)x).
ThermalElements thermal_elements_any(const ModelParams& p);

} // namespace dqd
