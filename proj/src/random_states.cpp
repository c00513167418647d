#include "dqd/random_states.hpp"

#include <cmath>
#include <numbers>

namespace dqd {

Vector4c random_state_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector4c v;
    do {
        for (int i = 0; i < 4; ++i)
            v(i) = Complex(g(rng), g(rng));
    } while (v.norm() < 1e-6);
    return v / v.norm();
}

DensityMatrix random_pure_state(std::mt19937_64& rng) {
    const Vector4c psi = random_state_vector(rng);
    return DensityMatrix{psi * psi.adjoint()};
}

DensityMatrix random_mixed_state(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            a(i, j) = Complex(g(rng), g(rng));
    Matrix4 rho = a * a.adjoint();
    rho /= rho.trace();
    return DensityMatrix{rho};
}

Matrix2 random_unitary_2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double two_pi = 2.0 * std::numbers::pi;
    const double alpha = two_pi * u(rng);
    const double beta = two_pi * u(rng);
    const double delta = two_pi * u(rng);
    const double theta = std::asin(std::sqrt(u(rng)));
    const Complex phase = std::exp(Complex(0, delta));
    Matrix2 m;
    m(0, 0) = std::exp(Complex(0, alpha)) * std::cos(theta);
    m(0, 1) = std::exp(Complex(0, beta)) * std::sin(theta);
    m(1, 0) = -std::exp(Complex(0, -beta)) * std::sin(theta);
    m(1, 1) = std::exp(Complex(0, -alpha)) * std::cos(theta);
    return phase * m;
}

ModelParams random_model_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> omega(-20.0, 20.0);
    std::uniform_real_distribution<double> coulomb(0.0, 40.0);
    std::uniform_real_distribution<double> temp(0.05, 20.0);
    ModelParams p;
    p.omega1 = omega(rng);
    p.omega2 = omega(rng);
    p.coulomb = coulomb(rng);
    p.temperature = temp(rng);
    return p;
}

} // namespace dqd
