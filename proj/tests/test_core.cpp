// Hamiltonian, spectrum, eigenvectors, and the thermal state against the
// eigendecomposition and matrix-exponential oracles.

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>

#include "dqd/core.hpp"
#include "dqd/random_states.hpp"

using namespace dqd;

namespace {

ModelParams params(double o1, double o2, double v, double t) {
    ModelParams p;
    p.omega1 = o1;
    p.omega2 = o2;
    p.coulomb = v;
    p.temperature = t;
    return p;
}

// Gibbs state via the matrix exponential, a route independent of both
// library paths. Shifted by the smallest eigenvalue to stay representable.
Matrix4 gibbs_expm(const ModelParams& p) {
    const Matrix4d h = build_hamiltonian(p);
    Eigen::SelfAdjointEigenSolver<Matrix4d> es(h);
    const double shift = es.eigenvalues().minCoeff();
    const Matrix4d shifted = -p.beta() * (h - shift * Matrix4d::Identity());
    const Matrix4d w = shifted.exp();
    return (w / w.trace()).cast<Complex>();
}

} // namespace

TEST_CASE("hamiltonian has the tunneling + interaction layout") {
    SUBCASE("pure interaction is diagonal") {
        const Matrix4d h = build_hamiltonian(params(0, 0, 1, 1));
        Matrix4d expect = Matrix4d::Zero();
        expect.diagonal() << 1, -1, -1, 1;
        CHECK((h - expect).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("single tunneling term flips the first qubit") {
        const Matrix4d h = build_hamiltonian(params(1, 0, 0, 1));
        Matrix4d expect = Matrix4d::Zero();
        expect(0, 2) = expect(2, 0) = expect(1, 3) = expect(3, 1) = 1;
        CHECK((h - expect).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("symmetric and traceless") {
        const Matrix4d h = build_hamiltonian(params(3.7, -1.2, 8.0, 1));
        CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(h.trace() == 0.0);
    }
    SUBCASE("numeric eigenvalues match the closed form") {
        const Matrix4d h = build_hamiltonian(params(10, 15, 25, 1));
        Eigen::SelfAdjointEigenSolver<Matrix4d> es(h);
        CHECK(es.eigenvalues()(0) == doctest::Approx(-std::sqrt(1250.0)).epsilon(1e-12));
        CHECK(es.eigenvalues()(1) == doctest::Approx(-std::sqrt(650.0)).epsilon(1e-12));
        CHECK(es.eigenvalues()(2) == doctest::Approx(std::sqrt(650.0)).epsilon(1e-12));
        CHECK(es.eigenvalues()(3) == doctest::Approx(std::sqrt(1250.0)).epsilon(1e-12));
    }
    SUBCASE("invalid parameters are rejected") {
        CHECK_THROWS_AS(build_hamiltonian(params(1, 1, -2, 1)), InvalidParameter);
        CHECK_THROWS_AS(build_hamiltonian(params(1, 1, 2, 0)), InvalidParameter);
        CHECK_THROWS_AS(build_hamiltonian(params(1, 1, 2, -3)), InvalidParameter);
    }
}

TEST_CASE("spectrum: worked limits and degenerate guard") {
    SUBCASE("pure interaction limit") {
        const Spectrum sp = spectrum(params(0, 0, 1, 1));
        CHECK(sp.e[0] == doctest::Approx(1.0));
        CHECK(sp.e[1] == doctest::Approx(-1.0));
        CHECK(sp.e[2] == doctest::Approx(1.0));
        CHECK(sp.e[3] == doctest::Approx(-1.0));
        CHECK(sp.b_minus == doctest::Approx(2.0));
        CHECK(sp.b_plus == doctest::Approx(2.0));
        CHECK(sp.n_minus == 0.0);
        CHECK(sp.n_plus == 0.0);
    }
    SUBCASE("reference parameters") {
        const Spectrum sp = spectrum(params(10, 15, 25, 1));
        CHECK(sp.e[0] == doctest::Approx(std::sqrt(650.0)).epsilon(1e-14));
        CHECK(sp.e[2] == doctest::Approx(std::sqrt(1250.0)).epsilon(1e-14));
        CHECK(sp.n_minus == -5.0);
        CHECK(sp.n_plus == 25.0);
    }
    SUBCASE("degenerate normalizer at V = 0, equal couplings") {
        CHECK_THROWS_AS(spectrum(params(5, 5, 0, 1)), DegenerateNormalizer);
        CHECK_THROWS_AS(spectrum(params(5, -5, 0, 1)), DegenerateNormalizer);
        CHECK_NOTHROW(spectrum(params(5, 5.0001, 0, 1)));
    }
}

TEST_CASE("eigenvectors satisfy the eigenproblem under the fixed sign pairing") {
    SUBCASE("interaction-only limit pins the pairing") {
        const auto phi = eigenvectors(params(0, 0, 1, 1));
        Vector4 expect1;
        expect1 << -1, 0, 0, 1;
        expect1 /= std::sqrt(2.0);
        CHECK((phi[0] - expect1).norm() < 1e-14); // energy +1
        Vector4 expect4;
        expect4 << 0, 1, 1, 0;
        expect4 /= std::sqrt(2.0);
        // |phi4> carries energy -1; overall sign is conventional
        CHECK(std::min((phi[3] - expect4).norm(), (phi[3] + expect4).norm()) < 1e-14);
    }
    SUBCASE("residuals, orthonormality on a random grid") {
        std::mt19937_64 rng(31);
        for (int k = 0; k < 200; ++k) {
            const ModelParams p = random_model_params(rng);
            const Spectrum sp = spectrum(p);
            const auto phi = eigenvectors(p);
            const Matrix4d h = build_hamiltonian(p);
            for (int i = 0; i < 4; ++i) {
                CHECK(std::abs(phi[i].norm() - 1.0) < 1e-12);
                const double scale = std::max(1.0, std::abs(sp.e[i]));
                CHECK((h * phi[i] - sp.e[i] * phi[i]).norm() < 1e-9 * scale);
                for (int j = i + 1; j < 4; ++j)
                    CHECK(std::abs(phi[i].dot(phi[j])) < 1e-10);
            }
        }
    }
}

TEST_CASE("thermal elements: closed form against the eigendecomposition oracle") {
    SUBCASE("infinite temperature gives the flat mixture") {
        ModelParams p = params(10, 15, 25, 1);
        p.temperature = std::numeric_limits<double>::infinity();
        const ThermalElements e = thermal_elements(p);
        CHECK(e.e11 == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(e.e22 == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(std::abs(e.e12) < 1e-15);
        CHECK(std::abs(e.e13) < 1e-15);
        CHECK(std::abs(e.e14) < 1e-15);
        CHECK(std::abs(e.e23) < 1e-15);
    }
    SUBCASE("frozen reference values") {
        // independently computed with a dense eigensolver
        const ThermalElements e = thermal_elements(params(10, 15, 25, 0.1));
        CHECK(e.e11 == doctest::Approx(0.0732233047033632).epsilon(1e-12));
        CHECK(e.e22 == doctest::Approx(0.426776695296637).epsilon(1e-12));
        CHECK(e.e12 == doctest::Approx(-0.176776695296637).epsilon(1e-12));
        CHECK(e.e13 == doctest::Approx(-0.176776695296637).epsilon(1e-12));
        CHECK(e.e14 == doctest::Approx(0.0732233047033632).epsilon(1e-12));
        CHECK(e.e23 == doctest::Approx(0.426776695296637).epsilon(1e-12));
    }
    SUBCASE("near-zero temperature concentrates on the ground state") {
        const ModelParams p = params(10, 15, 25, 1e-6);
        const auto phi = eigenvectors(p);
        const Vector4 ground = phi[3]; // E4 = -sqrt(N+^2+V^2) is the minimum here
        const Matrix4 projector = (ground * ground.transpose()).cast<Complex>();
        const Matrix4 rho = thermal_elements(p).to_matrix();
        CHECK((rho - projector).cwiseAbs().maxCoeff() < 1e-9);
    }
    SUBCASE("elementwise agreement with both oracles on a random grid") {
        std::mt19937_64 rng(32);
        for (int k = 0; k < 200; ++k) {
            const ModelParams p = random_model_params(rng);
            const Matrix4 closed = thermal_elements(p).to_matrix();
            const Matrix4 numeric = thermal_state_numeric(p).mat;
            CHECK((closed - numeric).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((closed - gibbs_expm(p)).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
    SUBCASE("trace identity") {
        std::mt19937_64 rng(33);
        for (int k = 0; k < 100; ++k) {
            const ThermalElements e = thermal_elements(random_model_params(rng));
            CHECK(std::abs(2.0 * (e.e11 + e.e22) - 1.0) < 1e-12);
            CHECK(e.e11 >= 0.0);
            CHECK(e.e22 >= 0.0);
            CHECK_NOTHROW(e.check());
        }
    }
    SUBCASE("overflow guard fires when beta itself is not representable") {
        ModelParams p = params(10, 15, 25, 1);
        p.temperature = 1e-320; // subnormal: 1/T overflows to inf
        CHECK_THROWS_AS(thermal_elements(p), OverflowError);
    }
}

TEST_CASE("thermal state invariants and the degenerate fallback") {
    SUBCASE("state invariants on a random grid") {
        std::mt19937_64 rng(34);
        for (int k = 0; k < 200; ++k) {
            const DensityMatrix rho = thermal_state(random_model_params(rng));
            CHECK(rho.herm_defect() <= 1e-12);
            CHECK(rho.trace_defect() <= 1e-12);
            CHECK(rho.min_eigenvalue() >= -1e-10);
            CHECK_NOTHROW(rho.check());
        }
    }
    SUBCASE("degenerate parameters route through the numeric path") {
        const ModelParams p = params(5, 5, 0, 1);
        CHECK_THROWS_AS(thermal_elements(p), DegenerateNormalizer);
        const DensityMatrix rho = thermal_state(p);
        CHECK_NOTHROW(rho.check());
        CHECK((rho.mat - gibbs_expm(p)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK_NOTHROW(thermal_elements_any(p));
    }
    SUBCASE("both paths agree at the reference point") {
        const ModelParams p = params(10, 15, 25, 0.1);
        const Matrix4 a = thermal_state(p).mat;
        const Matrix4 b = thermal_state_numeric(p).mat;
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("structured layout holds on the numeric path") {
        std::mt19937_64 rng(35);
        for (int k = 0; k < 100; ++k) {
            const Matrix4 rho = thermal_state_numeric(random_model_params(rng)).mat;
            const ThermalElements e = elements_from_matrix(rho, 1e-10);
            CHECK((rho - e.to_matrix()).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("elements_from_matrix rejects unstructured input") {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = 0.6;
    m(1, 1) = 0.4; // breaks entry(1,1) = entry(4,4)
    CHECK_THROWS_AS(elements_from_matrix(m, 1e-9), NotAState);
}
