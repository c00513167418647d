// Concurrence and coherence: ground truths, the pure-state oracle,
// local-unitary invariance, and the closed-form cross-checks.

#include <doctest.h>

#include <cmath>
#include <random>

#include "dqd/measures.hpp"
#include "dqd/random_states.hpp"

using namespace dqd;

namespace {

ModelParams reference_params() {
    ModelParams p;
    p.omega1 = 10;
    p.omega2 = 15;
    p.coulomb = 25;
    p.temperature = 0.1;
    return p;
}

} // namespace

TEST_CASE("concurrence ground truths") {
    CHECK(concurrence_numeric(maximally_mixed()).value == 0.0);
    CHECK(concurrence_numeric(bell_phi_plus()).value == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("breakdown is sorted and bounded") {
        const auto b = concurrence_numeric(bell_phi_plus());
        CHECK(b.sqrt_eigs[0] == doctest::Approx(1.0).epsilon(1e-10));
        for (int i = 1; i < 4; ++i) {
            CHECK(b.sqrt_eigs[i] <= b.sqrt_eigs[i - 1] + 1e-12);
            CHECK(b.sqrt_eigs[i] >= 0.0);
        }
        CHECK(b.method == ConcurrenceMethod::numeric_wootters);
    }
    SUBCASE("thermal reference state is entangled") {
        // T = 0.1 leaves only the ground state populated here, and its
        // concurrence is analytically 1/sqrt(2) for V = N+
        const auto rho = thermal_state(reference_params());
        CHECK(concurrence_numeric(rho).value ==
              doctest::Approx(0.707106781186547).epsilon(1e-9));
    }
    SUBCASE("invalid input raises") {
        DensityMatrix bad;
        bad.mat = Matrix4::Identity(); // trace 4
        CHECK_THROWS_AS(concurrence_numeric(bad), NotAState);
    }
}

TEST_CASE("pure-state formula 2|ad - bc| matches the R-matrix path") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 500; ++k) {
        const Vector4c psi = random_state_vector(rng);
        const double exact = 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
        CHECK(std::abs(concurrence_numeric(pure_state(psi)).value - exact) < 1e-9);
    }
}

TEST_CASE("concurrence is invariant under local unitaries and stays in [0,1]") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 200; ++k) {
        const DensityMatrix rho = random_mixed_state(rng);
        const double c = concurrence_numeric(rho).value;
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-10);
        const Matrix4 u = kron(random_unitary_2(rng), random_unitary_2(rng));
        const DensityMatrix rotated{u * rho.mat * u.adjoint()};
        CHECK(std::abs(concurrence_numeric(rotated).value - c) < 1e-9);
    }
}

TEST_CASE("closed-form concurrence path") {
    SUBCASE("diagonal structured state is separable") {
        ThermalElements e{};
        e.e11 = 0.25;
        e.e22 = 0.25;
        CHECK(concurrence_paper(e).value == 0.0);
    }
    SUBCASE("Bell embedding exposes the formula discrepancy") {
        // e11 = e14 = 1/2 embeds |Phi+><Phi+| in the structured layout; the
        // closed-form eigenvalues come out {0, 0, 1, 1} instead of {1, 0, 0, 0},
        // so the combination gives 0 while the true concurrence is 1.
        ThermalElements e{};
        e.e11 = 0.5;
        e.e14 = 0.5;
        const auto paper = concurrence_paper(e);
        CHECK(paper.value == 0.0);
        CHECK(paper.sqrt_eigs[0] == doctest::Approx(1.0));
        CHECK(paper.sqrt_eigs[1] == doctest::Approx(1.0));
        CHECK(concurrence_numeric(DensityMatrix{e.to_matrix()}).value ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("thermal reference point leaves the formula's real domain") {
        const ThermalElements e = thermal_elements(reference_params());
        CHECK_THROWS_AS(concurrence_paper(e), ComplexEigenvalue);
    }
    SUBCASE("cross-path disagreement is recorded per grid point") {
        std::mt19937_64 rng(43);
        int disagree = 0, agree = 0;
        for (int k = 0; k < 500; ++k) {
            const ModelParams p = random_model_params(rng);
            const ThermalElements e = thermal_elements(p);
            const double c_num = concurrence_numeric(DensityMatrix{e.to_matrix()}).value;
            try {
                const double c_pap = concurrence_paper(e).value;
                (std::abs(c_pap - c_num) > 1e-6 ? disagree : agree)++;
            } catch (const ComplexEigenvalue&) {
                ++disagree;
            }
        }
        MESSAGE("closed-form concurrence disagreement: ", disagree, "/500 (agree: ", agree, ")");
        CHECK(disagree + agree == 500);
    }
    SUBCASE("off-diagonal scaling helper") {
        ThermalElements e = thermal_elements(reference_params());
        const ThermalElements s = scale_off_diagonal(e, ElementScale{0.5, 0.5, 0.25, 0.25});
        CHECK(s.e12 == doctest::Approx(0.5 * e.e12));
        CHECK(s.e14 == doctest::Approx(0.25 * e.e14));
        CHECK(s.e11 == e.e11);
    }
}

TEST_CASE("l1 coherence") {
    CHECK(l1_coherence(maximally_mixed()).value == 0.0);
    CHECK(l1_coherence(bell_phi_plus()).value == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("structured layout identity") {
        const ThermalElements e = thermal_elements(reference_params());
        const double direct = l1_coherence(DensityMatrix{e.to_matrix()}).value;
        CHECK(direct == doctest::Approx(l1_structured(e)).epsilon(1e-14));
        CHECK(direct == doctest::Approx(2.4142135623731).epsilon(1e-10));
    }
    SUBCASE("identity holds across a random grid") {
        std::mt19937_64 rng(44);
        for (int k = 0; k < 200; ++k) {
            const ThermalElements e = thermal_elements(random_model_params(rng));
            CHECK(l1_coherence(DensityMatrix{e.to_matrix()}).value ==
                  doctest::Approx(l1_structured(e)).epsilon(1e-12));
        }
    }
}

TEST_CASE("expanded coherence form double-weights the anti-diagonal slots") {
    SUBCASE("zero off-diagonals") {
        ThermalElements e{};
        e.e11 = e.e22 = 0.25;
        CHECK(l1_coherence_paper_eq16(e).value == 0.0);
    }
    SUBCASE("pure e14 exposes the factor-two gap") {
        ThermalElements e{};
        e.e11 = 0.5;
        e.e14 = 0.5;
        CHECK(l1_coherence_paper_eq16(e).value == doctest::Approx(2.0));
        CHECK(l1_coherence(DensityMatrix{e.to_matrix()}).value == doctest::Approx(1.0));
    }
    SUBCASE("e12/e13 weights agree between the forms") {
        ThermalElements e{};
        e.e11 = e.e22 = 0.25;
        e.e12 = 0.1;
        e.e13 = 0.1;
        CHECK(l1_coherence_paper_eq16(e).value == doctest::Approx(0.8));
        CHECK(l1_structured(e) == doctest::Approx(0.8));
    }
}
