// measures.hpp — concurrence and l1-norm coherence, each with an authoritative
// numeric path and a closed-form cross-check path.

#pragma once

#include <array>

#include "dqd/core.hpp"
#include "dqd/types.hpp"

namespace dqd {

enum class ConcurrenceMethod { numeric_wootters, paper_analytic };

struct ConcurrenceBreakdown {
    double value = 0;                // in [0, 1] for the numeric method
    std::array<double, 4> sqrt_eigs{}; // sqrt of the R eigenvalues, descending
    ConcurrenceMethod method = ConcurrenceMethod::numeric_wootters;
};

// Wootters concurrence from the eigenvalues of R = rho (y(x)y) rho* (y(x)y),
// sorted descending: max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)}.
// This is the authoritative entanglement measure. Throws NotAState.
ConcurrenceBreakdown concurrence_numeric(const DensityMatrix& rho);

// Closed-form R eigenvalues
//   v1,2 = G-^2 +/- (1/2) sqrt(Xi-^2 - La-^2)
//   v3,4 = G+^2 +/- (1/2) sqrt(Xi+^2 - La+^2)
// with Xi, La, G quadratic in the structured elements, combined literally as
// max{0, |sqrt(v1)-sqrt(v3)| - sqrt(v2) - sqrt(v4)}. Kept as a cross-check;
// disagreement with the numeric path is recorded, not resolved. Throws
// ComplexEigenvalue when a radicand or eigenvalue is negative beyond -1e-9.
ConcurrenceBreakdown concurrence_paper(const ThermalElements& e);

// Off-diagonal scale factors applied before the closed-form evaluation
// (dephased states keep the structured layout with rescaled coherences).
struct ElementScale {
    double s12 = 1;
    double s13 = 1;
    double s14 = 1;
    double s23 = 1;
};

ThermalElements scale_off_diagonal(const ThermalElements& e, const ElementScale& s);

inline ConcurrenceBreakdown concurrence_paper(const ThermalElements& e, const ElementScale& s) {
    return concurrence_paper(scale_off_diagonal(e, s));
}

enum class CoherenceMethod { l1_definition, paper_eq16 };

struct CoherenceValue {
    double value = 0;
    CoherenceMethod method = CoherenceMethod::l1_definition;
};

// Sum of |rho_ij| over all 12 off-diagonal entries (the defining form;
// authoritative). Throws NotAState.
CoherenceValue l1_coherence(const DensityMatrix& rho);

// The expanded closed form 4(|e12|+|e13|+|e23|+|e14|). Note: the structured
// layout repeats e12 and e13 four times but e14 and e23 only twice, so this
// double-weights the latter relative to the defining form; both are emitted
// so sweeps can carry the pair of columns.
CoherenceValue l1_coherence_paper_eq16(const ThermalElements& e);

// Layout identity for structured states: 4|e12| + 4|e13| + 2|e14| + 2|e23|.
double l1_structured(const ThermalElements& e);

} // namespace dqd
