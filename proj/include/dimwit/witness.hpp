#pragma once

#include <array>
#include <utility>

#include "dimwit/types.hpp"

namespace dimwit {

// Outcome probability Tr(Y X), verified real and clamped to [0,1].
double probability(const Preparation& prep, const Effect& eff);

// Rows are effects (plus the implicit always-yes row of ones), columns are
// preparations.
ProbabilityMatrix build_probability_matrix(const Scenario& s);

// Witness value: determinant of the full (k+1)x(k+1) matrix.
double witness(const ProbabilityMatrix& pm);
double witness(const Scenario& s);

WitnessReport witness_report(const Scenario& s,
                             std::map<std::string, std::string> metadata = {});

// k x k reduction: subtract the last column from every other column, then
// drop the last row and column. Its determinant equals witness(pm).
Mat reduce_columns(const ProbabilityMatrix& pm);

// Adjugate of the probability matrix; Adj(p) * p = det(p) * I.
Mat adjugate(const ProbabilityMatrix& pm);

// Determinant of the submatrix with two rows and two columns removed
// (0-based indices).
double pm_minor(const ProbabilityMatrix& pm, std::pair<int, int> rows,
                std::pair<int, int> cols);

// Orthonormalize while preserving field and the first vector's direction.
std::vector<StateVector> gram_schmidt(const std::vector<StateVector>& vs);

// Qubit Bloch-sphere helpers: X = (1 + v.sigma)/2 and Y = (1 + v.sigma)/2.
// States accept |v| <= 1 (mixed inside the ball); effects require |v| = 1.
Preparation bloch_state(const std::array<double, 3>& v);
Effect bloch_effect(const std::array<double, 3>& v);
StateVector bloch_vector_state(const std::array<double, 3>& v);

// Bloch vector of a qubit operator, component c = Tr(A sigma_c).
std::array<double, 3> bloch_of(const CMat& op);

// Cross/mixed-product closed forms for qubit scenarios with k = 2 or 3.
double qubit_witness_closed_form(const Scenario& s);

// Minimal measurement and preparation counts certifying dimension d.
MinimalCounts minimal_counts(int d, WitnessModel model);

// (k+1)^((k+1)/2) / 2^k, the maximal determinant of a [0,1] matrix of this
// shape.
double hadamard_bound(int k);

}  // namespace dimwit
