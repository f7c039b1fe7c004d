// Dense complex linear algebra on multi-qubit operators: Kronecker products,
// partial trace, qubit permutation, and the Hermitian matrix exponential.

#pragma once

#include "qmaps/types.hpp"

#include <vector>

namespace qmaps {

// Single-qubit constants.
const ComplexMatrix& pauli_i();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_power_of_two(Eigen::Index d);
int qubit_count(const ComplexMatrix& m);  // throws if not square power-of-two

bool is_hermitian(const ComplexMatrix& m, double tol = default_tols().structural_zero);
bool is_unitary(const ComplexMatrix& m, double tol = default_tols().structural_zero);
double min_eigenvalue(const ComplexMatrix& hermitian);

// Validity check for density matrices: Hermitian, unit trace, PSD.
bool is_density_matrix(const ComplexMatrix& rho,
                       const Tolerances& tols = default_tols());

// Trace out all sites not in `keep` (1-based site indices, site 1 = leftmost
// factor). The result is ordered by increasing kept site index.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits,
                            const std::vector<int>& keep);

// Reorder tensor factors: target site s holds the qubit that was at source
// site perm[s-1] (both 1-based).
ComplexMatrix permute_qubits(const ComplexMatrix& m, const std::vector<int>& perm);

// U = exp(-i H t) via Hermitian eigendecomposition; throws on non-Hermitian H.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t = 1.0);

double max_abs(const ComplexMatrix& m);
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qmaps
