// U(1)-symmetric dynamics: the charge generator, XX-model Hamiltonians, the
// five-parameter two-qubit U(1) unitary, and random block-diagonal unitaries.

#pragma once

#include "qmaps/types.hpp"

#include <cstdint>
#include <vector>

namespace qmaps {

// G = sum_i sigma_z^(i); diagonal with entries n - 2 * popcount(index).
ComplexMatrix generator(int n);

// H = (h1/2) Z x I + (h2/2) I x Z + (J/2)(XX + YY).
ComplexMatrix build_xx_hamiltonian_2q(double h1, double h2, double j);

// Sites ordered (S, E, R); S couples to E and to R, E-R uncoupled:
// H = J [ (X_S X_E + Y_S Y_E) + (X_S X_R + Y_S Y_R) ] + h (Z_S + Z_E + Z_R).
ComplexMatrix build_xx_hamiltonian_3q(double h, double j);

// Named model Hamiltonian, parseable from config text such as
// "xx2q J=0.5 h1=0.3 h2=0.3" or "xx3q J=0.5 h=0.785".
struct HamiltonianSpec {
    enum class Kind { xx2q, xx3q, custom };
    Kind kind = Kind::xx2q;
    double h1 = 0.0, h2 = 0.0, h = 0.0, j = 0.0;
    ComplexMatrix custom;

    static HamiltonianSpec parse(const std::string& text);
    ComplexMatrix assemble() const;  // Hermitian; validated for custom matrices
};

struct U1Unitary {
    ComplexMatrix matrix;
    int n_qubits = 0;
    std::vector<Eigen::Index> block_dims;  // binomial(n, m) for m = 0..n
};

// The general two-qubit U(1) unitary: blocks exp(i phi0), a phased rotation
// on the one-excitation subspace, and exp(i phi2).
U1Unitary build_general_u1_2q(double phi0, double phi1, double phi2,
                              double alpha, double theta);

// Haar-random unitary per excitation block, assembled block-diagonally.
// Reproducible from the seed; supports 1 <= n <= 4.
U1Unitary random_u1_unitary(int n, std::uint64_t seed);

// True iff || U G - G U ||_max < tol.
bool is_u1_symmetric(const ComplexMatrix& u, double tol = default_tols().structural_zero);

}  // namespace qmaps
