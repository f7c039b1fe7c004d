// Qubit state construction: Bloch <-> density conversions, product states,
// correlated two-qubit states, Gibbs states.

#pragma once

#include "qmaps/linalg.hpp"
#include "qmaps/types.hpp"

#include <vector>

namespace qmaps {

// rho = (I + a.sigma)/2, so rho_00 = (1 + a3)/2. Throws if |a| > 1 + tol.
ComplexMatrix bloch_to_density(const BlochVector& a,
                               const Tolerances& tols = default_tols());

// Inverse of bloch_to_density; throws if rho is not a valid qubit state.
BlochVector density_to_bloch(const ComplexMatrix& rho,
                             const Tolerances& tols = default_tols());

// (1/4) [ I + sum_i (a_i s_i x I + b_i I x s_i) + sum_ij c_ij s_i x s_j ].
// Hermitian with unit trace by construction; throws (reporting the minimum
// eigenvalue) if the result is not PSD within tolerance.
ComplexMatrix build_two_qubit_state(const BlochVector& a, const BlochVector& b,
                                    const CorrelationMatrix& c,
                                    const Tolerances& tols = default_tols());

// Traceless correlation operator (1/4) sum_ij c_ij s_i x s_j. Both marginals
// vanish, so it is a valid excess-correlation term for map extraction.
ComplexMatrix correlation_operator(const CorrelationMatrix& c);

// Bloch vector (0, 0, r_G) of the Gibbs state; throws if |r_G| > 1.
BlochVector gibbs_bloch(double r_g);

// Product of diagonal single-qubit states with z components zs.
ComplexMatrix diagonal_product_state(const std::vector<double>& zs);

ComplexMatrix product_state(const std::vector<BlochVector>& blochs);

}  // namespace qmaps
