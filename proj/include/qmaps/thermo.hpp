// Thermodynamic diagnostics: relative entropy, the work-extraction proxy,
// L1 coherence trajectories, and convergence-step counting.

#pragma once

#include "qmaps/affine.hpp"
#include "qmaps/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qmaps {

// Tr rho (log rho - log sigma) in natural-log units, via eigendecomposition
// with 0 log 0 = 0. Returns +infinity when support(rho) is not contained in
// support(sigma). Throws on invalid density matrices.
double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                        const Tolerances& tols = default_tols());

// D( m(a0) || gibbs(r_G) ).
double delta_D(const AffineMap& m, const BlochVector& a0, double r_g);

// |rho_01| + |rho_10| = sqrt(a1^2 + a2^2).
double l1_coherence(const BlochVector& a);

// l1_coherence along [a0, m(a0), ..., m^n(a0)].
std::vector<double> coherence_trajectory(const AffineMap& m, const BlochVector& a0, int n);

struct ConvergenceResult {
    int steps = 0;
    bool converged = false;
};

// Smallest n with || rho_{n+1} - rho_n ||_1 < eps (trace norm), or n_max with
// converged = false. A stationary input (step-1 difference below eps)
// returns 1.
ConvergenceResult convergence_steps(const AffineMap& m, const BlochVector& a0,
                                    double eps = 1e-8, int n_max = 10000);

struct Trajectory {
    std::vector<BlochVector> states;
    std::string map_label;
    std::vector<std::pair<std::string, double>> params;
};

Trajectory make_trajectory(const AffineMap& m, const BlochVector& a0, int n,
                           const std::string& label,
                           std::vector<std::pair<std::string, double>> params = {});

}  // namespace qmaps
