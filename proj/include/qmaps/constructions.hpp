// Closed-form affine maps of the XX models, the general two-qubit U(1) map,
// the fine-tuned correlated construction, and the three-qubit
// Gibbs-preserving constraint solver.
//
// Conventions, frozen against the numeric extraction oracle (see README):
// the closed forms describe U = exp(-i H t) with local fields entering as
// h_i * sigma_z (two-qubit model: H = h1 Z x I + h2 I x Z + (J/2)(XX+YY)),
// so theta = t * sqrt(J^2 + h_minus^2) and the transverse rotation angle is
// t * h_plus. All map entries are the oracle-consistent magnitudes.

#pragma once

#include "qmaps/affine.hpp"
#include "qmaps/types.hpp"

#include <string>

namespace qmaps {

struct TwoQubitParams {
    double j = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;

    // Derived quantities, recomputed on demand.
    double h_minus() const { return h1 - h2; }
    double h_plus() const { return h1 + h2; }
    double theta(double t = 1.0) const;
};

struct ThreeQubitParams {
    double j = 0.0;
    double h = 0.0;
    double b3 = 0.0;              // environment z component
    double f1 = 0.0, f2 = 0.0, f3 = 0.0;  // resource Bloch vector

    void validate() const;  // |b3| <= 1, |f| <= 1
};

// Phase-covariant map of the symmetric two-qubit model (h1 = h2 = h,
// diagonal environment b3).
AffineMap phi_pc(double j, double h, double b3, double t = 1.0);

// Same model with a coherent environment b; breaks phase covariance through
// the z-transverse couplings while tau stays on the z axis.
AffineMap phi_env_coherent(double j, double h, const BlochVector& b, double t = 1.0);

// Diagonal environment plus excess correlations: c31, c32 drive the
// transverse shift, c_asym = (c21 - c12)/2 shifts tau_z.
AffineMap phi_correlated(double j, double h, double b3, double c31, double c32,
                         double c_asym, double t = 1.0);

struct FineTunedGp {
    AffineMap map;
    CorrelationMatrix correlations;  // required excess correlations
};

// Coherent-environment map made Gibbs-preserving by fine-tuned correlations:
// c31 = -b1 r_G, c32 = -b2 r_G, and the antisymmetric value
// c_asym = (1/2) tan(theta) (r_G - b3). Throws when theta is within tol of a
// multiple of pi/2 (singular tangent / vanishing sin(2 theta)).
FineTunedGp phi_gp_finetuned(double j, double h, const BlochVector& b, double r_g,
                             double t = 1.0);

// Full map of the asymmetric two-qubit model with environment b and excess
// correlations c.
AffineMap phi_E_general(const TwoQubitParams& p, const BlochVector& b,
                        const CorrelationMatrix& c, double t = 1.0);

// Map of the three-qubit star model (S coupled to E and R); phase-covariant
// iff f1 = f2 = 0.
AffineMap phi_gp_3qubit(const ThreeQubitParams& p, double t = 1.0);

// Map of the general five-parameter two-qubit U(1) unitary with environment b.
AffineMap phi_appD_general(double phi0, double phi1, double phi2, double alpha,
                           double theta, const BlochVector& b);

struct GpSolution {
    double j = 0.0;
    double f3 = 0.0;
    bool feasible = false;
    enum class Reason { none, sign_conflict, resource_norm_exceeded };
    Reason reason = Reason::none;

    std::string reason_str() const;
    std::string to_json() const;
};

// Couplings that make the three-qubit map preserve the Gibbs state (0,0,r_G)
// at t = 1: J = arctan(sqrt(-r_G / b3)) / sqrt(2), f3 = 2 r_G - b3.
// Infeasible when b3 * r_G >= 0 (sign_conflict) or |f3| > 1
// (resource_norm_exceeded). Throws for b3 = 0.
GpSolution solve_gp_constraints(double b3, double r_g);

}  // namespace qmaps
