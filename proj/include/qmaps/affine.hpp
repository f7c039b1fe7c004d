// Affine representation of qubit channels: extraction from global unitaries,
// Choi-matrix CPTP verification, class predicates, and fixed points.

#pragma once

#include "qmaps/states.hpp"
#include "qmaps/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmaps {

// a' = tau + T a; augmented 4x4 form has first row (1, 0, 0, 0).
struct AffineMap {
    Eigen::Vector3d tau = Eigen::Vector3d::Zero();
    Eigen::Matrix3d T = Eigen::Matrix3d::Identity();

    static AffineMap identity() { return AffineMap{}; }

    Eigen::Matrix4d augmented() const;

    std::string to_json() const;
    std::string to_csv() const;  // 4-line block of the augmented matrix
};

BlochVector apply(const AffineMap& m, const BlochVector& a);

// Action of m2 after m1: (tau2 + T2 tau1, T2 T1).
AffineMap compose(const AffineMap& m2, const AffineMap& m1);

// Trajectory [a0, m(a0), ..., m^n(a0)] of length n + 1.
std::vector<BlochVector> iterate(const AffineMap& m, const BlochVector& a0, int n);

// Choi = (Phi x id) applied to sum_ij |ii><jj| (unnormalized, trace 2).
ComplexMatrix choi_matrix(const AffineMap& m);

// Linear extension of the map to arbitrary 2x2 operators.
ComplexMatrix apply_to_operator(const AffineMap& m, const ComplexMatrix& op);

bool is_cptp(const AffineMap& m, double tol = -default_tols().psd_floor);

// Complete positivity of the phase-covariant family (lam, lam, lam_z; tau_z):
// |lam_z| + |tau_z| <= 1 and 4 lam^2 + tau_z^2 <= (1 + lam_z)^2.
bool pc_cp_inequalities(double lam, double lam_z, double tau_z, double tol = 0.0);

// Structural phase covariance: tau_x = tau_y = 0, vanishing z-transverse
// couplings, T11 = T22, T12 = -T21.
bool is_phase_covariant(const AffineMap& m, double tol = default_tols().structural_zero);

// Largest structural violation of the phase-covariant form.
double phase_covariance_defect(const AffineMap& m);

// True iff the Gibbs state (0, 0, r_G) is a fixed point.
bool is_gibbs_preserving(const AffineMap& m, double r_g,
                         double tol = default_tols().structural_zero);

bool is_unital(const AffineMap& m, double tol = default_tols().structural_zero);

struct FixedPoint {
    BlochVector point;
    bool physical = true;  // false when |a| > 1
};

// Solves (I - T) a = tau; throws when I - T is singular (a fixed-point family).
FixedPoint fixed_point(const AffineMap& m, double tol = default_tols().structural_zero);

struct MapClassification {
    bool cptp = false;
    bool unital = false;
    bool phase_covariant = false;
    std::optional<double> gibbs_preserving_for;  // set iff GP w.r.t. this r_G
    bool energy_preserving_origin = false;       // tag: came from a U(1) model
    std::string to_json() const;
};

MapClassification classify(const AffineMap& m, std::optional<double> r_g = std::nullopt,
                           bool energy_preserving_origin = false,
                           const Tolerances& tols = default_tols());

// Reduced dynamics of the qubit at system_site under the global unitary u,
// with the remaining sites in env_state (ordered by increasing site index)
// and an optional fixed excess-correlation operator chi on the full space.
// tau is the image of a = 0; column j of T is image(e_j) - tau.
// Throws if chi carries a nonzero system or environment marginal: the probe
// inputs would no longer be labelled by their own Bloch vector, and the map
// would not be affine in a.
AffineMap extract_map(const ComplexMatrix& u, int n_qubits, int system_site,
                      const ComplexMatrix& env_state,
                      const std::optional<ComplexMatrix>& chi = std::nullopt,
                      const Tolerances& tols = default_tols());

}  // namespace qmaps
