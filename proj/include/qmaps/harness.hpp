// Randomized verification campaigns for the structural claims: charge
// conservation, the no-coherence-from-diagonal no-go, even-charge
// correlations, and the map-class hierarchy. Every campaign embeds a control
// that must fail; a passing control marks the report invalid.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmaps {

struct VerificationReport {
    std::string claim_id;
    int trials = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::uint64_t seed = 0;
    double control_violation = 0.0;  // violation produced by the control case
    bool control_ok = false;         // control tripped as it must

    std::string to_json() const;  // one JSON object per line
};

// Random U(1) unitary x random Pauli string: every output term must carry the
// input charge. Control: a single-site x rotation mixes charges. 2 <= n <= 4.
VerificationReport verify_charge_conservation(int n, int trials, std::uint64_t seed);

// Random diagonal product states under random U(1) unitaries: all single-site
// reduced states stay diagonal and the extracted map has tau_x = tau_y = 0.
// Control: environment site with b1 = 0.5. 2 <= n <= 4.
VerificationReport verify_no_coherence_from_diagonal(int n, int trials, std::uint64_t seed);

// Even-charge two-qubit correlations (XX+YY and XY-YX forms) on diagonal
// marginals leave tau_x = tau_y = 0, and the antisymmetric part moves only
// tau_z. Control: odd-charge correlation c31.
VerificationReport verify_even_charge_correlations_stay_pc(int trials, std::uint64_t seed);

// Sampled phase-covariant maps preserve their own fixed point; feasible
// three-qubit GP maps with a coherent resource are never phase-covariant; all
// sampled physical maps are CPTP. Control: coherent resource forced through
// the phase-covariance predicate.
VerificationReport verify_hierarchy(int trials, std::uint64_t seed);

int default_trials(int n);  // 1000 for n <= 3, 200 for n = 4

}  // namespace qmaps
