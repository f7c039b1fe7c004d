#include "qmaps/harness.hpp"

#include "qmaps/affine.hpp"
#include "qmaps/constructions.hpp"
#include "qmaps/linalg.hpp"
#include "qmaps/pauli.hpp"
#include "qmaps/states.hpp"
#include "qmaps/u1.hpp"

#include <json.hpp>

#include <random>
#include <stdexcept>

namespace qmaps {

namespace {

constexpr double kClaimTol = 1e-12;

PauliString random_string(int n, std::mt19937_64& rng) {
    static const char kLabels[4] = {'I', 'X', 'Y', 'Z'};
    std::uniform_int_distribution<int> pick(0, 3);
    PauliString s;
    s.ops.resize(n);
    for (int k = 0; k < n; ++k) s.ops[k] = kLabels[pick(rng)];
    return s;
}

// Largest |coefficient| on a wrong-charge string in U s U^dagger. Decomposed
// with no cutoff so the round-off tail is measured, not discarded.
double charge_violation(const ComplexMatrix& u, const PauliString& s) {
    const int want = s.charge();
    double violation = 0.0;
    for (const auto& [label, alpha] : conjugate_decompose(u, s, 0.0).terms)
        if (PauliString(label).charge() != want)
            violation = std::max(violation, std::abs(alpha));
    return violation;
}

// Largest off-diagonal magnitude over all single-site reduced states.
double reduced_offdiagonal(const ComplexMatrix& rho, int n) {
    double worst = 0.0;
    for (int site = 1; site <= n; ++site) {
        const ComplexMatrix red = partial_trace(rho, n, {site});
        worst = std::max(worst, std::abs(red(0, 1)));
    }
    return worst;
}

void finalize(VerificationReport& r) {
    r.control_ok = r.control_violation > 1e-6;
    r.passed = (r.max_violation < r.tolerance) && r.control_ok;
}

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["claim_id"] = claim_id;
    j["trials"] = trials;
    j["max_violation"] = max_violation;
    j["tolerance"] = tolerance;
    j["passed"] = passed;
    j["seed"] = seed;
    j["control_violation"] = control_violation;
    j["control_ok"] = control_ok;
    return j.dump();
}

int default_trials(int n) { return n <= 3 ? 1000 : 200; }

VerificationReport verify_charge_conservation(int n, int trials, std::uint64_t seed) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("verify_charge_conservation: n must be in 2..4");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> subseed;

    VerificationReport rep;
    rep.claim_id = "charge_conservation_n" + std::to_string(n);
    rep.trials = trials;
    rep.tolerance = kClaimTol;
    rep.seed = seed;

    for (int k = 0; k < trials; ++k) {
        const U1Unitary u = random_u1_unitary(n, subseed(rng));
        const PauliString s = random_string(n, rng);
        rep.max_violation = std::max(rep.max_violation, charge_violation(u.matrix, s));
    }

    // control: a single-site x rotation is not U(1) symmetric and mixes charges
    ComplexMatrix hx = kron(pauli_x(), pauli_i());
    for (int s = 2; s < n; ++s) hx = kron(hx, pauli_i());
    const ComplexMatrix bad = expm_hermitian(hx, 0.7);
    PauliString zfirst;
    zfirst.ops.assign(n, 'I');
    zfirst.ops[0] = 'Z';
    rep.control_violation = charge_violation(bad, zfirst);

    finalize(rep);
    return rep;
}

VerificationReport verify_no_coherence_from_diagonal(int n, int trials, std::uint64_t seed) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("verify_no_coherence_from_diagonal: n must be in 2..4");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> subseed;
    std::uniform_real_distribution<double> z(-1.0, 1.0);

    VerificationReport rep;
    rep.claim_id = "no_coherence_n" + std::to_string(n);
    rep.trials = trials;
    rep.tolerance = kClaimTol;
    rep.seed = seed;

    for (int k = 0; k < trials; ++k) {
        const U1Unitary u = random_u1_unitary(n, subseed(rng));

        std::vector<double> zs(n);
        for (double& v : zs) v = z(rng);
        const ComplexMatrix rho = diagonal_product_state(zs);
        const ComplexMatrix evolved = u.matrix * rho * u.matrix.adjoint();
        rep.max_violation = std::max(rep.max_violation, reduced_offdiagonal(evolved, n));

        // the extracted map must likewise carry no transverse shift
        std::vector<double> env_zs(zs.begin() + 1, zs.end());
        ComplexMatrix env = diagonal_product_state(env_zs);
        const AffineMap m = extract_map(u.matrix, n, 1, env);
        rep.max_violation =
            std::max({rep.max_violation, std::abs(m.tau[0]), std::abs(m.tau[1])});
    }

    // control: coherent environment site b1 = 0.5 must produce transverse terms
    double control = 0.0;
    for (int k = 0; k < 20; ++k) {
        const U1Unitary u = random_u1_unitary(n, subseed(rng));
        std::vector<BlochVector> factors(n - 1, BlochVector{0, 0, 0.2});
        factors[0] = BlochVector{0.5, 0.0, 0.2};
        const AffineMap m = extract_map(u.matrix, n, 1, product_state(factors));
        control = std::max({control, std::abs(m.tau[0]), std::abs(m.tau[1])});
    }
    rep.control_violation = control;

    finalize(rep);
    return rep;
}

VerificationReport verify_even_charge_correlations_stay_pc(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> subseed;
    std::uniform_real_distribution<double> z(-0.4, 0.4);

    VerificationReport rep;
    rep.claim_id = "even_charge_pc";
    rep.trials = trials;
    rep.tolerance = kClaimTol;
    rep.seed = seed;

    for (int k = 0; k < trials; ++k) {
        const U1Unitary u = random_u1_unitary(2, subseed(rng));
        const double b3 = z(rng), gamma = z(rng);

        // XX + YY and XY - YX correlations both carry charge +1
        CorrelationMatrix c = CorrelationMatrix::Zero();
        c(0, 0) = c(1, 1) = gamma;
        const double asym = z(rng);
        c(0, 1) = -asym;
        c(1, 0) = asym;

        const AffineMap m = extract_map(u.matrix, 2, 1, bloch_to_density({0, 0, b3}),
                                        correlation_operator(c));
        rep.max_violation =
            std::max({rep.max_violation, std::abs(m.tau[0]), std::abs(m.tau[1])});
    }

    // control: odd-charge correlation c31 feeds the transverse shift
    double control = 0.0;
    for (int k = 0; k < 20; ++k) {
        const U1Unitary u = random_u1_unitary(2, subseed(rng));
        CorrelationMatrix c = CorrelationMatrix::Zero();
        c(2, 0) = 0.2;
        const AffineMap m = extract_map(u.matrix, 2, 1, bloch_to_density({0, 0, 0.2}),
                                        correlation_operator(c));
        control = std::max({control, std::abs(m.tau[0]), std::abs(m.tau[1])});
    }
    rep.control_violation = control;

    finalize(rep);
    return rep;
}

VerificationReport verify_hierarchy(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    VerificationReport rep;
    rep.claim_id = "hierarchy";
    rep.trials = trials;
    rep.tolerance = 1e-10;
    rep.seed = seed;

    for (int k = 0; k < trials; ++k) {
        // phase-covariant maps preserve their own fixed point
        const double j = 0.15 + 1.2 * uni(rng);
        const double h = 1.5 * uni(rng);
        const double b3 = -0.9 + 1.8 * uni(rng);
        const AffineMap pc = phi_pc(j, h, b3);
        if (std::abs(1.0 - pc.T(2, 2)) > 1e-6) {
            const double fp = pc.tau[2] / (1.0 - pc.T(2, 2));
            if (std::abs(fp) <= 1.0) {
                const BlochVector g{0, 0, fp};
                rep.max_violation =
                    std::max(rep.max_violation, distance(apply(pc, g), g));
            }
        }
        if (!is_cptp(pc)) rep.max_violation = std::max(rep.max_violation, 1.0);

        // feasible three-qubit GP maps with a coherent resource break
        // phase covariance and stay CPTP
        const double b3s = (uni(rng) < 0.5 ? -1.0 : 1.0) * (0.2 + 0.6 * uni(rng));
        const double rg = -std::copysign(0.1 + 0.3 * uni(rng), b3s);
        const GpSolution sol = solve_gp_constraints(b3s, rg);
        if (!sol.feasible) continue;
        const double room = std::sqrt(std::max(0.0, 1.0 - sol.f3 * sol.f3));
        const double mag = (0.15 + 0.8 * uni(rng)) * room;
        const double ang = 6.283185307179586 * uni(rng);
        ThreeQubitParams p{sol.j, h, b3s, mag * std::cos(ang), mag * std::sin(ang), sol.f3};
        const AffineMap gp = phi_gp_3qubit(p);
        if (!is_gibbs_preserving(gp, rg, 1e-10))
            rep.max_violation = std::max(rep.max_violation, 1.0);
        if (mag > 0.1 && is_phase_covariant(gp, 1e-8))
            rep.max_violation = std::max(rep.max_violation, 1.0);
        if (!is_cptp(gp)) rep.max_violation = std::max(rep.max_violation, 1.0);
    }

    // identity belongs to every class
    const AffineMap id = AffineMap::identity();
    if (!(is_cptp(id) && is_phase_covariant(id) && is_gibbs_preserving(id, 0.37) &&
          is_unital(id)))
        rep.max_violation = std::max(rep.max_violation, 1.0);

    // control: a coherent-resource GP map must register as non-phase-covariant
    const GpSolution sol = solve_gp_constraints(0.3, -0.3);
    const AffineMap gp =
        phi_gp_3qubit(ThreeQubitParams{sol.j, 0.785, 0.3, 0.2, 0.1, sol.f3});
    rep.control_violation = phase_covariance_defect(gp);

    finalize(rep);
    return rep;
}

}  // namespace qmaps
