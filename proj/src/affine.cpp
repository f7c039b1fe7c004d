#include "qmaps/affine.hpp"

#include "qmaps/linalg.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qmaps {

Eigen::Matrix4d AffineMap::augmented() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m.block<3, 1>(1, 0) = tau;
    m.block<3, 3>(1, 1) = T;
    return m;
}

std::string AffineMap::to_json() const {
    nlohmann::json j;
    j["tau"] = {tau[0], tau[1], tau[2]};
    j["T"] = nlohmann::json::array();
    for (int r = 0; r < 3; ++r)
        j["T"].push_back({T(r, 0), T(r, 1), T(r, 2)});
    return j.dump();
}

std::string AffineMap::to_csv() const {
    const Eigen::Matrix4d m = augmented();
    std::string out;
    char buf[32];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
            out += buf;
            out += (c == 3) ? '\n' : ',';
        }
    }
    return out;
}

BlochVector apply(const AffineMap& m, const BlochVector& a) {
    return BlochVector(m.tau + m.T * a.vec());
}

AffineMap compose(const AffineMap& m2, const AffineMap& m1) {
    return AffineMap{m2.tau + m2.T * m1.tau, m2.T * m1.T};
}

std::vector<BlochVector> iterate(const AffineMap& m, const BlochVector& a0, int n) {
    if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
    std::vector<BlochVector> traj;
    traj.reserve(n + 1);
    traj.push_back(a0);
    for (int k = 0; k < n; ++k) traj.push_back(apply(m, traj.back()));
    return traj;
}

ComplexMatrix apply_to_operator(const AffineMap& m, const ComplexMatrix& op) {
    if (op.rows() != 2 || op.cols() != 2)
        throw std::invalid_argument("apply_to_operator: expected a 2x2 operator");
    const Complex m0 = 0.5 * op.trace();
    Eigen::Vector3cd v;
    v[0] = 0.5 * (op * pauli_x()).trace();
    v[1] = 0.5 * (op * pauli_y()).trace();
    v[2] = 0.5 * (op * pauli_z()).trace();
    const Eigen::Vector3cd w = m0 * m.tau.cast<Complex>() + m.T.cast<Complex>() * v;
    return m0 * pauli_i() + w[0] * pauli_x() + w[1] * pauli_y() + w[2] * pauli_z();
}

ComplexMatrix choi_matrix(const AffineMap& m) {
    // (Phi x id) sum_ij |ii><jj|; normalization is immaterial for positivity
    ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(2, 2);
            e(i, j) = 1.0;
            choi += kron(apply_to_operator(m, e), e);
        }
    }
    return choi;
}

bool is_cptp(const AffineMap& m, double tol) {
    const ComplexMatrix choi = choi_matrix(m);
    if (std::abs(choi.trace() - Complex(2.0, 0.0)) > 1e-9) return false;
    return min_eigenvalue(choi) >= -tol;
}

bool pc_cp_inequalities(double lam, double lam_z, double tau_z, double tol) {
    return std::abs(lam_z) + std::abs(tau_z) <= 1.0 + tol &&
           4.0 * lam * lam + tau_z * tau_z <= (1.0 + lam_z) * (1.0 + lam_z) + tol;
}

double phase_covariance_defect(const AffineMap& m) {
    double d = std::max(std::abs(m.tau[0]), std::abs(m.tau[1]));
    d = std::max(d, std::abs(m.T(0, 2)));
    d = std::max(d, std::abs(m.T(1, 2)));
    d = std::max(d, std::abs(m.T(2, 0)));
    d = std::max(d, std::abs(m.T(2, 1)));
    d = std::max(d, std::abs(m.T(0, 0) - m.T(1, 1)));
    d = std::max(d, std::abs(m.T(0, 1) + m.T(1, 0)));
    return d;
}

bool is_phase_covariant(const AffineMap& m, double tol) {
    return phase_covariance_defect(m) < tol;
}

bool is_gibbs_preserving(const AffineMap& m, double r_g, double tol) {
    const BlochVector g = gibbs_bloch(r_g);
    return distance(apply(m, g), g) < tol;
}

bool is_unital(const AffineMap& m, double tol) { return m.tau.norm() < tol; }

FixedPoint fixed_point(const AffineMap& m, double tol) {
    const Eigen::Matrix3d a = Eigen::Matrix3d::Identity() - m.T;
    if (std::abs(a.determinant()) <= tol)
        throw std::runtime_error("fixed_point: I - T is singular; the map has a "
                                 "fixed-point family");
    const Eigen::Vector3d x = a.fullPivLu().solve(m.tau);
    return FixedPoint{BlochVector(x), x.norm() <= 1.0 + default_tols().structural_zero};
}

std::string MapClassification::to_json() const {
    nlohmann::json j;
    j["cptp"] = cptp;
    j["unital"] = unital;
    j["phase_covariant"] = phase_covariant;
    if (gibbs_preserving_for)
        j["gibbs_preserving_for"] = *gibbs_preserving_for;
    else
        j["gibbs_preserving_for"] = nullptr;
    j["energy_preserving_origin"] = energy_preserving_origin;
    return j.dump();
}

MapClassification classify(const AffineMap& m, std::optional<double> r_g,
                           bool energy_preserving_origin, const Tolerances& tols) {
    MapClassification c;
    c.cptp = is_cptp(m, -tols.psd_floor);
    c.unital = is_unital(m, tols.structural_zero);
    c.phase_covariant = is_phase_covariant(m, tols.structural_zero);
    if (r_g && is_gibbs_preserving(m, *r_g, 1e-10)) c.gibbs_preserving_for = *r_g;
    c.energy_preserving_origin = energy_preserving_origin;
    return c;
}

AffineMap extract_map(const ComplexMatrix& u, int n_qubits, int system_site,
                      const ComplexMatrix& env_state,
                      const std::optional<ComplexMatrix>& chi, const Tolerances& tols) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    if (u.rows() != dim || u.cols() != dim)
        throw std::invalid_argument("extract_map: unitary dimension mismatch");
    if (system_site < 1 || system_site > n_qubits)
        throw std::invalid_argument("extract_map: system_site outside 1..n");
    if (env_state.rows() != dim / 2 || env_state.cols() != dim / 2)
        throw std::invalid_argument("extract_map: environment dimension mismatch");
    if (!is_density_matrix(env_state, tols))
        throw std::invalid_argument("extract_map: environment is not a valid density matrix");

    // Permutation placing the system factor at system_site, environment
    // factors at the remaining sites in increasing order.
    std::vector<int> perm(n_qubits);
    perm[system_site - 1] = 1;
    for (int s = 1, src = 2; s <= n_qubits; ++s)
        if (s != system_site) perm[s - 1] = src++;
    const bool trivial_perm = (system_site == 1);

    if (chi) {
        if (chi->rows() != dim || chi->cols() != dim)
            throw std::invalid_argument("extract_map: chi dimension mismatch");
        const double sys_marginal =
            max_abs(partial_trace(*chi, n_qubits, {system_site}));
        if (sys_marginal > tols.structural_zero)
            throw std::invalid_argument(
                "extract_map: chi carries a nonzero system marginal (" +
                std::to_string(sys_marginal) + "); the map would not be affine in a");
        std::vector<int> env_sites;
        for (int s = 1; s <= n_qubits; ++s)
            if (s != system_site) env_sites.push_back(s);
        const double env_marginal = max_abs(partial_trace(*chi, n_qubits, env_sites));
        if (env_marginal > tols.structural_zero)
            throw std::invalid_argument(
                "extract_map: chi carries a nonzero environment marginal (" +
                std::to_string(env_marginal) + "), i.e. a system identity component");
    }

    // Bloch components read off linearly; probe outputs are not validated as
    // density matrices since chi may take individual probes outside the
    // physical set while the extracted map is still well defined.
    auto image = [&](const BlochVector& a) {
        ComplexMatrix joint = kron(bloch_to_density(a, tols), env_state);
        if (!trivial_perm) joint = permute_qubits(joint, perm);
        if (chi) joint += *chi;
        const ComplexMatrix evolved = u * joint * u.adjoint();
        const ComplexMatrix red = partial_trace(evolved, n_qubits, {system_site});
        return Eigen::Vector3d{(red * pauli_x()).trace().real(),
                               (red * pauli_y()).trace().real(),
                               (red * pauli_z()).trace().real()};
    };

    AffineMap m;
    m.tau = image(BlochVector{0, 0, 0});
    m.T.col(0) = image(BlochVector{1, 0, 0}) - m.tau;
    m.T.col(1) = image(BlochVector{0, 1, 0}) - m.tau;
    m.T.col(2) = image(BlochVector{0, 0, 1}) - m.tau;
    return m;
}

}  // namespace qmaps
