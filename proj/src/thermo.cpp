#include "qmaps/thermo.hpp"

#include "qmaps/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmaps {

namespace {

// Support cutoff separating true zero eigenvalues from round-off.
constexpr double kSupportEps = 1e-12;

double trace_norm(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().sum();
}

}  // namespace

double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                        const Tolerances& tols) {
    if (!is_density_matrix(rho, tols) || !is_density_matrix(sigma, tols))
        throw std::invalid_argument("relative_entropy: inputs must be density matrices");
    if (rho.rows() != sigma.rows())
        throw std::invalid_argument("relative_entropy: dimension mismatch");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> er(rho), es(sigma);

    // support(rho) within support(sigma): any rho-eigenvector with weight on a
    // sigma-kernel direction sends D to +infinity
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        if (es.eigenvalues()[k] > kSupportEps) continue;
        const Eigen::VectorXcd kernel_dir = es.eigenvectors().col(k);
        const double weight = (kernel_dir.adjoint() * rho * kernel_dir)(0, 0).real();
        if (weight > kSupportEps) return std::numeric_limits<double>::infinity();
    }

    // Tr rho log rho, with 0 log 0 = 0
    double d = 0.0;
    for (Eigen::Index k = 0; k < er.eigenvalues().size(); ++k) {
        const double p = er.eigenvalues()[k];
        if (p > kSupportEps) d += p * std::log(p);
    }
    // - Tr rho log sigma over the support of sigma
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double q = es.eigenvalues()[k];
        if (q <= kSupportEps) continue;
        const Eigen::VectorXcd v = es.eigenvectors().col(k);
        d -= (v.adjoint() * rho * v)(0, 0).real() * std::log(q);
    }
    return d;
}

double delta_D(const AffineMap& m, const BlochVector& a0, double r_g) {
    if (a0.norm() > 1.0 + default_tols().structural_zero)
        throw std::invalid_argument("delta_D: |a0| > 1");
    const BlochVector out = apply(m, a0);
    return relative_entropy(bloch_to_density(out), bloch_to_density(gibbs_bloch(r_g)));
}

double l1_coherence(const BlochVector& a) {
    return std::sqrt(a.a1 * a.a1 + a.a2 * a.a2);
}

std::vector<double> coherence_trajectory(const AffineMap& m, const BlochVector& a0, int n) {
    if (n < 1) throw std::invalid_argument("coherence_trajectory: n must be >= 1");
    std::vector<double> out;
    out.reserve(n + 1);
    for (const BlochVector& a : iterate(m, a0, n)) out.push_back(l1_coherence(a));
    return out;
}

ConvergenceResult convergence_steps(const AffineMap& m, const BlochVector& a0,
                                    double eps, int n_max) {
    if (eps <= 0.0) throw std::invalid_argument("convergence_steps: eps must be > 0");
    if (n_max < 1) throw std::invalid_argument("convergence_steps: n_max must be >= 1");

    // trace norm of the density-matrix difference; iterates of non-CP maps
    // may leave the Bloch ball, so the difference is built directly
    auto step_distance = [](const BlochVector& x, const BlochVector& y) {
        const Eigen::Vector3d d = x.vec() - y.vec();
        ComplexMatrix delta = 0.5 * (d[0] * pauli_x() + d[1] * pauli_y() + d[2] * pauli_z());
        return trace_norm(delta);
    };

    BlochVector cur = apply(m, a0);
    if (step_distance(cur, a0) < eps) return {1, true};  // stationary input

    for (int n = 1; n <= n_max; ++n) {
        const BlochVector next = apply(m, cur);
        if (step_distance(next, cur) < eps) return {n, true};
        cur = next;
    }
    return {n_max, false};
}

Trajectory make_trajectory(const AffineMap& m, const BlochVector& a0, int n,
                           const std::string& label,
                           std::vector<std::pair<std::string, double>> params) {
    return Trajectory{iterate(m, a0, n), label, std::move(params)};
}

}  // namespace qmaps
