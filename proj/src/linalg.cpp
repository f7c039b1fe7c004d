#include "qmaps/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qmaps {

namespace {

ComplexMatrix make_pauli(int which) {
    ComplexMatrix m(2, 2);
    switch (which) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

}  // namespace

const ComplexMatrix& pauli_i() { static const ComplexMatrix m = make_pauli(0); return m; }
const ComplexMatrix& pauli_x() { static const ComplexMatrix m = make_pauli(1); return m; }
const ComplexMatrix& pauli_y() { static const ComplexMatrix m = make_pauli(2); return m; }
const ComplexMatrix& pauli_z() { static const ComplexMatrix m = make_pauli(3); return m; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

bool is_power_of_two(Eigen::Index d) { return d > 0 && (d & (d - 1)) == 0; }

int qubit_count(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || !is_power_of_two(m.rows()))
        throw std::invalid_argument("qubit_count: matrix is not square power-of-two, dim = " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    int n = 0;
    for (Eigen::Index d = m.rows(); d > 1; d >>= 1) ++n;
    return n;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) < tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols())) < tol;
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("min_eigenvalue: eigendecomposition failed");
    return solver.eigenvalues().minCoeff();
}

bool is_density_matrix(const ComplexMatrix& rho, const Tolerances& tols) {
    if (rho.rows() != rho.cols()) return false;
    if (!is_hermitian(rho, tols.structural_zero)) return false;
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) return false;
    return min_eigenvalue(rho) >= tols.psd_floor;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits,
                            const std::vector<int>& keep) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("partial_trace: dimension mismatch, expected " +
                                    std::to_string(dim) + ", got " + std::to_string(rho.rows()));
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");

    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    for (int s : kept)
        if (s < 1 || s > n_qubits)
            throw std::invalid_argument("partial_trace: site " + std::to_string(s) +
                                        " outside 1.." + std::to_string(n_qubits));

    std::vector<int> traced;
    for (int s = 1; s <= n_qubits; ++s)
        if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);

    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    // site s occupies bit (n_qubits - s): site 1 is the most significant bit
    auto bit_of = [n_qubits](int site) { return n_qubits - site; };

    ComplexMatrix out = ComplexMatrix::Zero(Eigen::Index(1) << nk, Eigen::Index(1) << nk);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        for (Eigen::Index c = 0; c < out.cols(); ++c) {
            Complex sum = 0.0;
            for (Eigen::Index e = 0; e < (Eigen::Index(1) << nt); ++e) {
                Eigen::Index row = 0, col = 0;
                for (int k = 0; k < nk; ++k) {
                    const Eigen::Index bit = bit_of(kept[k]);
                    row |= ((r >> (nk - 1 - k)) & 1) << bit;
                    col |= ((c >> (nk - 1 - k)) & 1) << bit;
                }
                for (int k = 0; k < nt; ++k) {
                    const Eigen::Index bit = bit_of(traced[k]);
                    const Eigen::Index v = (e >> (nt - 1 - k)) & 1;
                    row |= v << bit;
                    col |= v << bit;
                }
                sum += rho(row, col);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

ComplexMatrix permute_qubits(const ComplexMatrix& m, const std::vector<int>& perm) {
    const int n = qubit_count(m);
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permute_qubits: permutation length mismatch");
    std::vector<int> seen(n, 0);
    for (int p : perm) {
        if (p < 1 || p > n || seen[p - 1]++)
            throw std::invalid_argument("permute_qubits: not a permutation of 1..n");
    }

    const Eigen::Index dim = m.rows();
    auto map_index = [&](Eigen::Index src) {
        Eigen::Index dst = 0;
        for (int s = 1; s <= n; ++s) {
            const Eigen::Index bit = (src >> (n - perm[s - 1])) & 1;
            dst |= bit << (n - s);
        }
        return dst;
    };
    ComplexMatrix out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Eigen::Index pi = map_index(i);
        for (Eigen::Index j = 0; j < dim; ++j) out(pi, map_index(j)) = m(i, j);
    }
    return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
    if (!is_hermitian(h, 1e-10))
        throw std::invalid_argument("expm_hermitian: input is not Hermitian within 1e-10");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("expm_hermitian: eigendecomposition failed");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    Eigen::VectorXcd phases(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        phases[k] = std::exp(Complex(0.0, -ev[k] * t));
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
    return max_abs(a * b - b * a);
}

}  // namespace qmaps
