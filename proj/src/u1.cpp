#include "qmaps/u1.hpp"

#include "qmaps/linalg.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qmaps {

namespace {

ComplexMatrix site_op(const ComplexMatrix& op, int site, int n) {
    ComplexMatrix m = (site == 1) ? op : pauli_i();
    for (int s = 2; s <= n; ++s) m = kron(m, s == site ? op : pauli_i());
    return m;
}

// Indices of computational basis states with exactly m excited qubits,
// in lexicographic order.
std::vector<Eigen::Index> excitation_subspace(int n, int m) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index k = 0; k < (Eigen::Index(1) << n); ++k)
        if (std::popcount(static_cast<unsigned long long>(k)) == m) idx.push_back(k);
    return idx;
}

// Haar sample via QR of a complex Ginibre matrix with phase-fixed diagonal.
ComplexMatrix haar_unitary(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < d; ++k) {
        const Complex rkk = r(k, k);
        q.col(k) *= (std::abs(rkk) > 0.0) ? rkk / std::abs(rkk) : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace

ComplexMatrix generator(int n) {
    if (n < 1) throw std::invalid_argument("generator: n must be >= 1");
    const Eigen::Index dim = Eigen::Index(1) << n;
    ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k)
        g(k, k) = static_cast<double>(n - 2 * std::popcount(static_cast<unsigned long long>(k)));
    return g;
}

ComplexMatrix build_xx_hamiltonian_2q(double h1, double h2, double j) {
    return 0.5 * h1 * kron(pauli_z(), pauli_i()) + 0.5 * h2 * kron(pauli_i(), pauli_z()) +
           0.5 * j * (kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()));
}

ComplexMatrix build_xx_hamiltonian_3q(double h, double j) {
    const int n = 3;  // sites (S, E, R) = (1, 2, 3)
    ComplexMatrix hmat =
        j * (site_op(pauli_x(), 1, n) * site_op(pauli_x(), 2, n) +
             site_op(pauli_y(), 1, n) * site_op(pauli_y(), 2, n) +
             site_op(pauli_x(), 1, n) * site_op(pauli_x(), 3, n) +
             site_op(pauli_y(), 1, n) * site_op(pauli_y(), 3, n));
    for (int s = 1; s <= n; ++s) hmat += h * site_op(pauli_z(), s, n);
    return hmat;
}

HamiltonianSpec HamiltonianSpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string kind_str;
    if (!(in >> kind_str))
        throw std::invalid_argument("HamiltonianSpec: empty specification");

    HamiltonianSpec spec;
    if (kind_str == "xx2q") spec.kind = Kind::xx2q;
    else if (kind_str == "xx3q") spec.kind = Kind::xx3q;
    else
        throw std::invalid_argument("HamiltonianSpec: unknown kind '" + kind_str +
                                    "' (expected xx2q or xx3q)");

    for (std::string token; in >> token;) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("HamiltonianSpec: expected key=value, got '" +
                                        token + "'");
        const std::string key = token.substr(0, eq);
        const double value = std::stod(token.substr(eq + 1));
        if (key == "J") spec.j = value;
        else if (key == "h") spec.h = value;
        else if (key == "h1") spec.h1 = value;
        else if (key == "h2") spec.h2 = value;
        else
            throw std::invalid_argument("HamiltonianSpec: unknown parameter '" + key + "'");
    }
    return spec;
}

ComplexMatrix HamiltonianSpec::assemble() const {
    switch (kind) {
        case Kind::xx2q: return build_xx_hamiltonian_2q(h1, h2, j);
        case Kind::xx3q: return build_xx_hamiltonian_3q(h, j);
        default: break;
    }
    if (!is_hermitian(custom, 1e-10))
        throw std::invalid_argument("HamiltonianSpec: custom matrix is not Hermitian");
    return custom;
}

U1Unitary build_general_u1_2q(double phi0, double phi1, double phi2,
                              double alpha, double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    ComplexMatrix u = ComplexMatrix::Zero(4, 4);
    u(0, 0) = std::exp(Complex(0, phi0));
    u(1, 1) = std::exp(Complex(0, -(alpha + phi1))) * c;
    u(1, 2) = -std::exp(Complex(0, phi1 - alpha)) * s;
    u(2, 1) = std::exp(Complex(0, -(phi1 - alpha))) * s;
    u(2, 2) = std::exp(Complex(0, alpha + phi1)) * c;
    u(3, 3) = std::exp(Complex(0, phi2));
    return U1Unitary{std::move(u), 2, {1, 2, 1}};
}

U1Unitary random_u1_unitary(int n, std::uint64_t seed) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("random_u1_unitary: n must be in 1..4");
    std::mt19937_64 rng(seed);
    const Eigen::Index dim = Eigen::Index(1) << n;
    ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
    std::vector<Eigen::Index> dims;
    for (int m = 0; m <= n; ++m) {
        const auto idx = excitation_subspace(n, m);
        dims.push_back(static_cast<Eigen::Index>(idx.size()));
        const ComplexMatrix block = haar_unitary(idx.size(), rng);
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) u(idx[a], idx[b]) = block(a, b);
    }
    return U1Unitary{std::move(u), n, std::move(dims)};
}

bool is_u1_symmetric(const ComplexMatrix& u, double tol) {
    const int n = qubit_count(u);
    return commutator_norm(u, generator(n)) < tol;
}

}  // namespace qmaps
