#include "qmaps/states.hpp"

#include <stdexcept>
#include <string>

namespace qmaps {

ComplexMatrix bloch_to_density(const BlochVector& a, const Tolerances& tols) {
    if (a.norm() > 1.0 + tols.structural_zero)
        throw std::invalid_argument("bloch_to_density: |a| = " + std::to_string(a.norm()) +
                                    " exceeds 1");
    ComplexMatrix rho(2, 2);
    rho << Complex(1.0 + a.a3, 0.0), Complex(a.a1, -a.a2),
           Complex(a.a1, a.a2),      Complex(1.0 - a.a3, 0.0);
    return 0.5 * rho;
}

BlochVector density_to_bloch(const ComplexMatrix& rho, const Tolerances& tols) {
    if (rho.rows() != 2 || rho.cols() != 2)
        throw std::invalid_argument("density_to_bloch: expected a 2x2 matrix");
    if (!is_density_matrix(rho, tols))
        throw std::invalid_argument("density_to_bloch: input is not a valid density matrix");
    return BlochVector{2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
                       (rho(0, 0) - rho(1, 1)).real()};
}

ComplexMatrix correlation_operator(const CorrelationMatrix& c) {
    const ComplexMatrix* s[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    ComplexMatrix chi = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (c(i, j) != 0.0) chi += c(i, j) * kron(*s[i], *s[j]);
    return 0.25 * chi;
}

ComplexMatrix build_two_qubit_state(const BlochVector& a, const BlochVector& b,
                                    const CorrelationMatrix& c, const Tolerances& tols) {
    const ComplexMatrix* s[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    ComplexMatrix rho = kron(pauli_i(), pauli_i());
    const double av[3] = {a.a1, a.a2, a.a3};
    const double bv[3] = {b.a1, b.a2, b.a3};
    for (int i = 0; i < 3; ++i)
        rho += av[i] * kron(*s[i], pauli_i()) + bv[i] * kron(pauli_i(), *s[i]);
    rho = 0.25 * rho + correlation_operator(c);

    const double lo = min_eigenvalue(rho);
    if (lo < tols.psd_floor)
        throw std::invalid_argument("build_two_qubit_state: not PSD, min eigenvalue = " +
                                    std::to_string(lo));
    return rho;
}

BlochVector gibbs_bloch(double r_g) {
    if (std::abs(r_g) > 1.0)
        throw std::invalid_argument("gibbs_bloch: |r_G| = " + std::to_string(std::abs(r_g)) +
                                    " exceeds 1");
    return BlochVector{0.0, 0.0, r_g};
}

ComplexMatrix diagonal_product_state(const std::vector<double>& zs) {
    std::vector<BlochVector> blochs;
    blochs.reserve(zs.size());
    for (double z : zs) blochs.emplace_back(0.0, 0.0, z);
    return product_state(blochs);
}

ComplexMatrix product_state(const std::vector<BlochVector>& blochs) {
    if (blochs.empty()) throw std::invalid_argument("product_state: no factors");
    ComplexMatrix rho = bloch_to_density(blochs.front());
    for (std::size_t k = 1; k < blochs.size(); ++k)
        rho = kron(rho, bloch_to_density(blochs[k]));
    return rho;
}

}  // namespace qmaps
