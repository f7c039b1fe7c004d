// Shared value types and the global tolerance record.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

namespace qmaps {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;

// Dense square complex matrix; carrier for density matrices, Hamiltonians
// and unitaries. Qubit ordering convention, fixed repo-wide: site 1 is the
// leftmost Kronecker factor, i.e. the most significant bit of the row index.
using ComplexMatrix = Eigen::MatrixXcd;

// 3x3 real matrix of two-qubit Pauli correlation coefficients c_ij,
// multiplying sigma_i (system) x sigma_j (environment).
using CorrelationMatrix = Eigen::Matrix3d;

struct Tolerances {
    double structural_zero = 1e-12;  // treat |x| below this as a structural zero
    double psd_floor = -1e-10;       // eigenvalue floor for PSD checks
    double coeff_cutoff = 1e-12;     // drop Pauli coefficients below this
};

inline const Tolerances& default_tols() {
    static const Tolerances tols{};
    return tols;
}

// Bloch vector (a1, a2, a3); |a| <= 1 for physical qubit states.
struct BlochVector {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    BlochVector() = default;
    BlochVector(double x, double y, double z) : a1(x), a2(y), a3(z) {}
    explicit BlochVector(const Eigen::Vector3d& v) : a1(v[0]), a2(v[1]), a3(v[2]) {}

    Eigen::Vector3d vec() const { return {a1, a2, a3}; }
    double norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }
};

inline double distance(const BlochVector& a, const BlochVector& b) {
    return (a.vec() - b.vec()).norm();
}

}  // namespace qmaps
