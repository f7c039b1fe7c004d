// Pauli strings, the charge functional, and operator decomposition into the
// 4^n string basis.

#pragma once

#include "qmaps/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qmaps {

// Tensor product of single-site operators from {I, X, Y, Z}; site 1 is the
// leftmost label / most significant bit.
struct PauliString {
    std::vector<char> ops;  // each one of 'I', 'X', 'Y', 'Z'

    PauliString() = default;
    explicit PauliString(const std::string& labels);

    int size() const { return static_cast<int>(ops.size()); }
    std::string str() const { return std::string(ops.begin(), ops.end()); }

    // (-1)^(n_x + n_y): parity of coherence-generating factors.
    int charge() const;

    ComplexMatrix matrix() const;

    bool operator<(const PauliString& o) const { return ops < o.ops; }
    bool operator==(const PauliString& o) const { return ops == o.ops; }
};

// Site-wise label product with phases dropped (charge is insensitive to them).
PauliString label_product(const PauliString& a, const PauliString& b);

// Coefficients alpha_k with M = sum_k alpha_k O_k. Hermitian sources have
// real alpha_k. Keys are the label strings, in lexicographic order.
struct PauliDecomposition {
    std::map<std::string, Complex> terms;
    int n_qubits = 0;

    ComplexMatrix reconstruct() const;
    std::string to_json() const;
};

// alpha_k = Tr(O_k M) / 2^n; coefficients below the cutoff are dropped.
// Throws on non-power-of-two dimension.
PauliDecomposition decompose(const ComplexMatrix& m,
                             double coeff_cutoff = default_tols().coeff_cutoff);

// Decomposition of U s U^dagger.
PauliDecomposition conjugate_decompose(const ComplexMatrix& u, const PauliString& s,
                                       double coeff_cutoff = default_tols().coeff_cutoff);

// N_G = 2^(2n-1): number of strings with an even count of X/Y factors.
// Throws for n < 1.
std::int64_t count_charge_conserving_strings(int n);

// Exhaustive enumeration of all 4^n strings (intended for n <= 4 checks).
std::int64_t count_charge_conserving_strings_by_enumeration(int n);

// Efficient Tr(O_k M) without materializing O_k.
Complex pauli_trace(const PauliString& s, const ComplexMatrix& m);

std::vector<PauliString> all_strings(int n);

}  // namespace qmaps
