#include "qmaps/pauli.hpp"

#include "qmaps/linalg.hpp"

#include <json.hpp>

#include <stdexcept>

namespace qmaps {

namespace {

int label_index(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
        default: throw std::invalid_argument(std::string("invalid Pauli label '") + c + "'");
    }
}

// Bit mask of sites where the string acts with X or Y (site 1 = MSB).
Eigen::Index x_mask(const PauliString& s) {
    const int n = s.size();
    Eigen::Index mask = 0;
    for (int k = 0; k < n; ++k)
        if (s.ops[k] == 'X' || s.ops[k] == 'Y') mask |= Eigen::Index(1) << (n - 1 - k);
    return mask;
}

// O_s |k> = phase(k) |k ^ x_mask>.
Complex state_phase(const PauliString& s, Eigen::Index k) {
    const int n = s.size();
    Complex phase = 1.0;
    for (int site = 0; site < n; ++site) {
        const int bit = static_cast<int>((k >> (n - 1 - site)) & 1);
        switch (s.ops[site]) {
            case 'Y': phase *= bit ? Complex(0, -1) : Complex(0, 1); break;
            case 'Z': if (bit) phase = -phase; break;
            default: break;
        }
    }
    return phase;
}

}  // namespace

PauliString::PauliString(const std::string& labels) {
    if (labels.empty()) throw std::invalid_argument("PauliString: empty label string");
    for (char c : labels) label_index(c);
    ops.assign(labels.begin(), labels.end());
}

int PauliString::charge() const {
    int nxy = 0;
    for (char c : ops) nxy += (c == 'X' || c == 'Y');
    return (nxy % 2 == 0) ? 1 : -1;
}

ComplexMatrix PauliString::matrix() const {
    const ComplexMatrix* single[4] = {&pauli_i(), &pauli_x(), &pauli_y(), &pauli_z()};
    ComplexMatrix m = *single[label_index(ops[0])];
    for (int k = 1; k < size(); ++k) m = kron(m, *single[label_index(ops[k])]);
    return m;
}

PauliString label_product(const PauliString& a, const PauliString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("label_product: length mismatch");
    PauliString out;
    out.ops.resize(a.ops.size());
    for (std::size_t k = 0; k < a.ops.size(); ++k) {
        const char x = a.ops[k], y = b.ops[k];
        if (x == 'I') out.ops[k] = y;
        else if (y == 'I') out.ops[k] = x;
        else if (x == y) out.ops[k] = 'I';
        else out.ops[k] = static_cast<char>('X' + 'Y' + 'Z' - x - y);
    }
    return out;
}

Complex pauli_trace(const PauliString& s, const ComplexMatrix& m) {
    const Eigen::Index dim = Eigen::Index(1) << s.size();
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("pauli_trace: dimension mismatch");
    const Eigen::Index x = x_mask(s);
    Complex sum = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) sum += state_phase(s, j ^ x) * m(j ^ x, j);
    return sum;
}

std::vector<PauliString> all_strings(int n) {
    if (n < 1) throw std::invalid_argument("all_strings: n must be >= 1");
    static const char kLabels[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<PauliString> out;
    const std::int64_t total = std::int64_t(1) << (2 * n);
    out.reserve(total);
    for (std::int64_t code = 0; code < total; ++code) {
        PauliString s;
        s.ops.resize(n);
        for (int k = 0; k < n; ++k) s.ops[k] = kLabels[(code >> (2 * (n - 1 - k))) & 3];
        out.push_back(std::move(s));
    }
    return out;
}

ComplexMatrix PauliDecomposition::reconstruct() const {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (const auto& [label, alpha] : terms) {
        const PauliString s(label);
        const Eigen::Index x = x_mask(s);
        for (Eigen::Index k = 0; k < dim; ++k) m(k ^ x, k) += alpha * state_phase(s, k);
    }
    return m;
}

std::string PauliDecomposition::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [label, alpha] : terms)
        arr.push_back({{"string", label}, {"re", alpha.real()}, {"im", alpha.imag()}});
    return arr.dump();
}

PauliDecomposition decompose(const ComplexMatrix& m, double coeff_cutoff) {
    const int n = qubit_count(m);  // throws on bad dimension
    const double norm = 1.0 / static_cast<double>(Eigen::Index(1) << n);
    PauliDecomposition d;
    d.n_qubits = n;
    for (const PauliString& s : all_strings(n)) {
        const Complex alpha = pauli_trace(s, m) * norm;
        if (std::abs(alpha) > coeff_cutoff) d.terms.emplace(s.str(), alpha);
    }
    return d;
}

PauliDecomposition conjugate_decompose(const ComplexMatrix& u, const PauliString& s,
                                       double coeff_cutoff) {
    const ComplexMatrix op = s.matrix();
    if (u.rows() != op.rows() || u.cols() != op.cols())
        throw std::invalid_argument("conjugate_decompose: dimension mismatch");
    return decompose(u * op * u.adjoint(), coeff_cutoff);
}

std::int64_t count_charge_conserving_strings(int n) {
    if (n < 1) throw std::invalid_argument("count_charge_conserving_strings: n must be >= 1");
    // 2^n * sum_j binom(n, 2j), which equals 2^(2n-1) for n > 0
    std::int64_t binom_sum = 0;
    std::int64_t binom = 1;  // binom(n, 0)
    for (int k = 0; k <= n; ++k) {
        if (k % 2 == 0) binom_sum += binom;
        binom = binom * (n - k) / (k + 1);
    }
    return (std::int64_t(1) << n) * binom_sum;
}

std::int64_t count_charge_conserving_strings_by_enumeration(int n) {
    std::int64_t count = 0;
    for (const PauliString& s : all_strings(n)) count += (s.charge() == 1);
    return count;
}

}  // namespace qmaps
