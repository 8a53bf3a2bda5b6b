#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dqsearch/complex_matrix.hpp"
#include "dqsearch/errors.hpp"

namespace dqs {

constexpr double kPi = 3.14159265358979323846;

// Bit-order convention used everywhere: qubit 0 is the leftmost symbol of a
// ket, and the basis index is the big-endian integer of the bit string.
// So for an m-qubit register, qubit q contributes bit (1 << (m-1-q)).

inline std::uint64_t bits_to_index(const std::string& bits) {
    std::uint64_t idx = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bit string must be over {0,1}");
        idx = (idx << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    return idx;
}

inline std::string index_to_bits(std::uint64_t idx, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if ((idx >> (width - 1 - i)) & 1) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

// A k-qubit gate as a dense 2^k x 2^k matrix. Validated unitary on
// construction; desk-scale arities only.
struct LocalUnitary {
    int arity = 0;
    std::vector<Complex> mat;  // row-major

    std::uint64_t dim() const { return std::uint64_t{1} << arity; }
    Complex at(std::uint64_t i, std::uint64_t j) const { return mat[i * dim() + j]; }

    LocalUnitary dagger() const {
        LocalUnitary out;
        out.arity = arity;
        out.mat.resize(mat.size());
        const std::uint64_t d = dim();
        for (std::uint64_t i = 0; i < d; ++i)
            for (std::uint64_t j = 0; j < d; ++j) out.mat[j * d + i] = std::conj(mat[i * d + j]);
        return out;
    }
};

inline LocalUnitary make_unitary(int arity, std::vector<Complex> entries) {
    if (arity < 0 || arity > 14) throw CapacityError("gate arity out of range");
    const std::uint64_t d = std::uint64_t{1} << arity;
    if (entries.size() != d * d) throw std::invalid_argument("gate matrix has wrong size");
    LocalUnitary g{arity, std::move(entries)};
    double worst = 0.0;
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            Complex acc = 0.0;
            for (std::uint64_t k = 0; k < d; ++k) acc += std::conj(g.mat[k * d + i]) * g.mat[k * d + j];
            worst = std::max(worst, std::abs(acc - (i == j ? Complex{1.0} : Complex{})));
        }
    }
    if (worst >= 1e-12) throw std::invalid_argument("gate matrix is not unitary");
    return g;
}

// Gate whose basis action is the permutation fn (must be an involution or at
// least a bijection on k-bit labels).
template <typename Fn>
LocalUnitary permutation_gate(int arity, Fn&& fn) {
    const std::uint64_t d = std::uint64_t{1} << arity;
    std::vector<Complex> m(d * d);
    std::vector<bool> hit(d, false);
    for (std::uint64_t x = 0; x < d; ++x) {
        const std::uint64_t y = fn(x);
        if (y >= d || hit[y]) throw std::invalid_argument("permutation_gate: fn is not a bijection");
        hit[y] = true;
        m[y * d + x] = 1.0;
    }
    return LocalUnitary{arity, std::move(m)};
}

inline LocalUnitary hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return make_unitary(1, {s, s, s, -s});
}

inline LocalUnitary pauli_x() { return make_unitary(1, {0, 1, 1, 0}); }
inline LocalUnitary pauli_z() { return make_unitary(1, {1, 0, 0, -1}); }
inline LocalUnitary identity_gate(int arity = 1) {
    return permutation_gate(arity, [](std::uint64_t x) { return x; });
}

// E(phi) = diag(1, e^{i phi})
inline LocalUnitary phase_shift_gate(double phi) {
    return make_unitary(1, {1.0, 0.0, 0.0, std::polar(1.0, phi)});
}

// s * I on one qubit; used to carry the global sign of composed iterates.
inline LocalUnitary scalar_gate(Complex s) {
    if (std::abs(std::abs(s) - 1.0) >= 1e-12) throw std::invalid_argument("scalar gate must be unit modulus");
    return make_unitary(1, {s, 0.0, 0.0, s});
}

class StateVector {
  public:
    explicit StateVector(int num_qubits) : m_(check_qubits(num_qubits)), amp_(std::uint64_t{1} << num_qubits) {
        amp_[0] = 1.0;
    }

    int num_qubits() const { return m_; }
    std::uint64_t size() const { return amp_.size(); }
    std::vector<Complex>& amplitudes() { return amp_; }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    Complex amplitude(std::uint64_t idx) const { return amp_[idx]; }

    double norm() const {
        double acc = 0.0;
        for (const Complex& a : amp_) acc += std::norm(a);
        return std::sqrt(acc);
    }

  private:
    static int check_qubits(int m) {
        if (m < 1 || m > 24) throw CapacityError("qubit count out of supported range [1,24]");
        return m;
    }

    int m_;
    std::vector<Complex> amp_;
};

inline StateVector init_basis_state(int num_qubits, const std::string& bits) {
    if (static_cast<int>(bits.size()) != num_qubits)
        throw std::invalid_argument("basis label length must equal the qubit count");
    StateVector psi(num_qubits);
    psi.amplitudes()[0] = 0.0;
    psi.amplitudes()[bits_to_index(bits)] = 1.0;
    return psi;
}

inline void validate_targets(int num_qubits, const std::vector<int>& targets, int arity) {
    if (static_cast<int>(targets.size()) != arity)
        throw std::invalid_argument("gate arity does not match the target count");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= num_qubits) throw std::invalid_argument("target qubit out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j]) throw std::invalid_argument("target qubits must be distinct");
    }
}

// Applies `gate` to the listed qubits (identity elsewhere). Target order
// fixes the tensor slots: targets[0] is the leftmost (most significant) bit
// of the gate's own basis labels.
inline void apply_unitary(StateVector& psi, const LocalUnitary& gate, const std::vector<int>& targets) {
    const int m = psi.num_qubits();
    validate_targets(m, targets, gate.arity);
    const int k = gate.arity;
    const std::uint64_t sub = std::uint64_t{1} << k;
    std::uint64_t tmask = 0;
    std::vector<std::uint64_t> offs(sub, 0);
    for (int i = 0; i < k; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (m - 1 - targets[static_cast<std::size_t>(i)]);
        tmask |= bit;
        for (std::uint64_t j = 0; j < sub; ++j)
            if ((j >> (k - 1 - i)) & 1) offs[j] |= bit;
    }

    auto& amp = psi.amplitudes();
    std::vector<Complex> scratch(sub);
    const std::uint64_t dim = psi.size();
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & tmask) continue;
        for (std::uint64_t j = 0; j < sub; ++j) scratch[j] = amp[base | offs[j]];
        for (std::uint64_t i = 0; i < sub; ++i) {
            Complex acc = 0.0;
            const Complex* row = gate.mat.data() + i * sub;
            for (std::uint64_t j = 0; j < sub; ++j) acc += row[j] * scratch[j];
            amp[base | offs[i]] = acc;
        }
    }
}

// Multiplies each amplitude by phase_fn(basis index); phase_fn must return
// unit-modulus values.
template <typename PhaseFn>
void apply_diagonal_phase(StateVector& psi, PhaseFn&& phase_fn) {
    auto& amp = psi.amplitudes();
    for (std::uint64_t x = 0; x < amp.size(); ++x) {
        const Complex p = phase_fn(x);
        if (std::abs(std::abs(p) - 1.0) >= 1e-9)
            throw std::invalid_argument("diagonal phase must be unit modulus");
        amp[x] *= p;
    }
}

// Exact marginal distribution over the listed qubits, in target order.
inline std::vector<double> measure_probabilities(const StateVector& psi, const std::vector<int>& targets) {
    const int m = psi.num_qubits();
    validate_targets(m, targets, static_cast<int>(targets.size()));
    const int k = static_cast<int>(targets.size());
    std::vector<double> probs(std::uint64_t{1} << k, 0.0);
    const auto& amp = psi.amplitudes();
    for (std::uint64_t x = 0; x < amp.size(); ++x) {
        const double p = std::norm(amp[x]);
        if (p == 0.0) continue;
        std::uint64_t outcome = 0;
        for (int i = 0; i < k; ++i)
            outcome |= ((x >> (m - 1 - targets[static_cast<std::size_t>(i)])) & 1) << (k - 1 - i);
        probs[outcome] += p;
    }
    return probs;
}

inline Complex inner_product(const StateVector& a, const StateVector& b) {
    Complex acc = 0.0;
    for (std::uint64_t x = 0; x < a.size(); ++x) acc += std::conj(a.amplitude(x)) * b.amplitude(x);
    return acc;
}

}  // namespace dqs
