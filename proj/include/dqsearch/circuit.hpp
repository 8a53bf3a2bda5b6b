#pragma once

#include <utility>
#include <vector>

#include "dqsearch/statevector.hpp"

namespace dqs {

struct Gate {
    LocalUnitary op;
    std::vector<int> targets;
};

// A gate list over a fixed register width; gates apply in list order.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    explicit Circuit(int m = 0) : num_qubits(m) {}

    Circuit& add(LocalUnitary op, std::vector<int> targets) {
        validate_targets(num_qubits, targets, op.arity);
        gates.push_back(Gate{std::move(op), std::move(targets)});
        return *this;
    }

    Circuit& add(const Gate& g) { return add(g.op, g.targets); }

    Circuit& add(const Circuit& other) {
        for (const Gate& g : other.gates) add(g);
        return *this;
    }
};

inline void apply_circuit(StateVector& psi, const Circuit& c) {
    for (const Gate& g : c.gates) apply_unitary(psi, g.op, g.targets);
}

// Exact inverse: gates reversed, each replaced by its adjoint.
inline Circuit inverted(const Circuit& c) {
    Circuit out(c.num_qubits);
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) out.add(it->op.dagger(), it->targets);
    return out;
}

// Full 2^m x 2^m matrix of the composed circuit, column by column.
inline CMatrix build_matrix(const Circuit& c) {
    if (c.num_qubits > 14) throw CapacityError("build_matrix: register exceeds the 14-qubit dense guard");
    const std::uint64_t dim = std::uint64_t{1} << c.num_qubits;
    CMatrix m(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        StateVector psi(c.num_qubits);
        psi.amplitudes()[0] = 0.0;
        psi.amplitudes()[col] = 1.0;
        apply_circuit(psi, c);
        for (std::uint64_t row = 0; row < dim; ++row) m(row, col) = psi.amplitude(row);
    }
    return m;
}

}  // namespace dqs
