#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dqsearch/circuit.hpp"
#include "dqsearch/layout.hpp"
#include "dqsearch/oracle.hpp"

namespace dqs {

// Multiply-controlled pieces are embedded directly from their truth tables;
// gate-count optimisation is out of scope at desk scale.

// Writes f_w(u) into query slot a_w: controls on the u register, X on the
// slot qubit when f_w(u) = 1.
inline Gate sub_oracle_gate(const RegisterLayout& lay, const SubFunction& fw) {
    const int k = lay.sub_width() + 1;
    LocalUnitary op = permutation_gate(k, [&fw](std::uint64_t x) {
        const std::uint64_t u = x >> 1;
        const std::uint64_t c = (x & 1) ^ (fw.eval_index(u) ? 1 : 0);
        return (u << 1) | c;
    });
    std::vector<int> targets = lay.u_qubits();
    targets.push_back(lay.slot_qubit(fw.w));
    return Gate{std::move(op), std::move(targets)};
}

// All 2^t sub-oracles, suffixes in increasing binary order. They commute,
// so the order only matters for the communication narrative.
inline Circuit batched_query(const RegisterLayout& lay, const BooleanOracle& oracle) {
    const PartitionConfig cfg{lay.n, lay.t};
    Circuit c(lay.total_qubits());
    for (std::uint64_t w = 0; w < cfg.sub_count(); ++w)
        c.add(sub_oracle_gate(lay, subfunction_by_index(oracle, cfg, w)));
    return c;
}

// b <- b XOR a_i with i the value of the w register: one multiply-controlled
// X per index value, controls = (w == i, a_i == 1).
inline Circuit index_select(const RegisterLayout& lay) {
    Circuit c(lay.total_qubits());
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(lay.slot_count()); ++i) {
        const int k = lay.t + 2;
        LocalUnitary op = permutation_gate(k, [i](std::uint64_t x) {
            const std::uint64_t w = x >> 2;
            const std::uint64_t slot = (x >> 1) & 1;
            std::uint64_t b = x & 1;
            if (w == i && slot == 1) b ^= 1;
            return (w << 2) | (slot << 1) | b;
        });
        std::vector<int> targets = lay.w_qubits();
        targets.push_back(lay.slot_qubit(i));
        targets.push_back(lay.query_flag());
        c.add(std::move(op), std::move(targets));
    }
    return c;
}

// The centralized query: batched sub-oracles, then the index-selected copy
// into the query flag.
inline Circuit distributed_query(const RegisterLayout& lay, const BooleanOracle& oracle) {
    Circuit c = batched_query(lay, oracle);
    c.add(index_select(lay));
    return c;
}

// Conjugating Z on the query flag by the query network. Diagonal with
// eigenvalue (-1)^(b + a_w + f_w(u)); on slot-zero inputs this is the
// phase flip on b + f_w(u) that drives the search.
inline Circuit oracle_reflection(const RegisterLayout& lay, const BooleanOracle& oracle) {
    Circuit query = distributed_query(lay, oracle);
    Circuit c(lay.total_qubits());
    c.add(query);
    c.add(pauli_z(), {lay.query_flag()});
    c.add(inverted(query));
    return c;
}

// b <- b XOR OR(u)
inline Gate or_gadget_v1(const RegisterLayout& lay) {
    const int k = lay.sub_width() + 1;
    LocalUnitary op = permutation_gate(k, [](std::uint64_t x) {
        const std::uint64_t u = x >> 1;
        return (u << 1) | ((x & 1) ^ (u != 0 ? 1 : 0));
    });
    std::vector<int> targets = lay.u_qubits();
    targets.push_back(lay.or_flag());
    return Gate{std::move(op), std::move(targets)};
}

// c <- c XOR NOT OR(w||b): flips c exactly on w = 0^t, b = 0.
inline Gate or_gadget_v2(const RegisterLayout& lay) {
    const int k = lay.t + 2;
    LocalUnitary op = permutation_gate(k, [](std::uint64_t x) {
        const std::uint64_t wb = x >> 1;
        return (wb << 1) | ((x & 1) ^ (wb == 0 ? 1 : 0));
    });
    std::vector<int> targets = lay.w_qubits();
    targets.push_back(lay.or_flag());
    targets.push_back(lay.zero_flag());
    return Gate{std::move(op), std::move(targets)};
}

// V1 then V2; the d register is never touched.
inline Circuit zero_test_network(const RegisterLayout& lay) {
    Circuit c(lay.total_qubits());
    c.add(or_gadget_v1(lay));
    c.add(or_gadget_v2(lay));
    return c;
}

// Diagonal with eigenvalue (-1)^g(u,w,b,c).
inline Circuit zero_reflection(const RegisterLayout& lay) {
    Circuit net = zero_test_network(lay);
    Circuit c(lay.total_qubits());
    c.add(net);
    c.add(pauli_z(), {lay.zero_flag()});
    c.add(inverted(net));
    return c;
}

inline Circuit hadamard_on_search(const RegisterLayout& lay) {
    Circuit c(lay.total_qubits());
    for (int q : lay.search_qubits()) c.add(hadamard(), {q});
    return c;
}

// H^n Z_0' H^n = I - 2|h><h| - 2 Pi_perp.
inline Circuit diffusion_reflection(const RegisterLayout& lay) {
    Circuit c(lay.total_qubits());
    c.add(hadamard_on_search(lay));
    c.add(zero_reflection(lay));
    c.add(hadamard_on_search(lay));
    return c;
}

// One distributed search iteration: minus the diffusion reflection times the
// oracle reflection.
inline Circuit grover_iterate(const RegisterLayout& lay, const BooleanOracle& oracle) {
    Circuit c(lay.total_qubits());
    c.add(oracle_reflection(lay, oracle));
    c.add(diffusion_reflection(lay));
    c.add(scalar_gate(-1.0), {0});
    return c;
}

// Phase-rotation versions: E(phi) in place of Z.
inline Circuit oracle_rotation(const RegisterLayout& lay, const BooleanOracle& oracle, double phi) {
    Circuit query = distributed_query(lay, oracle);
    Circuit c(lay.total_qubits());
    c.add(query);
    c.add(phase_shift_gate(phi), {lay.query_flag()});
    c.add(inverted(query));
    return c;
}

inline Circuit zero_rotation(const RegisterLayout& lay, double phi) {
    Circuit net = zero_test_network(lay);
    Circuit c(lay.total_qubits());
    c.add(net);
    c.add(phase_shift_gate(phi), {lay.zero_flag()});
    c.add(inverted(net));
    return c;
}

inline Circuit diffusion_rotation(const RegisterLayout& lay, double phi) {
    Circuit c(lay.total_qubits());
    c.add(hadamard_on_search(lay));
    c.add(zero_rotation(lay, phi));
    c.add(hadamard_on_search(lay));
    return c;
}

// One exact-search iteration.
inline Circuit exact_iterate(const RegisterLayout& lay, const BooleanOracle& oracle, double phi) {
    Circuit c(lay.total_qubits());
    c.add(oracle_rotation(lay, oracle, phi));
    c.add(diffusion_rotation(lay, phi));
    c.add(scalar_gate(-1.0), {0});
    return c;
}

// The invariant two-dimensional search plane: equal-weight superpositions of
// solution / non-solution strings with zeroed ancillas, and the angle with
// sin(theta) = sqrt(a/N).
struct SpanPair {
    StateVector marked;    // |A'>
    StateVector unmarked;  // |B'>
    double theta = 0.0;
};

inline SpanPair make_span_pair(const RegisterLayout& lay, const BooleanOracle& oracle) {
    if (oracle.input_width() != lay.n) throw std::invalid_argument("oracle width does not match layout");
    const std::uint64_t domain = oracle.domain_size();
    const std::uint64_t a = oracle.solution_count();
    if (a >= domain) throw std::invalid_argument("the search plane needs at least one non-solution");
    const int anc = lay.slot_count() + 1;
    SpanPair pair{StateVector(lay.total_qubits()), StateVector(lay.total_qubits()),
                  std::asin(std::sqrt(static_cast<double>(a) / static_cast<double>(domain)))};
    pair.marked.amplitudes()[0] = 0.0;
    pair.unmarked.amplitudes()[0] = 0.0;
    const double ma = 1.0 / std::sqrt(static_cast<double>(a));
    const double mb = 1.0 / std::sqrt(static_cast<double>(domain - a));
    for (std::uint64_t x = 0; x < domain; ++x) {
        if (oracle.eval_index(x))
            pair.marked.amplitudes()[x << anc] = ma;
        else
            pair.unmarked.amplitudes()[x << anc] = mb;
    }
    return pair;
}

}  // namespace dqs
