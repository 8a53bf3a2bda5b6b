#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqsearch/oracle.hpp"

#include <json.hpp>

namespace dqs {

// Accounting-only model of the qubit moves between computing nodes during
// one iteration, following the proof narrative hop by hop: Node1 holds the
// u register, Node2 the w register, Node3..Node(2^t+2) the sub-oracles in
// suffix order, Node(2^t+3) the index-select operator, plus V1/V2 for the
// diffusion phase. Transfers are literal qubit moves, one event per hop.

struct TransferEvent {
    std::string from;
    std::string to;
    long long qubits = 0;
    std::string phase;  // oracle-cascade | gather-U | uncompute | v1-leg | v2-leg
};

struct IterationTransfers {
    std::vector<TransferEvent> events;
    long long total = 0;
};

struct CommLedger {
    std::vector<IterationTransfers> iterations;
    long long per_iteration_total = 0;
    long long run_total = 0;
};

namespace detail {
inline std::string node_name(long long index) { return "Node" + std::to_string(index); }
}  // namespace detail

inline IterationTransfers simulate_iteration_transfers(const PartitionConfig& cfg) {
    const long long subs = 1ll << cfg.t;
    const long long u_width = cfg.n - cfg.t;
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(subs + 4));
    for (long long i = 1; i <= subs + 3; ++i) names.push_back(detail::node_name(i));
    const std::string& u_node = names[0];
    const std::string& w_node = names[1];
    const std::string& select_node = names[static_cast<std::size_t>(subs + 2)];
    auto sub_node = [&names](long long i) -> const std::string& {
        return names[static_cast<std::size_t>(i + 2)];  // sub-oracle i lives on Node(3+i)
    };

    IterationTransfers it;
    it.events.reserve(static_cast<std::size_t>(4 * subs + 8));
    auto push = [&it](const std::string& from, const std::string& to, long long qubits,
                      const char* phase) {
        it.events.push_back(TransferEvent{from, to, qubits, phase});
        it.total += qubits;
    };

    // forward cascade: u walks through every sub-oracle node
    push(u_node, sub_node(0), u_width, "oracle-cascade");
    for (long long i = 0; i + 1 < subs; ++i)
        push(sub_node(i), sub_node(i + 1), u_width, "oracle-cascade");

    // gather: the index register and every slot qubit meet at the select node
    push(w_node, select_node, cfg.t, "gather-U");
    for (long long i = 0; i < subs; ++i) push(sub_node(i), select_node, 1, "gather-U");

    // uncompute: mirror of gather then cascade
    for (long long i = 0; i < subs; ++i) push(select_node, sub_node(i), 1, "uncompute");
    push(select_node, w_node, cfg.t, "uncompute");
    for (long long i = subs - 1; i > 0; --i) push(sub_node(i), sub_node(i - 1), u_width, "uncompute");
    push(sub_node(0), u_node, u_width, "uncompute");

    // diffusion legs and their mirror
    push(u_node, "V1", u_width, "v1-leg");
    push(w_node, "V2", cfg.t, "v2-leg");
    push("V1", "V2", 1, "v2-leg");
    push("V2", w_node, cfg.t, "v2-leg");
    push("V2", "V1", 1, "v2-leg");
    push("V1", u_node, u_width, "v1-leg");

    return it;
}

// C(n,t) = 2 (2^t (n-t) + 2^t + t) + 2 (n+1)
inline long long per_iteration_comm(const PartitionConfig& cfg) {
    const long long subs = 1ll << cfg.t;
    return 2 * (subs * (cfg.n - cfg.t) + subs + cfg.t) + 2 * (cfg.n + 1);
}

inline CommLedger make_ledger(const PartitionConfig& cfg, int iterations) {
    CommLedger ledger;
    ledger.per_iteration_total = per_iteration_comm(cfg);
    const IterationTransfers one = simulate_iteration_transfers(cfg);
    ledger.iterations.assign(static_cast<std::size_t>(iterations), one);
    ledger.run_total = ledger.per_iteration_total * iterations;
    return ledger;
}

struct NodeCapacity {
    std::string node;
    long long qubits = 0;
};

inline std::vector<NodeCapacity> node_qubit_counts(const PartitionConfig& cfg) {
    const long long subs = 1ll << cfg.t;
    std::vector<NodeCapacity> out;
    out.push_back({detail::node_name(1), cfg.n - cfg.t});
    out.push_back({detail::node_name(2), cfg.t});
    for (long long i = 0; i < subs; ++i)
        out.push_back({detail::node_name(3 + i), cfg.n - cfg.t + 1});
    out.push_back({detail::node_name(subs + 3), subs + cfg.t + 1});
    out.push_back({"V1", cfg.n - cfg.t + 1});
    out.push_back({"V2", cfg.t + 2});
    return out;
}

// max{n-t+1, 2^t+t+1}
inline long long max_node_qubits(const PartitionConfig& cfg) {
    return std::max<long long>(cfg.n - cfg.t + 1, (1ll << cfg.t) + cfg.t + 1);
}

inline nlohmann::json ledger_to_json(const CommLedger& ledger) {
    nlohmann::json iterations = nlohmann::json::array();
    for (std::size_t i = 0; i < ledger.iterations.size(); ++i) {
        nlohmann::json events = nlohmann::json::array();
        for (const TransferEvent& ev : ledger.iterations[i].events)
            events.push_back({{"phase", ev.phase}, {"from", ev.from}, {"to", ev.to}, {"qubits", ev.qubits}});
        iterations.push_back({{"iteration", i}, {"events", events}, {"total", ledger.iterations[i].total}});
    }
    return {{"iterations", iterations},
            {"per_iteration_total", ledger.per_iteration_total},
            {"run_total", ledger.run_total}};
}

}  // namespace dqs
