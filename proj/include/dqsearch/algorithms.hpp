#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqsearch/distsim.hpp"
#include "dqsearch/operators.hpp"

namespace dqs {

enum class Variant { Grover, Long, Dist, DistExact };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Grover: return "grover";
        case Variant::Long: return "long";
        case Variant::Dist: return "dist";
        case Variant::DistExact: return "dist-exact";
    }
    return "?";
}

inline Variant parse_variant(const std::string& name) {
    if (name == "grover") return Variant::Grover;
    if (name == "long") return Variant::Long;
    if (name == "dist") return Variant::Dist;
    if (name == "dist-exact") return Variant::DistExact;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

inline bool is_distributed(Variant v) { return v == Variant::Dist || v == Variant::DistExact; }
inline bool is_exact(Variant v) { return v == Variant::Long || v == Variant::DistExact; }

// theta, iteration count and (for the exact variants) the rotation phase for
// a given problem size.
struct SearchPlan {
    Variant variant = Variant::Grover;
    int n = 0;
    std::uint64_t a = 0;
    double theta = 0.0;
    int iterations = 0;
    double phi = 0.0;  // exact variants only
};

inline int grover_iteration_count(double theta) {
    return static_cast<int>(std::floor(kPi / (4.0 * theta)));
}

inline int exact_rotation_count(double theta) {  // K
    return static_cast<int>(std::floor((kPi / 2.0 - theta) / (2.0 * theta)));
}

inline double exact_rotation_phase(double theta, int rotation_count) {
    const double ratio = std::sin(kPi / (4.0 * rotation_count + 6.0)) / std::sin(theta);
    if (ratio > 1.0) throw PhaseDomainError("phase arcsin argument exceeds 1");
    return 2.0 * std::asin(ratio);
}

inline SearchPlan make_plan(Variant variant, int n, std::uint64_t a) {
    if (n < 1 || n > 62) throw std::invalid_argument("input width out of range");
    const std::uint64_t domain = std::uint64_t{1} << n;
    if (a < 1) throw PromiseViolation("the promise requires a >= 1");
    if (a > domain) throw std::invalid_argument("solution count exceeds 2^n");
    SearchPlan plan;
    plan.variant = variant;
    plan.n = n;
    plan.a = a;
    plan.theta = std::asin(std::sqrt(static_cast<double>(a) / static_cast<double>(domain)));
    if (is_exact(variant)) {
        const int k = exact_rotation_count(plan.theta);
        plan.iterations = k + 1;
        plan.phi = exact_rotation_phase(plan.theta, k);
    } else {
        plan.iterations = grover_iteration_count(plan.theta);
    }
    return plan;
}

struct TracePoint {
    int iteration = 0;
    double solution_mass = 0.0;
};

struct SearchResult {
    SearchPlan plan;
    int t = -1;  // split width for distributed variants
    std::vector<double> distribution;  // exact marginal over the n search qubits
    double success_probability = 0.0;
    std::vector<TracePoint> trace;  // solution mass after 0..iterations rounds
    std::optional<CommLedger> ledger;
};

namespace detail {

inline double solution_mass(const std::vector<double>& dist, const BooleanOracle& oracle) {
    double mass = 0.0;
    for (std::uint64_t x : oracle.solutions()) mass += dist[x];
    return mass;
}

// Shared driver: prepare the uniform state, then fold one iteration at a
// time while recording the solution mass on the search register.
template <typename StepFn>
SearchResult run_iterated(const BooleanOracle& oracle, const SearchPlan& plan, StateVector psi,
                          const std::vector<int>& search_qubits, StepFn&& step) {
    SearchResult result;
    result.plan = plan;
    for (int q : search_qubits) apply_unitary(psi, hadamard(), {q});
    result.distribution = measure_probabilities(psi, search_qubits);
    result.trace.push_back({0, solution_mass(result.distribution, oracle)});
    for (int l = 1; l <= plan.iterations; ++l) {
        step(psi);
        result.distribution = measure_probabilities(psi, search_qubits);
        result.trace.push_back({l, solution_mass(result.distribution, oracle)});
    }
    result.success_probability = result.trace.back().solution_mass;
    return result;
}

}  // namespace detail

// Plain Grover: G = -H Z_0 H Z_f on n qubits.
inline SearchResult run_grover(const BooleanOracle& oracle, const SearchPlan& plan) {
    if (plan.variant != Variant::Grover) throw std::invalid_argument("plan variant mismatch");
    const int n = oracle.input_width();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
    auto step = [&](StateVector& psi) {
        apply_diagonal_phase(psi, [&oracle](std::uint64_t x) -> Complex {
            return oracle.eval_index(x) ? -1.0 : 1.0;
        });
        for (int q : all) apply_unitary(psi, hadamard(), {q});
        apply_diagonal_phase(psi, [](std::uint64_t x) -> Complex { return x == 0 ? -1.0 : 1.0; });
        for (int q : all) apply_unitary(psi, hadamard(), {q});
        for (auto& amp : psi.amplitudes()) amp = -amp;
    };
    return detail::run_iterated(oracle, plan, StateVector(n), all, step);
}

// Long's exact variant: L = -H R_0(phi) H R_f(phi).
inline SearchResult run_long(const BooleanOracle& oracle, const SearchPlan& plan) {
    if (plan.variant != Variant::Long) throw std::invalid_argument("plan variant mismatch");
    const int n = oracle.input_width();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
    const Complex rot = std::polar(1.0, plan.phi);
    auto step = [&](StateVector& psi) {
        apply_diagonal_phase(psi, [&oracle, rot](std::uint64_t x) -> Complex {
            return oracle.eval_index(x) ? rot : Complex{1.0};
        });
        for (int q : all) apply_unitary(psi, hadamard(), {q});
        apply_diagonal_phase(psi, [rot](std::uint64_t x) -> Complex { return x == 0 ? rot : Complex{1.0}; });
        for (int q : all) apply_unitary(psi, hadamard(), {q});
        for (auto& amp : psi.amplitudes()) amp = -amp;
    };
    return detail::run_iterated(oracle, plan, StateVector(n), all, step);
}

// Distributed search over the decomposed iterate, marginal on the first n
// qubits.
inline SearchResult run_distributed(const BooleanOracle& oracle, const PartitionConfig& cfg,
                                    const SearchPlan& plan) {
    if (plan.variant != Variant::Dist) throw std::invalid_argument("plan variant mismatch");
    if (cfg.n != oracle.input_width()) throw std::invalid_argument("partition width mismatch");
    const RegisterLayout lay = make_layout(cfg);
    const Circuit iterate = grover_iterate(lay, oracle);
    auto step = [&iterate](StateVector& psi) { apply_circuit(psi, iterate); };
    SearchResult result = detail::run_iterated(oracle, plan, StateVector(lay.total_qubits()),
                                               lay.search_qubits(), step);
    result.t = cfg.t;
    return result;
}

inline SearchResult run_distributed_exact(const BooleanOracle& oracle, const PartitionConfig& cfg,
                                          const SearchPlan& plan) {
    if (plan.variant != Variant::DistExact) throw std::invalid_argument("plan variant mismatch");
    if (cfg.n != oracle.input_width()) throw std::invalid_argument("partition width mismatch");
    const RegisterLayout lay = make_layout(cfg);
    const Circuit iterate = exact_iterate(lay, oracle, plan.phi);
    auto step = [&iterate](StateVector& psi) { apply_circuit(psi, iterate); };
    SearchResult result = detail::run_iterated(oracle, plan, StateVector(lay.total_qubits()),
                                               lay.search_qubits(), step);
    result.t = cfg.t;
    return result;
}

inline SearchResult run_search(const BooleanOracle& oracle, const SearchPlan& plan, int t = -1) {
    switch (plan.variant) {
        case Variant::Grover: return run_grover(oracle, plan);
        case Variant::Long: return run_long(oracle, plan);
        case Variant::Dist: return run_distributed(oracle, make_partition(plan.n, t), plan);
        case Variant::DistExact: return run_distributed_exact(oracle, make_partition(plan.n, t), plan);
    }
    throw std::invalid_argument("unknown variant");
}

inline const std::vector<TracePoint>& iteration_trace(const SearchResult& result) { return result.trace; }

// --- communication accounting bridged onto runs ---

inline long long run_total_communication(const PartitionConfig& cfg, const SearchPlan& plan) {
    return per_iteration_comm(cfg) * plan.iterations;
}

// Attaches the qubit-transfer ledger to a distributed run. Pure accounting:
// the amplitudes of the run are untouched.
inline void bind_ledger(SearchResult& result) {
    if (!is_distributed(result.plan.variant))
        throw std::invalid_argument("only distributed runs carry a communication ledger");
    result.ledger = make_ledger(make_partition(result.plan.n, result.t), result.plan.iterations);
}

// One row per algorithm of the published comparison: largest-node size,
// success behaviour, and total quantum communication for a given solution
// count.
struct ComparisonRow {
    std::string algorithm;
    long long max_node_qubits = 0;
    std::string success;
    long long communication = 0;
};

inline std::vector<ComparisonRow> comparison_table(const PartitionConfig& cfg, std::uint64_t a = 1) {
    const char* kInexact = "High but smaller than 1";
    const long long node_qubits = max_node_qubits(cfg);
    return {
        {"grover", cfg.n, kInexact, 0},
        {"long", cfg.n, "1", 0},
        {"qiu-distributed", cfg.n - cfg.t, kInexact, 0},
        {"dist", node_qubits, kInexact,
         run_total_communication(cfg, make_plan(Variant::Dist, cfg.n, a))},
        {"dist-exact", node_qubits, "1",
         run_total_communication(cfg, make_plan(Variant::DistExact, cfg.n, a))},
    };
}

}  // namespace dqs
