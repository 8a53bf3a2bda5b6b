#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "dqsearch/oracle.hpp"

namespace dqs {

// Fixed qubit-role map for the distributed register |u,w,ancillas>.
// The n + 2^t + 1 qubits carry two ancilla interpretations:
//   query context:     |u, w, a, b>   -- slot a_w at n + BI(w), flag b at n + 2^t
//   diffusion context: |u, w, b, c, d> -- b at n, c at n + 1, d afterwards
struct RegisterLayout {
    int n = 0;
    int t = 0;

    int sub_width() const { return n - t; }          // width of u
    int slot_count() const { return 1 << t; }        // 2^t query slots
    int total_qubits() const { return n + slot_count() + 1; }

    std::vector<int> u_qubits() const { return range(0, sub_width()); }
    std::vector<int> w_qubits() const { return range(sub_width(), n); }
    std::vector<int> search_qubits() const { return range(0, n); }
    std::vector<int> ancilla_qubits() const { return range(n, total_qubits()); }

    // query interpretation
    int slot_qubit(std::uint64_t w) const { return n + static_cast<int>(w); }
    int query_flag() const { return n + slot_count(); }

    // diffusion interpretation
    int or_flag() const { return n; }
    int zero_flag() const { return n + 1; }
    std::vector<int> d_qubits() const { return range(n + 2, total_qubits()); }

  private:
    static std::vector<int> range(int lo, int hi) {
        std::vector<int> out(static_cast<std::size_t>(hi - lo));
        std::iota(out.begin(), out.end(), lo);
        return out;
    }
};

inline RegisterLayout make_layout(const PartitionConfig& cfg) { return RegisterLayout{cfg.n, cfg.t}; }

inline RegisterLayout make_layout(int n, int t, bool strict = false) {
    return make_layout(make_partition(n, t, strict));
}

}  // namespace dqs
