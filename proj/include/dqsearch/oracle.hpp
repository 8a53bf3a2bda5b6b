#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dqsearch/errors.hpp"
#include "dqsearch/statevector.hpp"

#include <json.hpp>

namespace dqs {

// Classical description of the search function f: an explicit solution set.
// Immutable after construction; a = |solutions| >= 1 is the search promise.
class BooleanOracle {
  public:
    BooleanOracle(int n, std::vector<std::uint64_t> solution_indices)
        : n_(n), solutions_(std::move(solution_indices)) {
        if (n_ < 1 || n_ > 24) throw CapacityError("oracle input width out of supported range [1,24]");
        std::sort(solutions_.begin(), solutions_.end());
        if (std::adjacent_find(solutions_.begin(), solutions_.end()) != solutions_.end())
            throw std::invalid_argument("duplicate solution");
        for (std::uint64_t s : solutions_)
            if (s >= domain_size()) throw std::invalid_argument("solution index out of range");
        if (solutions_.empty()) throw PromiseViolation("the promise requires at least one solution");
    }

    int input_width() const { return n_; }
    std::uint64_t domain_size() const { return std::uint64_t{1} << n_; }
    std::uint64_t solution_count() const { return solutions_.size(); }
    const std::vector<std::uint64_t>& solutions() const { return solutions_; }

    bool eval_index(std::uint64_t x) const {
        return std::binary_search(solutions_.begin(), solutions_.end(), x);
    }

    int eval(const std::string& x) const {
        if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("oracle input has wrong width");
        return eval_index(bits_to_index(x)) ? 1 : 0;
    }

  private:
    int n_;
    std::vector<std::uint64_t> solutions_;
};

inline BooleanOracle make_oracle(int n, const std::vector<std::string>& solutions) {
    std::vector<std::uint64_t> idx;
    idx.reserve(solutions.size());
    for (const std::string& s : solutions) {
        if (static_cast<int>(s.size()) != n) throw std::invalid_argument("solution '" + s + "' has wrong width");
        idx.push_back(bits_to_index(s));
    }
    return BooleanOracle(n, std::move(idx));
}

inline BooleanOracle random_oracle(int n, std::uint64_t a, std::mt19937_64& rng) {
    const std::uint64_t domain = std::uint64_t{1} << n;
    if (a < 1 || a > domain) throw PromiseViolation("solution count must be in [1, 2^n]");
    std::vector<std::uint64_t> all(domain);
    for (std::uint64_t i = 0; i < domain; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(a);
    return BooleanOracle(n, std::move(all));
}

// Splitting f(u||w) over the 2^t suffixes w; 1 <= t < n always, and the
// tighter node-size-advantage bounds (n > 4, 1 < t < log2(n) - 1) only when
// requested -- they have no integer solutions below n = 9.
struct PartitionConfig {
    int n = 0;
    int t = 0;

    int sub_input_width() const { return n - t; }
    std::uint64_t sub_count() const { return std::uint64_t{1} << t; }
    int total_qubits() const { return n + static_cast<int>(sub_count()) + 1; }
};

inline PartitionConfig make_partition(int n, int t, bool strict = false) {
    if (n < 2) throw std::invalid_argument("partition needs n >= 2");
    if (t < 1 || t >= n) throw std::invalid_argument("partition needs 1 <= t < n");
    if (strict) {
        if (!(n > 4 && t > 1 && static_cast<double>(t) < std::log2(static_cast<double>(n)) - 1.0))
            throw std::invalid_argument("strict partition needs n > 4 and 1 < t < log2(n) - 1");
    }
    return PartitionConfig{n, t};
}

// f_w(u) = f(u || w): fix the last t input bits to w.
struct SubFunction {
    const BooleanOracle* oracle = nullptr;
    int t = 0;
    std::uint64_t w = 0;

    int input_width() const { return oracle->input_width() - t; }

    bool eval_index(std::uint64_t u) const { return oracle->eval_index((u << t) | w); }

    int eval(const std::string& u) const {
        if (static_cast<int>(u.size()) != input_width())
            throw std::invalid_argument("sub-function input has wrong width");
        return eval_index(bits_to_index(u)) ? 1 : 0;
    }
};

inline SubFunction subfunction_by_index(const BooleanOracle& oracle, const PartitionConfig& cfg,
                                        std::uint64_t w) {
    if (cfg.n != oracle.input_width()) throw std::invalid_argument("partition width mismatch");
    if (w >= cfg.sub_count()) throw std::invalid_argument("suffix label out of range");
    return SubFunction{&oracle, cfg.t, w};
}

inline SubFunction subfunction(const BooleanOracle& oracle, const PartitionConfig& cfg,
                               const std::string& w) {
    if (static_cast<int>(w.size()) != cfg.t) throw std::invalid_argument("suffix label has wrong width");
    return subfunction_by_index(oracle, cfg, bits_to_index(w));
}

inline int or_fn(const std::string& x) {
    if (x.empty()) throw std::invalid_argument("OR needs at least one bit");
    for (char ch : x) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("OR input must be over {0,1}");
        if (ch == '1') return 1;
    }
    return 0;
}

// g(u,w,b,c) = c XOR NOT(OR(w || (b XOR OR(u)))); equivalently c flips
// exactly when w = 0^t and b = OR(u).
inline int g_eval(bool u_any_set, bool w_any_set, int b, int c) {
    const int inner = b ^ (u_any_set ? 1 : 0);
    const int not_or = (!w_any_set && inner == 0) ? 1 : 0;
    return c ^ not_or;
}

inline int g_fn(const std::string& u, const std::string& w, int b, int c) {
    if (b < 0 || b > 1 || c < 0 || c > 1) throw std::invalid_argument("g takes single bits for b, c");
    return g_eval(or_fn(u) == 1, or_fn(w) == 1, b, c);
}

namespace detail {

inline BooleanOracle parse_oracle_text(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::string> solutions;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0) throw OracleParseError("first line must be n=<int>");
            try {
                n = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                throw OracleParseError("could not parse the input width from '" + line + "'");
            }
            continue;
        }
        if (static_cast<int>(line.size()) != n)
            throw OracleParseError("solution '" + line + "' does not have " + std::to_string(n) + " bits");
        for (char ch : line)
            if (ch != '0' && ch != '1') throw OracleParseError("solution '" + line + "' is not a bit string");
        solutions.push_back(line);
    }
    if (n < 0) throw OracleParseError("missing n=<int> header");
    if (solutions.empty()) throw PromiseViolation("oracle file lists no solutions");
    std::vector<std::string> dedup = solutions;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
        throw OracleParseError("duplicate solution line");
    return make_oracle(n, solutions);
}

inline BooleanOracle parse_oracle_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw OracleParseError(std::string("bad JSON oracle: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("solutions"))
        throw OracleParseError("JSON oracle needs fields 'n' and 'solutions'");
    const int n = doc["n"].get<int>();
    std::vector<std::string> solutions;
    for (const auto& item : doc["solutions"]) solutions.push_back(item.get<std::string>());
    if (solutions.empty()) throw PromiseViolation("oracle file lists no solutions");
    std::vector<std::string> dedup = solutions;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
        throw OracleParseError("duplicate solution entry");
    return make_oracle(n, solutions);
}

}  // namespace detail

// Text format: first line `n=<int>`, then one n-bit solution per line.
// Also accepted: {"n": int, "solutions": [...]}.
inline BooleanOracle load_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OracleParseError("cannot open oracle file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return detail::parse_oracle_json(text);
    std::istringstream ss(text);
    return detail::parse_oracle_text(ss);
}

}  // namespace dqs
