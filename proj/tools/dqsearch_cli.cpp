// Command-line front end: run searches, drive the verification sweeps,
// print the algorithm-comparison table, and dump iteration traces.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqsearch/algorithms.hpp"
#include "dqsearch/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string format_sig(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write '" + output_path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

json result_to_json(const dqs::SearchResult& r, const dqs::BooleanOracle& oracle) {
    json doc;
    doc["variant"] = dqs::variant_name(r.plan.variant);
    doc["n"] = r.plan.n;
    doc["a"] = r.plan.a;
    doc["theta"] = r.plan.theta;
    doc["iterations"] = r.plan.iterations;
    if (dqs::is_exact(r.plan.variant)) doc["phi"] = r.plan.phi;
    if (r.t >= 0) doc["t"] = r.t;
    doc["success_probability"] = r.success_probability;
    json dist = json::array();
    for (std::uint64_t x = 0; x < r.distribution.size(); ++x)
        dist.push_back({{"outcome", dqs::index_to_bits(x, r.plan.n)},
                        {"probability", r.distribution[x]},
                        {"solution", oracle.eval_index(x)}});
    doc["distribution"] = dist;
    json trace = json::array();
    for (const dqs::TracePoint& p : r.trace)
        trace.push_back({{"iteration", p.iteration}, {"solution_mass", p.solution_mass}});
    doc["trace"] = trace;
    if (r.ledger) doc["ledger"] = dqs::ledger_to_json(*r.ledger);
    return doc;
}

std::string result_to_csv(const dqs::SearchResult& r, const dqs::BooleanOracle& oracle) {
    std::string out = "outcome,probability,solution\n";
    for (std::uint64_t x = 0; x < r.distribution.size(); ++x) {
        out += dqs::index_to_bits(x, r.plan.n);
        out += ',' + format_sig(r.distribution[x]);
        out += ',' + std::to_string(oracle.eval_index(x) ? 1 : 0);
        out += '\n';
    }
    return out;
}

json sample_counts(const dqs::SearchResult& r, std::uint64_t shots, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::uint64_t> pick(r.distribution.begin(), r.distribution.end());
    std::vector<std::uint64_t> counts(r.distribution.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) ++counts[pick(rng)];
    json out;
    for (std::uint64_t x = 0; x < counts.size(); ++x)
        if (counts[x] > 0) out[dqs::index_to_bits(x, r.plan.n)] = counts[x];
    return out;
}

struct RunOptions {
    std::string variant;
    std::string oracle_path;
    int t = -1;
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string output;
};

int cmd_run(const RunOptions& opt) {
    const dqs::BooleanOracle oracle = dqs::load_oracle(opt.oracle_path);
    const dqs::Variant variant = dqs::parse_variant(opt.variant);
    const dqs::SearchPlan plan =
        dqs::make_plan(variant, oracle.input_width(), oracle.solution_count());
    if (dqs::is_distributed(variant) && opt.t < 1)
        throw std::invalid_argument("distributed variants need --t >= 1");
    dqs::SearchResult result = dqs::run_search(oracle, plan, opt.t);
    if (dqs::is_distributed(variant)) dqs::bind_ledger(result);

    std::cerr << "variant=" << dqs::variant_name(variant) << " n=" << plan.n << " a=" << plan.a
              << " iterations=" << plan.iterations
              << " success=" << format_sig(result.success_probability) << '\n';
    for (const dqs::TracePoint& p : result.trace)
        std::cerr << "  iteration " << p.iteration << ": solution mass "
                  << format_sig(p.solution_mass) << '\n';

    if (opt.format == "csv") {
        emit(result_to_csv(result, oracle), opt.output);
    } else {
        json doc = result_to_json(result, oracle);
        if (opt.shots > 0) {
            doc["shots"] = opt.shots;
            doc["seed"] = opt.seed;
            doc["counts"] = sample_counts(result, opt.shots, opt.seed);
        }
        emit(doc.dump(2), opt.output);
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string scope = "all";
    int max_n = 4;
    int oracles = 5;
    int sweep = 100;
    std::uint64_t seed = 20240901;
    std::string output;
    bool canary = false;
};

int cmd_verify(const VerifyOptions& opt) {
    std::vector<dqs::CheckRecord> records;
    auto append = [&records](std::vector<dqs::CheckRecord> more) {
        for (auto& r : more) records.push_back(std::move(r));
    };
    if (opt.scope == "props" || opt.scope == "all")
        append(dqs::run_decomposition_checks(opt.max_n, opt.oracles, opt.seed, opt.canary));
    if (opt.scope == "lemmas" || opt.scope == "all")
        append(dqs::run_lemma_checks(opt.sweep, opt.seed));
    if (opt.scope == "theorems" || opt.scope == "all")
        append(dqs::run_theorem_checks(opt.max_n, opt.seed));
    if (records.empty()) throw std::invalid_argument("scope must be props|lemmas|theorems|all");

    json doc = dqs::report_to_json(records);
    doc["scope"] = opt.scope;
    emit(doc.dump(2), opt.output);
    for (const dqs::CheckRecord& r : records)
        if (!r.pass)
            std::cerr << "FAILED " << r.name << " deviation=" << format_sig(r.deviation)
                      << " tolerance=" << format_sig(r.tolerance) << '\n';
    return dqs::all_pass(records) ? kExitOk : kExitVerifyFailed;
}

struct CompareOptions {
    int n = 0;
    int t = 0;
    std::uint64_t a = 1;
    std::string format = "json";
    std::string output;
};

int cmd_compare(const CompareOptions& opt) {
    const dqs::PartitionConfig cfg = dqs::make_partition(opt.n, opt.t);
    const std::vector<dqs::ComparisonRow> rows = dqs::comparison_table(cfg, opt.a);

    if (opt.format == "csv") {
        std::string out = "algorithm,max_node_qubits,success_probability,communication\n";
        for (const dqs::ComparisonRow& r : rows) {
            out += r.algorithm;
            out += ',' + std::to_string(r.max_node_qubits);
            out += ",\"" + r.success + "\"";
            out += ',' + std::to_string(r.communication);
            out += '\n';
        }
        emit(out, opt.output);
    } else {
        json doc;
        doc["n"] = opt.n;
        doc["t"] = opt.t;
        doc["a"] = opt.a;
        json table = json::array();
        for (const dqs::ComparisonRow& r : rows)
            table.push_back({{"algorithm", r.algorithm},
                             {"max_node_qubits", r.max_node_qubits},
                             {"success_probability", r.success},
                             {"communication", r.communication}});
        doc["rows"] = table;
        emit(doc.dump(2), opt.output);
    }
    return kExitOk;
}

struct TraceOptions {
    std::string variant;
    std::string oracle_path;
    int t = -1;
    std::string output;
};

int cmd_trace(const TraceOptions& opt) {
    const dqs::BooleanOracle oracle = dqs::load_oracle(opt.oracle_path);
    const dqs::Variant variant = dqs::parse_variant(opt.variant);
    const dqs::SearchPlan plan =
        dqs::make_plan(variant, oracle.input_width(), oracle.solution_count());
    if (dqs::is_distributed(variant) && opt.t < 1)
        throw std::invalid_argument("distributed variants need --t >= 1");
    const dqs::SearchResult result = dqs::run_search(oracle, plan, opt.t);
    std::string out = "iteration,solution_mass\n";
    for (const dqs::TracePoint& p : dqs::iteration_trace(result))
        out += std::to_string(p.iteration) + ',' + format_sig(p.solution_mass) + '\n';
    emit(out, opt.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distributed multi-objective quantum search: simulation and verification"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "simulate one search variant on an oracle file");
    run->add_option("--variant", run_opt.variant, "grover | long | dist | dist-exact")->required();
    run->add_option("--oracle", run_opt.oracle_path, "oracle file (text or JSON)")->required();
    run->add_option("--t", run_opt.t, "split width for distributed variants");
    run->add_option("--shots", run_opt.shots, "also sample counts (presentation only)");
    run->add_option("--seed", run_opt.seed, "seed for --shots sampling");
    run->add_option("--format", run_opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--output", run_opt.output, "write the artifact here instead of stdout");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run the proposition/lemma/theorem checks");
    verify->add_option("--scope", verify_opt.scope, "props | lemmas | theorems | all")
        ->check(CLI::IsMember({"props", "lemmas", "theorems", "all"}));
    verify->add_option("--max-n", verify_opt.max_n, "largest search width in the grids")
        ->check(CLI::Range(3, 6));
    verify->add_option("--oracles", verify_opt.oracles, "random oracles per (n,t) configuration");
    verify->add_option("--sweep", verify_opt.sweep, "points per lemma sweep");
    verify->add_option("--seed", verify_opt.seed, "sweep seed");
    verify->add_option("--output", verify_opt.output, "write the JSON report here");
    verify->add_flag("--canary", verify_opt.canary, "")->group("");  // test-only: corrupt one gate

    CompareOptions cmp_opt;
    CLI::App* compare = app.add_subcommand("compare", "node-size / exactness / communication table");
    compare->add_option("--n", cmp_opt.n, "search width")->required();
    compare->add_option("--t", cmp_opt.t, "split width")->required();
    compare->add_option("--a", cmp_opt.a, "solution count for the iteration counts");
    compare->add_option("--format", cmp_opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    compare->add_option("--output", cmp_opt.output, "write the table here instead of stdout");

    TraceOptions trace_opt;
    CLI::App* trace = app.add_subcommand("trace", "CSV of solution mass per iteration");
    trace->add_option("--variant", trace_opt.variant, "grover | long | dist | dist-exact")->required();
    trace->add_option("--oracle", trace_opt.oracle_path, "oracle file")->required();
    trace->add_option("--t", trace_opt.t, "split width for distributed variants");
    trace->add_option("--output", trace_opt.output, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (compare->parsed()) return cmd_compare(cmp_opt);
        if (trace->parsed()) return cmd_trace(trace_opt);
    } catch (const dqs::CapacityError& e) {
        std::cerr << "dqsearch error: capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "dqsearch error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
