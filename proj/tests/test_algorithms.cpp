#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstring>

#include "dqsearch/algorithms.hpp"

using namespace dqs;

namespace {

// Independent oracle for the n=3, a=1 case: Grover on a literal 8-entry
// amplitude array, written out step by step with no library calls.
double reference_grover_3_1(int iterations, std::uint64_t solution) {
    std::array<std::complex<double>, 8> amp{};
    for (auto& a : amp) a = 1.0 / std::sqrt(8.0);
    auto hadamard_all = [&amp] {
        // H on qubit q of 3 (big-endian labels)
        for (int q = 0; q < 3; ++q) {
            const std::uint64_t bit = std::uint64_t{1} << (2 - q);
            std::array<std::complex<double>, 8> next{};
            for (std::uint64_t x = 0; x < 8; ++x) {
                const std::uint64_t lo = x & ~bit;
                const std::uint64_t hi = x | bit;
                next[x] = (amp[lo] + ((x & bit) ? -1.0 : 1.0) * amp[hi]) / std::sqrt(2.0);
            }
            amp = next;
        }
    };
    for (int l = 0; l < iterations; ++l) {
        amp[solution] = -amp[solution];
        hadamard_all();
        amp[0] = -amp[0];
        hadamard_all();
        for (auto& a : amp) a = -a;
    }
    return std::norm(amp[solution]);
}

}  // namespace

TEST_CASE("plan construction") {
    const SearchPlan g = make_plan(Variant::Grover, 3, 1);
    CHECK(g.theta == Catch::Approx(0.3613671239067078).margin(1e-15));
    CHECK(g.iterations == 2);

    // a = N: theta = pi/2, zero iterations
    const SearchPlan full = make_plan(Variant::Grover, 3, 8);
    CHECK(full.theta == Catch::Approx(kPi / 2.0).margin(1e-12));
    CHECK(full.iterations == 0);

    const SearchPlan e = make_plan(Variant::DistExact, 3, 1);
    CHECK(e.iterations == 2);  // K = 1
    CHECK(e.phi == Catch::Approx(2.1268800471555034).margin(1e-12));
    // the arcsin argument: sin(pi/10)/sin(theta)
    CHECK(std::sin(kPi / 10.0) / std::sin(e.theta) == Catch::Approx(0.8740320488976422).margin(1e-12));

    CHECK_THROWS_AS(make_plan(Variant::Grover, 3, 0), PromiseViolation);
    CHECK_THROWS_AS(make_plan(Variant::Grover, 3, 9), std::invalid_argument);
}

TEST_CASE("plain search reproduces the closed-form success probability") {
    const BooleanOracle f = make_oracle(3, {"101"});
    const SearchPlan plan = make_plan(Variant::Grover, 3, 1);
    const SearchResult r = run_grover(f, plan);

    // closed form sin^2(5 theta) = 121/128 exactly
    CHECK(r.success_probability == Catch::Approx(121.0 / 128.0).margin(1e-9));
    // and the independent 8-dim simulation agrees
    CHECK(r.success_probability ==
          Catch::Approx(reference_grover_3_1(plan.iterations, 0b101)).margin(1e-12));

    // the n=2, a=1 case is exact
    const BooleanOracle g = make_oracle(2, {"01"});
    CHECK(run_grover(g, make_plan(Variant::Grover, 2, 1)).success_probability ==
          Catch::Approx(1.0).margin(1e-12));

    // a = N: success 1 with zero iterations
    const BooleanOracle all = make_oracle(2, {"00", "01", "10", "11"});
    const SearchResult ra = run_grover(all, make_plan(Variant::Grover, 2, 4));
    CHECK(ra.plan.iterations == 0);
    CHECK(ra.success_probability == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("phase-rotation search is exact") {
    const BooleanOracle f = make_oracle(3, {"101"});
    const SearchResult r = run_long(f, make_plan(Variant::Long, 3, 1));
    CHECK(r.plan.iterations == 2);
    CHECK(r.success_probability == Catch::Approx(1.0).margin(1e-9));

    // n=2, a=1: K=0 gives phi = pi and the rotation reduces to the flip
    const BooleanOracle g = make_oracle(2, {"10"});
    const SearchPlan p2 = make_plan(Variant::Long, 2, 1);
    CHECK(p2.phi == Catch::Approx(kPi).margin(1e-7));
    CHECK(run_long(g, p2).success_probability == Catch::Approx(1.0).margin(1e-9));

    // a = N: degenerate but executed, one iteration, still certain
    const BooleanOracle all = make_oracle(2, {"00", "01", "10", "11"});
    const SearchPlan pfull = make_plan(Variant::Long, 2, 4);
    CHECK(pfull.iterations == 1);
    CHECK(pfull.phi == Catch::Approx(kPi / 3.0).margin(1e-12));
    CHECK(run_long(all, pfull).success_probability == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("distributed search matches the closed form") {
    const BooleanOracle f = make_oracle(4, {"0101", "1010"});
    const SearchPlan plan = make_plan(Variant::Dist, 4, 2);
    const SearchResult r = run_distributed(f, make_partition(4, 1), plan);
    const double want = std::pow(std::sin((2.0 * plan.iterations + 1.0) * plan.theta), 2);
    CHECK(r.success_probability == Catch::Approx(want).margin(1e-9));
    CHECK(r.t == 1);

    // marginal is uniform over solutions and uniform over non-solutions
    const double per_solution = r.success_probability / 2.0;
    const double per_other = (1.0 - r.success_probability) / 14.0;
    for (std::uint64_t x = 0; x < 16; ++x) {
        const double want_x = f.eval_index(x) ? per_solution : per_other;
        CHECK(r.distribution[x] == Catch::Approx(want_x).margin(1e-9));
    }

    // a = N: zero iterations, success 1
    const BooleanOracle all = make_oracle(2, {"00", "01", "10", "11"});
    const SearchResult ra = run_distributed(all, make_partition(2, 1), make_plan(Variant::Dist, 2, 4));
    CHECK(ra.plan.iterations == 0);
    CHECK(ra.success_probability == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("distributed exact search reaches certainty") {
    const BooleanOracle f3 = make_oracle(3, {"011"});
    CHECK(run_distributed_exact(f3, make_partition(3, 1), make_plan(Variant::DistExact, 3, 1))
              .success_probability == Catch::Approx(1.0).margin(1e-9));

    const BooleanOracle f4 = make_oracle(4, {"0010", "0111", "1110"});
    CHECK(run_distributed_exact(f4, make_partition(4, 2), make_plan(Variant::DistExact, 4, 3))
              .success_probability == Catch::Approx(1.0).margin(1e-9));

    // agreement with the non-distributed exact variant, marginal by marginal
    const BooleanOracle f5 = make_oracle(5, {"10110"});
    const SearchResult dist =
        run_distributed_exact(f5, make_partition(5, 1), make_plan(Variant::DistExact, 5, 1));
    const SearchResult plain = run_long(f5, make_plan(Variant::Long, 5, 1));
    CHECK(dist.success_probability == Catch::Approx(1.0).margin(1e-9));
    CHECK(plain.success_probability == Catch::Approx(1.0).margin(1e-9));
    for (std::uint64_t x = 0; x < 32; ++x)
        CHECK(dist.distribution[x] == Catch::Approx(plain.distribution[x]).margin(1e-9));
}

TEST_CASE("iteration trace follows sin^2((2l+1) theta)") {
    const BooleanOracle f = make_oracle(3, {"101"});
    const SearchResult g = run_grover(f, make_plan(Variant::Grover, 3, 1));
    REQUIRE(g.trace.size() == 3);
    CHECK(g.trace[0].solution_mass == Catch::Approx(0.125).margin(1e-12));       // a/N
    CHECK(g.trace[1].solution_mass == Catch::Approx(0.78125).margin(1e-9));      // sin^2(3 theta)
    CHECK(g.trace[2].solution_mass == Catch::Approx(121.0 / 128.0).margin(1e-9));

    // the distributed trace is the same point sequence
    const SearchResult d = run_distributed(f, make_partition(3, 1), make_plan(Variant::Dist, 3, 1));
    REQUIRE(d.trace.size() == g.trace.size());
    for (std::size_t i = 0; i < g.trace.size(); ++i)
        CHECK(d.trace[i].solution_mass == Catch::Approx(g.trace[i].solution_mass).margin(1e-9));
}

TEST_CASE("success formulas hold across the small grid") {
    std::mt19937_64 rng(5150);
    for (int n = 2; n <= 3; ++n) {
        const std::uint64_t domain = std::uint64_t{1} << n;
        for (std::uint64_t a = 1; a <= domain; ++a) {
            const BooleanOracle f = random_oracle(n, a, rng);
            const SearchPlan gp = make_plan(Variant::Grover, n, a);
            const double closed = std::pow(std::sin((2.0 * gp.iterations + 1.0) * gp.theta), 2);
            REQUIRE(std::abs(run_grover(f, gp).success_probability - closed) < 1e-9);
            REQUIRE(std::abs(run_long(f, make_plan(Variant::Long, n, a)).success_probability - 1.0) <
                    1e-9);
            for (int t = 1; t < n; ++t) {
                const PartitionConfig cfg = make_partition(n, t);
                REQUIRE(std::abs(run_distributed(f, cfg, make_plan(Variant::Dist, n, a))
                                     .success_probability -
                                 closed) < 1e-9);
                REQUIRE(std::abs(run_distributed_exact(f, cfg, make_plan(Variant::DistExact, n, a))
                                     .success_probability -
                                 1.0) < 1e-9);
            }
        }
    }
}

TEST_CASE("query-count difference matches the fractional-part rule") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t domain = std::uint64_t{1} << n;
        for (std::uint64_t a = 1; a <= domain; ++a) {
            const SearchPlan g = make_plan(Variant::Grover, n, a);
            const SearchPlan l = make_plan(Variant::Long, n, a);
            const int diff = l.iterations - g.iterations;
            REQUIRE((diff == 0 || diff == 1));
            const double x = kPi / (4.0 * g.theta);
            const bool long_half = (x - std::floor(x)) >= 0.5;
            REQUIRE(diff == (long_half ? 1 : 0));
        }
    }
}

TEST_CASE("w-register marginal matches the solution suffix distribution") {
    const BooleanOracle f = make_oracle(4, {"0101", "1001", "0110"});
    const PartitionConfig cfg = make_partition(4, 2);
    const SearchPlan plan = make_plan(Variant::DistExact, 4, 3);
    const RegisterLayout lay = make_layout(cfg);

    // exact run puts all mass on the solutions, so the w marginal equals the
    // suffix histogram of the solution set (each solution equally weighted)
    const Circuit iterate = exact_iterate(lay, f, plan.phi);
    StateVector psi(lay.total_qubits());
    apply_circuit(psi, hadamard_on_search(lay));
    for (int l = 0; l < plan.iterations; ++l) apply_circuit(psi, iterate);
    const auto w_marg = measure_probabilities(psi, lay.w_qubits());

    std::vector<double> want(4, 0.0);
    for (std::uint64_t x : f.solutions()) want[x & 0b11] += 1.0 / 3.0;
    for (std::uint64_t w = 0; w < 4; ++w)
        CHECK(w_marg[w] == Catch::Approx(want[w]).margin(1e-9));
}

TEST_CASE("variant plumbing") {
    CHECK(parse_variant("grover") == Variant::Grover);
    CHECK(parse_variant("dist-exact") == Variant::DistExact);
    CHECK_THROWS_AS(parse_variant("qiu"), std::invalid_argument);
    CHECK(std::strcmp(variant_name(Variant::Long), "long") == 0);

    const BooleanOracle f = make_oracle(3, {"101"});
    CHECK_THROWS_AS(run_grover(f, make_plan(Variant::Long, 3, 1)), std::invalid_argument);
}
