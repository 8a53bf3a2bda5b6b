#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dqsearch/oracle.hpp"

using namespace dqs;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace

TEST_CASE("oracle evaluation") {
    const BooleanOracle f = make_oracle(3, {"111"});
    CHECK(f.eval("111") == 1);
    CHECK(f.eval("000") == 0);
    CHECK_THROWS_AS(f.eval("11"), std::invalid_argument);

    const BooleanOracle g = make_oracle(2, {"01", "10"});
    CHECK(g.eval("10") == 1);
    CHECK(g.eval("11") == 0);
    CHECK(g.solution_count() == 2);
}

TEST_CASE("oracle construction guards") {
    CHECK_THROWS_AS(make_oracle(3, {}), PromiseViolation);
    CHECK_THROWS_AS(make_oracle(2, {"01", "01"}), std::invalid_argument);
    CHECK_THROWS_AS(make_oracle(2, {"012"}), std::invalid_argument);
}

TEST_CASE("sub-functions fix the suffix") {
    const BooleanOracle f = make_oracle(3, {"101"});
    const PartitionConfig cfg = make_partition(3, 1);

    const SubFunction f1 = subfunction(f, cfg, "1");
    for (std::uint64_t u = 0; u < 4; ++u) CHECK(f1.eval_index(u) == (u == 0b10));

    const SubFunction f0 = subfunction(f, cfg, "0");
    for (std::uint64_t u = 0; u < 4; ++u) CHECK_FALSE(f0.eval_index(u));

    const BooleanOracle all = make_oracle(2, {"00", "01", "10", "11"});
    const PartitionConfig cfg2 = make_partition(2, 1);
    for (const char* w : {"0", "1"}) {
        const SubFunction fw = subfunction(all, cfg2, w);
        CHECK(fw.eval("0") == 1);
        CHECK(fw.eval("1") == 1);
    }

    CHECK_THROWS_AS(subfunction(f, cfg, "10"), std::invalid_argument);
}

TEST_CASE("partition reconstruction and completeness") {
    std::mt19937_64 rng(77);
    for (int n = 2; n <= 6; ++n) {
        const BooleanOracle f = random_oracle(n, 1 + rng() % (1ull << n), rng);
        for (int t = 1; t < n; ++t) {
            const PartitionConfig cfg = make_partition(n, t);
            std::uint64_t counted = 0;
            for (std::uint64_t w = 0; w < cfg.sub_count(); ++w) {
                const SubFunction fw = subfunction_by_index(f, cfg, w);
                for (std::uint64_t u = 0; u < (std::uint64_t{1} << (n - t)); ++u) {
                    REQUIRE(fw.eval_index(u) == f.eval_index((u << t) | w));
                    if (fw.eval_index(u)) ++counted;
                }
            }
            REQUIRE(counted == f.solution_count());
        }
    }
}

TEST_CASE("partition constraints") {
    CHECK_NOTHROW(make_partition(3, 1));
    CHECK_NOTHROW(make_partition(3, 2));
    CHECK_THROWS_AS(make_partition(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_partition(3, 3), std::invalid_argument);

    // strict mode: 1 < t < log2(n) - 1 has no integer solutions until n = 9
    CHECK_NOTHROW(make_partition(9, 2, true));
    CHECK_NOTHROW(make_partition(10, 2, true));
    CHECK_THROWS_AS(make_partition(8, 2, true), std::invalid_argument);
    CHECK_THROWS_AS(make_partition(5, 2, true), std::invalid_argument);
    CHECK_THROWS_AS(make_partition(9, 1, true), std::invalid_argument);
}

TEST_CASE("OR and g") {
    CHECK(or_fn("000") == 0);
    CHECK(or_fn("010") == 1);
    CHECK(or_fn("1") == 1);
    CHECK_THROWS_AS(or_fn(""), std::invalid_argument);

    // direct substitutions into the defining expression
    CHECK(g_fn("00", "0", 0, 0) == 1);
    CHECK(g_fn("00", "1", 0, 0) == 0);  // w != 0 => g = c
    CHECK(g_fn("01", "1", 1, 1) == 1);
    CHECK(g_fn("01", "0", 1, 1) == 0);  // OR(u)=1, w=0, b=1 flips c
}

TEST_CASE("g characterization and the nonzero-ancilla corollary") {
    for (int n = 3; n <= 5; ++n) {
        for (int t = 1; t <= 2 && t < n; ++t) {
            const std::uint64_t u_dim = std::uint64_t{1} << (n - t);
            const std::uint64_t w_dim = std::uint64_t{1} << t;
            for (std::uint64_t u = 0; u < u_dim; ++u) {
                for (std::uint64_t w = 0; w < w_dim; ++w) {
                    for (int b = 0; b <= 1; ++b) {
                        for (int c = 0; c <= 1; ++c) {
                            const int got = g_eval(u != 0, w != 0, b, c);
                            const int want = c ^ ((w == 0 && b == (u != 0 ? 1 : 0)) ? 1 : 0);
                            REQUIRE(got == want);
                        }
                    }
                    // if g(u,w,0,0)=1 with d=0, the whole label is zero
                    if (g_eval(u != 0, w != 0, 0, 0) == 1) REQUIRE((u == 0 && w == 0));
                }
            }
        }
    }
}

TEST_CASE("oracle files") {
    const std::string text = write_temp("dqs_oracle_a.txt", "n=3\n101\n");
    const BooleanOracle a = load_oracle(text);
    CHECK(a.input_width() == 3);
    CHECK(a.solution_count() == 1);
    CHECK(a.eval("101") == 1);

    const std::string two = write_temp("dqs_oracle_b.txt", "n=2\n01\n10\n");
    CHECK(load_oracle(two).solution_count() == 2);

    const std::string json = write_temp("dqs_oracle_c.json", R"({"n": 2, "solutions": ["01", "10"]})");
    const BooleanOracle c = load_oracle(json);
    CHECK(c.input_width() == 2);
    CHECK(c.solution_count() == 2);

    const std::string empty = write_temp("dqs_oracle_d.txt", "n=3\n");
    CHECK_THROWS_AS(load_oracle(empty), PromiseViolation);

    const std::string dup = write_temp("dqs_oracle_e.txt", "n=2\n01\n01\n");
    CHECK_THROWS_AS(load_oracle(dup), OracleParseError);

    const std::string bad = write_temp("dqs_oracle_f.txt", "m=3\n101\n");
    CHECK_THROWS_AS(load_oracle(bad), OracleParseError);

    const std::string wide = write_temp("dqs_oracle_g.txt", "n=3\n10\n");
    CHECK_THROWS_AS(load_oracle(wide), OracleParseError);

    CHECK_THROWS_AS(load_oracle("/nonexistent/oracle.txt"), OracleParseError);
}
