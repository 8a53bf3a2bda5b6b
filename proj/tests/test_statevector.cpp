#include <catch2/catch_amalgamated.hpp>

#include "dqsearch/circuit.hpp"
#include "dqsearch/statevector.hpp"
#include "test_support.hpp"

using namespace dqs;
using dqs_test::random_state;
using dqs_test::random_targets;
using dqs_test::random_unitary;

TEST_CASE("basis state preparation") {
    StateVector psi = init_basis_state(2, "00");
    CHECK(psi.amplitude(0) == Complex{1.0});
    CHECK(psi.amplitude(1) == Complex{});
    CHECK(psi.amplitude(2) == Complex{});
    CHECK(psi.amplitude(3) == Complex{});

    StateVector one = init_basis_state(1, "1");
    CHECK(one.amplitude(0) == Complex{});
    CHECK(one.amplitude(1) == Complex{1.0});

    // big-endian: "101" sits at index 5
    StateVector three = init_basis_state(3, "101");
    for (std::uint64_t x = 0; x < 8; ++x)
        CHECK(three.amplitude(x) == (x == 5 ? Complex{1.0} : Complex{}));

    CHECK_THROWS_AS(init_basis_state(3, "10"), std::invalid_argument);
}

TEST_CASE("single-qubit gates") {
    const double s = 1.0 / std::sqrt(2.0);
    StateVector psi(1);
    apply_unitary(psi, hadamard(), {0});
    CHECK(std::abs(psi.amplitude(0) - s) < 1e-15);
    CHECK(std::abs(psi.amplitude(1) - s) < 1e-15);

    apply_unitary(psi, pauli_z(), {0});
    CHECK(std::abs(psi.amplitude(0) - s) < 1e-15);
    CHECK(std::abs(psi.amplitude(1) + s) < 1e-15);
}

TEST_CASE("identity leaves the state bitwise unchanged") {
    std::mt19937_64 rng(11);
    StateVector psi = random_state(3, rng);
    StateVector before = psi;
    apply_unitary(psi, identity_gate(2), {2, 0});
    for (std::uint64_t x = 0; x < psi.size(); ++x) CHECK(psi.amplitude(x) == before.amplitude(x));
}

TEST_CASE("apply_unitary validates its inputs") {
    StateVector psi(2);
    CHECK_THROWS_AS(apply_unitary(psi, hadamard(), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(psi, hadamard(), {2}), std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(psi, identity_gate(2), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_unitary(1, {1.0, 1.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("diagonal phases") {
    std::mt19937_64 rng(12);
    StateVector psi = random_state(2, rng);
    StateVector before = psi;

    apply_diagonal_phase(psi, [](std::uint64_t) { return Complex{1.0}; });
    for (std::uint64_t x = 0; x < 4; ++x) CHECK(psi.amplitude(x) == before.amplitude(x));

    apply_diagonal_phase(psi, [](std::uint64_t) { return Complex{-1.0}; });
    for (std::uint64_t x = 0; x < 4; ++x)
        CHECK(std::norm(psi.amplitude(x)) == Catch::Approx(std::norm(before.amplitude(x))));

    // sign flip on |11> of the uniform 2-qubit state: overlap with uniform
    // drops to (1+1+1-1)/4 = 1/2
    StateVector uniform(2);
    apply_unitary(uniform, hadamard(), {0});
    apply_unitary(uniform, hadamard(), {1});
    StateVector flipped = uniform;
    apply_diagonal_phase(flipped, [](std::uint64_t x) { return x == 3 ? Complex{-1.0} : Complex{1.0}; });
    CHECK(std::abs(inner_product(uniform, flipped) - Complex{0.5}) < 1e-14);

    CHECK_THROWS_AS(apply_diagonal_phase(psi, [](std::uint64_t) { return Complex{0.5}; }),
                    std::invalid_argument);
}

TEST_CASE("measurement marginals") {
    StateVector plus(1);
    apply_unitary(plus, hadamard(), {0});
    auto p = measure_probabilities(plus, {0});
    CHECK(p[0] == Catch::Approx(0.5).margin(1e-12));
    CHECK(p[1] == Catch::Approx(0.5).margin(1e-12));

    StateVector basis = init_basis_state(2, "10");
    auto q = measure_probabilities(basis, {0});
    CHECK(q[1] == Catch::Approx(1.0));

    // uniform 3-qubit state: every outcome of the full register at 1/8
    StateVector h(3);
    for (int qb : {0, 1, 2}) apply_unitary(h, hadamard(), {qb});
    auto full = measure_probabilities(h, {0, 1, 2});
    for (double v : full) CHECK(v == Catch::Approx(0.125).margin(1e-12));
    CHECK(std::accumulate(full.begin(), full.end(), 0.0) == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("build_matrix basics") {
    Circuit empty(1);
    CHECK(max_abs_diff(build_matrix(empty), CMatrix::identity(2)) == 0.0);

    Circuit h(1);
    h.add(hadamard(), {0});
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix hm = build_matrix(h);
    CHECK(std::abs(hm(0, 0) - s) < 1e-15);
    CHECK(std::abs(hm(1, 1) + s) < 1e-15);

    // H (x) H, checked against a hand-built Kronecker product
    Circuit hh(2);
    hh.add(hadamard(), {0}).add(hadamard(), {1});
    CMatrix got = build_matrix(hh);
    CMatrix want(4, 4);
    const double h1[2][2] = {{s, s}, {s, -s}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) want(i, j) = h1[i >> 1][j >> 1] * h1[i & 1][j & 1];
    CHECK(max_abs_diff(got, want) < 1e-14);
    for (const Complex& e : got.data) CHECK(std::abs(std::abs(e) - 0.5) < 1e-14);

    CHECK_THROWS_AS(build_matrix(Circuit(15)), CapacityError);
}

TEST_CASE("norm preservation over random gate applications") {
    std::mt19937_64 rng(123);
    StateVector psi = random_state(6, rng);
    std::uniform_int_distribution<int> pick_arity(1, 3);
    for (int i = 0; i < 1000; ++i) {
        const int k = pick_arity(rng);
        apply_unitary(psi, random_unitary(k, rng), random_targets(6, k, rng));
        REQUIRE(std::abs(psi.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("circuit composition equals matrix product") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = 3;
        Circuit a(m), b(m), ab(m);
        std::uniform_int_distribution<int> pick_arity(1, 2);
        for (int i = 0; i < 4; ++i) {
            const int k = pick_arity(rng);
            a.add(random_unitary(k, rng), random_targets(m, k, rng));
            b.add(random_unitary(k, rng), random_targets(m, k, rng));
        }
        ab.add(a).add(b);
        CHECK(max_abs_diff(build_matrix(ab), build_matrix(b) * build_matrix(a)) < 1e-10);
    }
}

namespace {

// Independent embedding: the full matrix entry is the gate entry on the
// gathered target bits when the spectator bits agree, else zero.
CMatrix embed_reference(const LocalUnitary& g, const std::vector<int>& targets, int m) {
    const std::uint64_t dim = std::uint64_t{1} << m;
    const int k = g.arity;
    std::uint64_t tmask = 0;
    for (int q : targets) tmask |= std::uint64_t{1} << (m - 1 - q);
    CMatrix out(dim, dim);
    auto local = [&](std::uint64_t x) {
        std::uint64_t j = 0;
        for (int i = 0; i < k; ++i)
            j |= ((x >> (m - 1 - targets[static_cast<std::size_t>(i)])) & 1) << (k - 1 - i);
        return j;
    };
    for (std::uint64_t row = 0; row < dim; ++row)
        for (std::uint64_t col = 0; col < dim; ++col)
            if ((row & ~tmask) == (col & ~tmask)) out(row, col) = g.at(local(row), local(col));
    return out;
}

}  // namespace

TEST_CASE("gate embedding matches the permuted Kronecker matrix for all orderings") {
    std::mt19937_64 rng(55);
    for (int m = 2; m <= 4; ++m) {
        for (int k = 1; k <= 2; ++k) {
            // all ordered distinct target tuples
            std::vector<std::vector<int>> tuples;
            for (int q0 = 0; q0 < m; ++q0) {
                if (k == 1) {
                    tuples.push_back({q0});
                    continue;
                }
                for (int q1 = 0; q1 < m; ++q1)
                    if (q1 != q0) tuples.push_back({q0, q1});
            }
            for (const auto& targets : tuples) {
                const LocalUnitary g = random_unitary(k, rng);
                Circuit c(m);
                c.add(g, targets);
                CHECK(max_abs_diff(build_matrix(c), embed_reference(g, targets, m)) < 1e-12);
            }
        }
    }
}
