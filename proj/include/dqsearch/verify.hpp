#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dqsearch/algorithms.hpp"
#include "dqsearch/circuit.hpp"
#include "dqsearch/operators.hpp"
#include "dqsearch/su2_so3.hpp"

#include <json.hpp>

namespace dqs {

// Independent brute-force oracles for the propositions, lemmas and theorems:
// direct-definition matrices built by basis enumeration (never through the
// circuit path they are checking), the restricted 2x2 block analysis, and
// the Bloch-sphere machinery.

namespace detail {

struct LabelFields {
    std::uint64_t u = 0, w = 0, a_reg = 0;
    int a_w = 0, b_query = 0;
    int b_or = 0, c_zero = 0;
    std::uint64_t d_reg = 0;
};

inline LabelFields decode_label(const RegisterLayout& lay, std::uint64_t x) {
    const int slots = lay.slot_count();
    LabelFields f;
    f.b_query = static_cast<int>(x & 1);
    f.a_reg = (x >> 1) & ((std::uint64_t{1} << slots) - 1);
    f.w = (x >> (slots + 1)) & ((std::uint64_t{1} << lay.t) - 1);
    f.u = x >> (slots + 1 + lay.t);
    f.a_w = static_cast<int>((x >> (slots - static_cast<int>(f.w))) & 1);
    f.b_or = static_cast<int>((x >> slots) & 1);
    f.c_zero = static_cast<int>((x >> (slots - 1)) & 1);
    f.d_reg = x & ((std::uint64_t{1} << (slots - 1)) - 1);
    return f;
}

inline void check_capacity(const RegisterLayout& lay) {
    if (lay.total_qubits() > 14) throw CapacityError("direct matrix exceeds the 14-qubit dense guard");
}

// (H^n (x) I)|u,w,anc> as an amplitude vector, by enumeration.
inline std::vector<Complex> hadamard_column(const RegisterLayout& lay, std::uint64_t label) {
    const int anc_bits = lay.slot_count() + 1;
    const std::uint64_t domain = std::uint64_t{1} << lay.n;
    const std::uint64_t uw = label >> anc_bits;
    const std::uint64_t anc = label & ((std::uint64_t{1} << anc_bits) - 1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(domain));
    std::vector<Complex> v(std::uint64_t{1} << lay.total_qubits());
    for (std::uint64_t y = 0; y < domain; ++y) {
        const int sign = std::popcount(y & uw) & 1;
        v[(y << anc_bits) | anc] = sign ? -scale : scale;
    }
    return v;
}

}  // namespace detail

// Diagonal of the conjugated query network on the full register. The query
// flag picks up the pre-existing slot value a_w along with f_w(u); on
// slot-zero labels this reduces to the plain b + f_w(u) exponent.
inline CMatrix direct_oracle_diagonal(const RegisterLayout& lay, const BooleanOracle& oracle,
                                      Complex on_phase) {
    detail::check_capacity(lay);
    const PartitionConfig cfg{lay.n, lay.t};
    const std::uint64_t dim = std::uint64_t{1} << lay.total_qubits();
    CMatrix m(dim, dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        const auto f = detail::decode_label(lay, x);
        const int fw = subfunction_by_index(oracle, cfg, f.w).eval_index(f.u) ? 1 : 0;
        const int exponent = f.b_query ^ f.a_w ^ fw;
        m(x, x) = exponent ? on_phase : Complex{1.0};
    }
    return m;
}

// I + coef (|h><h| + Pi_perp), the shared shape of the diffusion operators
// (coef = -2 for the reflection, e^{i phi} - 1 for the rotation).
inline CMatrix direct_diffusion_matrix(const RegisterLayout& lay, Complex coef) {
    detail::check_capacity(lay);
    const std::uint64_t dim = std::uint64_t{1} << lay.total_qubits();
    const int anc_bits = lay.slot_count() + 1;
    CMatrix m = CMatrix::identity(dim);
    add_outer(m, detail::hadamard_column(lay, 0), coef);
    for (std::uint64_t z = 0; z < dim; ++z) {
        const std::uint64_t bcd = z & ((std::uint64_t{1} << anc_bits) - 1);
        if (bcd == 0) continue;
        const auto f = detail::decode_label(lay, z);
        if (g_eval(f.u != 0, f.w != 0, f.b_or, f.c_zero) != 1) continue;
        add_outer(m, detail::hadamard_column(lay, z), coef);
    }
    return m;
}

enum class Decomposition { OracleReflection, DiffusionReflection, OracleRotation, DiffusionRotation };

inline const char* decomposition_name(Decomposition d) {
    switch (d) {
        case Decomposition::OracleReflection: return "oracle-reflection";
        case Decomposition::DiffusionReflection: return "diffusion-reflection";
        case Decomposition::OracleRotation: return "oracle-rotation";
        case Decomposition::DiffusionRotation: return "diffusion-rotation";
    }
    return "?";
}

inline CMatrix direct_matrix(Decomposition which, const RegisterLayout& lay, const BooleanOracle& oracle,
                             double phi = 0.0) {
    switch (which) {
        case Decomposition::OracleReflection: return direct_oracle_diagonal(lay, oracle, -1.0);
        case Decomposition::OracleRotation:
            return direct_oracle_diagonal(lay, oracle, std::polar(1.0, phi));
        case Decomposition::DiffusionReflection: return direct_diffusion_matrix(lay, -2.0);
        case Decomposition::DiffusionRotation:
            return direct_diffusion_matrix(lay, std::polar(1.0, phi) - 1.0);
    }
    throw std::invalid_argument("unknown decomposition");
}

inline Circuit decomposed_circuit(Decomposition which, const RegisterLayout& lay,
                                  const BooleanOracle& oracle, double phi = 0.0) {
    switch (which) {
        case Decomposition::OracleReflection: return oracle_reflection(lay, oracle);
        case Decomposition::OracleRotation: return oracle_rotation(lay, oracle, phi);
        case Decomposition::DiffusionReflection: return diffusion_reflection(lay);
        case Decomposition::DiffusionRotation: return diffusion_rotation(lay, phi);
    }
    throw std::invalid_argument("unknown decomposition");
}

// Max-norm gap between the direct-definition matrix and the decomposed
// circuit's matrix, with no phase freedom.
inline double check_decomposition(Decomposition which, const RegisterLayout& lay,
                                  const BooleanOracle& oracle, double phi = 0.0) {
    return max_abs_diff(build_matrix(decomposed_circuit(which, lay, oracle, phi)),
                        direct_matrix(which, lay, oracle, phi));
}

// The stated slot-free diagonal, valid on the labels the search ever
// occupies: worst gap of the decomposed matrix against e^{i phi (b+f_w(u))}
// over the zero-slot labels (phi = pi gives the reflection).
inline double check_zero_slot_diagonal(const CMatrix& m, Decomposition which, const RegisterLayout& lay,
                                       const BooleanOracle& oracle, double phi) {
    if (which != Decomposition::OracleReflection && which != Decomposition::OracleRotation)
        throw std::invalid_argument("zero-slot check applies to the query-side operators");
    const Complex on = which == Decomposition::OracleReflection ? Complex{-1.0} : std::polar(1.0, phi);
    const PartitionConfig cfg{lay.n, lay.t};
    double worst = 0.0;
    for (std::uint64_t x = 0; x < m.rows; ++x) {
        const auto f = detail::decode_label(lay, x);
        if (f.a_reg != 0) continue;
        const int fw = subfunction_by_index(oracle, cfg, f.w).eval_index(f.u) ? 1 : 0;
        const Complex want = (f.b_query ^ fw) ? on : Complex{1.0};
        worst = std::max(worst, std::abs(m(x, x) - want));
        for (std::uint64_t y = 0; y < m.cols; ++y)
            if (y != x) worst = std::max(worst, std::abs(m(x, y)));
    }
    return worst;
}

inline double check_zero_slot_diagonal(Decomposition which, const RegisterLayout& lay,
                                       const BooleanOracle& oracle, double phi) {
    return check_zero_slot_diagonal(build_matrix(decomposed_circuit(which, lay, oracle, phi)), which,
                                    lay, oracle, phi);
}

// Harness sanity: a copy of the circuit with one gate visibly wrong (rows
// swapped, still unitary) so corrupted builds cannot pass the checks.
inline Circuit with_corrupted_gate(Circuit c, std::size_t gate_index) {
    if (gate_index >= c.gates.size()) throw std::invalid_argument("gate index out of range");
    LocalUnitary& op = c.gates[gate_index].op;
    const std::uint64_t d = op.dim();
    for (std::uint64_t j = 0; j < d; ++j) std::swap(op.mat[j], op.mat[d + j]);
    return c;
}

// --- restricted block and Bloch analysis ---

struct RestrictedBlock {
    Mat2 block{};
    double leakage = 0.0;
};

// [[<A'|C|A'>, <A'|C|B'>], [<B'|C|A'>, <B'|C|B'>]] with the leakage of the
// two images outside span{|A'>,|B'>}.
inline RestrictedBlock restricted_block(const Circuit& c, const SpanPair& pair,
                                        double leak_tol = 1e-10) {
    StateVector qa = pair.marked;
    StateVector qb = pair.unmarked;
    apply_circuit(qa, c);
    apply_circuit(qb, c);
    RestrictedBlock out;
    out.block = {inner_product(pair.marked, qa), inner_product(pair.marked, qb),
                 inner_product(pair.unmarked, qa), inner_product(pair.unmarked, qb)};
    double leak2 = 0.0;
    for (std::uint64_t x = 0; x < qa.size(); ++x) {
        const Complex ra = qa.amplitude(x) - out.block[0] * pair.marked.amplitude(x) -
                           out.block[2] * pair.unmarked.amplitude(x);
        const Complex rb = qb.amplitude(x) - out.block[1] * pair.marked.amplitude(x) -
                           out.block[3] * pair.unmarked.amplitude(x);
        leak2 = std::max(leak2, std::max(std::norm(ra), std::norm(rb)));
    }
    out.leakage = std::sqrt(leak2);
    if (out.leakage > leak_tol) throw SpanLeakageError("operator does not preserve the search plane");
    return out;
}

// Bloch vector of an in-span state, via the Pauli expectations of its
// (alpha, beta) coordinates.
inline Vec3 bloch_vector(const StateVector& psi, const SpanPair& pair, double leak_tol = 1e-10) {
    const Complex alpha = inner_product(pair.marked, psi);
    const Complex beta = inner_product(pair.unmarked, psi);
    double leak2 = 0.0;
    for (std::uint64_t x = 0; x < psi.size(); ++x) {
        const Complex r = psi.amplitude(x) - alpha * pair.marked.amplitude(x) -
                          beta * pair.unmarked.amplitude(x);
        leak2 += std::norm(r);
    }
    if (std::sqrt(leak2) > leak_tol) throw SpanLeakageError("state lies outside the search plane");
    const Complex ab = std::conj(alpha) * beta;
    return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(alpha) - std::norm(beta)};
}

// --- lemma checks (closed forms; lemma 4 crosses into the simulator) ---

// Entrywise block vs the axis-angle form.
inline double lemma1_deviation(double theta, double phi) {
    return max_abs_diff2(exact_iterate_block(theta, phi), axis_angle_block(make_rotation_params(theta, phi)));
}

// Conjugation transports Pauli components by the SO(3) image:
// M H_r M^{-1} = (R r) . sigma, insensitive to the unit scalar.
inline double lemma2_deviation(Complex u, Complex v, Complex scalar, const Vec3& r) {
    const Mat2 m = {scalar * u, scalar * v, -scalar * std::conj(v), scalar * std::conj(u)};
    const Mat3 rot = rotation_from_block(u, v);
    const Mat2 lhs = mul2(mul2(m, pauli_combo(r)), dagger2(m));
    const Mat2 rhs = pauli_combo(mat3_apply(rot, r));
    double dev = max_abs_diff2(lhs, rhs);
    dev = std::max(dev, orthogonality_defect(rot));
    dev = std::max(dev, std::abs(det3(rot) - 1.0));
    return dev;
}

// Euler-decomposed rotation about the tilted axis reproduces the block.
inline double lemma3_deviation(double theta, double phi) {
    const RotationParams p = make_rotation_params(theta, phi);
    Mat2 rhs = euler_axis_rotation(p.axis, p.alpha);
    const Complex pre = -std::polar(1.0, phi);
    for (auto& e : rhs) e *= pre;
    return max_abs_diff2(exact_iterate_block(theta, phi), rhs);
}

// Bloch transport under the full simulated iterate matches R applied to the
// input Bloch vector.
inline double lemma4_deviation(const RegisterLayout& lay, const BooleanOracle& oracle, double phi,
                               const StateVector& psi) {
    const SpanPair pair = make_span_pair(lay, oracle);
    const Mat3 rot = rotation_from_block(block_u(pair.theta, phi), block_v(pair.theta, phi));
    const Vec3 before = bloch_vector(psi, pair);
    StateVector out = psi;
    apply_circuit(out, exact_iterate(lay, oracle, phi));
    const Vec3 after = bloch_vector(out, pair);
    const Vec3 want = mat3_apply(rot, before);
    return std::max({std::abs(after[0] - want[0]), std::abs(after[1] - want[1]),
                     std::abs(after[2] - want[2])});
}

struct Lemma5Check {
    bool skipped = false;  // theta = pi/2 makes tan(theta) singular
    double deviation = 0.0;
};

// r_p is the common projection of r_h and r_A onto the axis, and the angle
// between the projected rays has cos(omega) = cos(2 arccos(sin(phi/2) sin(theta))).
inline Lemma5Check lemma5_check(double theta, double phi) {
    if (std::abs(std::cos(theta)) < 1e-6) return {true, 0.0};
    const double tn = std::tan(theta);
    const double ch = std::cos(phi / 2.0), sh = std::sin(phi / 2.0);
    const double k = ch * ch * tn * tn;
    const double scale = 1.0 / (1.0 + k);
    const Vec3 rp = {scale * ch * ch * tn, scale * sh * ch * tn, scale * k};
    const Vec3 rh = {std::sin(2.0 * theta), 0.0, -std::cos(2.0 * theta)};
    const Vec3 ra = {0.0, 0.0, 1.0};

    double dev = std::abs(dot3(rh, rp) - dot3(rp, rp));
    dev = std::max(dev, std::abs(dot3(ra, rp) - dot3(rp, rp)));

    const Vec3 d1 = sub3(rh, rp);
    const Vec3 d2 = sub3(ra, rp);
    const double cosw = dot3(d1, d2) / (norm3(d1) * norm3(d2));
    const double closed = std::cos(2.0 * std::acos(sh * std::sin(theta)));
    return {false, std::max(dev, std::abs(cosw - closed))};
}

// With phi from the plan rule, the full sweep angle omega equals K+1 steps
// of alpha. Regular at theta = pi/2 (closed forms only).
inline double phase_matching_deviation(double theta) {
    const int k = exact_rotation_count(theta);
    const double phi = exact_rotation_phase(theta, k);
    const double s = std::sin(phi / 2.0) * std::sin(theta);
    const double omega = 2.0 * std::acos(s);
    const double alpha = 4.0 * std::asin(s);
    return std::abs(omega - (k + 1) * alpha);
}

// --- sweep drivers and the verification report ---

struct CheckRecord {
    std::string name;
    nlohmann::json params;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline CheckRecord make_record(std::string name, nlohmann::json params, double deviation,
                               double tolerance) {
    return CheckRecord{std::move(name), std::move(params), deviation, tolerance,
                       deviation < tolerance};
}

inline nlohmann::json report_to_json(const std::vector<CheckRecord>& records) {
    nlohmann::json checks = nlohmann::json::array();
    int failed = 0;
    for (const CheckRecord& r : records) {
        checks.push_back({{"name", r.name},
                          {"params", r.params},
                          {"deviation", r.deviation},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass}});
        if (!r.pass) ++failed;
    }
    return {{"checks", checks},
            {"passed", static_cast<int>(records.size()) - failed},
            {"failed", failed},
            {"all_pass", failed == 0}};
}

inline bool all_pass(const std::vector<CheckRecord>& records) {
    for (const CheckRecord& r : records)
        if (!r.pass) return false;
    return true;
}

inline const std::vector<std::pair<int, int>>& decomposition_grid() {
    static const std::vector<std::pair<int, int>> grid = {{3, 1}, {4, 1}, {4, 2}, {5, 1}};
    return grid;
}

// Direct-vs-decomposed matrices for every proposition over the standard
// (n,t) grid, several random oracles each, three phases for the rotations.
inline std::vector<CheckRecord> run_decomposition_checks(int max_n, int oracles_per_config,
                                                         std::uint64_t seed, bool corrupt = false) {
    std::vector<CheckRecord> out;
    std::mt19937_64 rng(seed);
    const double tol = 1e-10;
    const std::vector<double> phases = {0.3, 1.0, kPi};
    for (const auto& [n, t] : decomposition_grid()) {
        if (n > max_n) continue;
        const RegisterLayout lay = make_layout(n, t);
        for (int i = 0; i < oracles_per_config; ++i) {
            const std::uint64_t domain = std::uint64_t{1} << n;
            std::uniform_int_distribution<std::uint64_t> pick_a(1, domain);
            const BooleanOracle oracle = random_oracle(n, pick_a(rng), rng);
            nlohmann::json base = {{"n", n}, {"t", t}, {"a", oracle.solution_count()}, {"oracle", i}};

            Circuit reflection = oracle_reflection(lay, oracle);
            if (corrupt) reflection = with_corrupted_gate(reflection, 0);
            const CMatrix built = build_matrix(reflection);
            out.push_back(make_record(
                "oracle-reflection/full-register", base,
                max_abs_diff(built, direct_matrix(Decomposition::OracleReflection, lay, oracle)), tol));
            out.push_back(make_record(
                "oracle-reflection/zero-slot-diagonal", base,
                check_zero_slot_diagonal(built, Decomposition::OracleReflection, lay, oracle, kPi),
                tol));
            out.push_back(make_record(
                "diffusion-reflection", base,
                check_decomposition(Decomposition::DiffusionReflection, lay, oracle), tol));
            for (double phi : phases) {
                nlohmann::json p = base;
                p["phi"] = phi;
                const CMatrix rot = build_matrix(
                    decomposed_circuit(Decomposition::OracleRotation, lay, oracle, phi));
                out.push_back(make_record(
                    "oracle-rotation/full-register", p,
                    max_abs_diff(rot, direct_matrix(Decomposition::OracleRotation, lay, oracle, phi)),
                    tol));
                out.push_back(make_record(
                    "oracle-rotation/zero-slot-diagonal", p,
                    check_zero_slot_diagonal(rot, Decomposition::OracleRotation, lay, oracle, phi),
                    tol));
                out.push_back(make_record(
                    "diffusion-rotation", p,
                    check_decomposition(Decomposition::DiffusionRotation, lay, oracle, phi), tol));
            }
        }
    }
    return out;
}

inline std::vector<CheckRecord> run_lemma_checks(int points, std::uint64_t seed) {
    std::vector<CheckRecord> out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pick_theta(0.05, 1.52);
    std::uniform_real_distribution<double> pick_phi(0.1, kPi);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double tol = 1e-10;
    const nlohmann::json params = {{"points", points}, {"seed", seed}};

    double worst = 0.0;
    for (int i = 0; i < points; ++i) worst = std::max(worst, lemma1_deviation(pick_theta(rng), pick_phi(rng)));
    out.push_back(make_record("lemma1/axis-angle-form", params, worst, tol));

    worst = 0.0;
    for (int i = 0; i < points; ++i) {
        Complex u{unit(rng), unit(rng)}, v{unit(rng), unit(rng)};
        const double nrm = std::sqrt(std::norm(u) + std::norm(v));
        u /= nrm;
        v /= nrm;
        const Vec3 r = {unit(rng), unit(rng), unit(rng)};
        worst = std::max(worst, lemma2_deviation(u, v, std::polar(1.0, pick_phi(rng)), r));
    }
    out.push_back(make_record("lemma2/so3-conjugation", params, worst, tol));

    worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double theta = pick_theta(rng), phi = pick_phi(rng);
        worst = std::max(worst, static_cast<double>(
            [&] {
                Mat3 a = rotation_from_block(block_u(theta, phi), block_v(theta, phi));
                Mat3 b = rotation_closed_form(theta, phi);
                double d = 0.0;
                for (int e = 0; e < 9; ++e) d = std::max(d, std::abs(a[e] - b[e]));
                return d;
            }()));
    }
    out.push_back(make_record("lemma2/closed-form-entries", params, worst, tol));

    worst = 0.0;
    for (int i = 0; i < points; ++i) worst = std::max(worst, lemma3_deviation(pick_theta(rng), pick_phi(rng)));
    out.push_back(make_record("lemma3/euler-decomposition", params, worst, tol));

    worst = 0.0;
    {
        const RegisterLayout lay = make_layout(3, 1);
        for (int i = 0; i < points; ++i) {
            std::uniform_int_distribution<std::uint64_t> pick_a(1, 7);
            const BooleanOracle oracle = random_oracle(3, pick_a(rng), rng);
            const SpanPair pair = make_span_pair(lay, oracle);
            Complex alpha{unit(rng), unit(rng)}, beta{unit(rng), unit(rng)};
            const double nrm = std::sqrt(std::norm(alpha) + std::norm(beta));
            alpha /= nrm;
            beta /= nrm;
            StateVector psi(lay.total_qubits());
            for (std::uint64_t x = 0; x < psi.size(); ++x)
                psi.amplitudes()[x] = alpha * pair.marked.amplitude(x) + beta * pair.unmarked.amplitude(x);
            worst = std::max(worst, lemma4_deviation(lay, oracle, pick_phi(rng), psi));
        }
    }
    out.push_back(make_record("lemma4/bloch-transport", params, worst, tol));

    worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const Lemma5Check c = lemma5_check(pick_theta(rng), pick_phi(rng));
        if (!c.skipped) worst = std::max(worst, c.deviation);
    }
    out.push_back(make_record("lemma5/projected-angle", params, worst, tol));

    worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t domain = std::uint64_t{1} << n;
        for (std::uint64_t a = 1; a <= domain; ++a) {
            const double theta = std::asin(std::sqrt(static_cast<double>(a) / static_cast<double>(domain)));
            worst = std::max(worst, phase_matching_deviation(theta));
        }
    }
    out.push_back(make_record("lemma5/phase-matching", {{"grid", "n<=5, all a"}}, worst, tol));

    return out;
}

// End-to-end reproduction of the success-probability claims.
inline std::vector<CheckRecord> run_theorem_checks(int max_n, std::uint64_t seed) {
    std::vector<CheckRecord> out;
    std::mt19937_64 rng(seed);
    const double tol = 1e-9;

    double dev_grover = 0.0, dev_dist = 0.0, dev_long = 0.0, dev_exact = 0.0;
    for (int n = 2; n <= max_n; ++n) {
        const std::uint64_t domain = std::uint64_t{1} << n;
        for (std::uint64_t a = 1; a <= domain; ++a) {
            const BooleanOracle oracle = random_oracle(n, a, rng);
            const SearchPlan gp = make_plan(Variant::Grover, n, a);
            const double closed = std::pow(std::sin((2.0 * gp.iterations + 1.0) * gp.theta), 2);
            dev_grover = std::max(dev_grover,
                                  std::abs(run_grover(oracle, gp).success_probability - closed));
            dev_long = std::max(dev_long,
                                std::abs(run_long(oracle, make_plan(Variant::Long, n, a)).success_probability - 1.0));
            for (int t = 1; t <= 2 && t < n; ++t) {
                const PartitionConfig cfg = make_partition(n, t);
                dev_dist = std::max(
                    dev_dist, std::abs(run_distributed(oracle, cfg, make_plan(Variant::Dist, n, a))
                                           .success_probability -
                                       closed));
                dev_exact = std::max(
                    dev_exact,
                    std::abs(run_distributed_exact(oracle, cfg, make_plan(Variant::DistExact, n, a))
                                 .success_probability -
                             1.0));
            }
        }
    }
    const nlohmann::json params = {{"n", "2.." + std::to_string(max_n)}, {"t", "1..2"}};
    out.push_back(make_record("proposition1/grover-success-formula", params, dev_grover, tol));
    out.push_back(make_record("theorem1/distributed-success-formula", params, dev_dist, tol));
    out.push_back(make_record("proposition2/long-exactness", params, dev_long, tol));
    out.push_back(make_record("theorem2/distributed-exactness", params, dev_exact, tol));
    return out;
}

}  // namespace dqs
