#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "dqsearch/errors.hpp"

namespace dqs {

// Closed-form 2x2 / 3x3 machinery for the rotation picture of the exact
// iterate, independent of the statevector simulator.

using Mat2 = std::array<std::complex<double>, 4>;  // row-major
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<double, 9>;  // row-major

inline Mat2 mul2(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 dagger2(const Mat2& a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

inline double max_abs_diff2(const Mat2& a, const Mat2& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline Mat2 ident2() { return {1.0, 0.0, 0.0, 1.0}; }
inline Mat2 pauli_x2() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 pauli_y2() {
    using namespace std::complex_literals;
    return {0.0, -1.0i, 1.0i, 0.0};
}
inline Mat2 pauli_z2() { return {1.0, 0.0, 0.0, -1.0}; }

// r * sigma = x X + y Y + z Z
inline Mat2 pauli_combo(const Vec3& r) {
    using namespace std::complex_literals;
    return {r[2], r[0] - 1.0i * r[1], r[0] + 1.0i * r[1], -r[2]};
}

inline double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }
inline Vec3 sub3(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Vec3 mat3_apply(const Mat3& m, const Vec3& v) {
    return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
            m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
            m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
}

inline double det3(const Mat3& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

// max |R^T R - I|
inline double orthogonality_defect(const Mat3& m) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += m[3 * k + i] * m[3 * k + j];
            worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

// Rotation parameters of the exact iterate on the search plane:
// alpha = 4 beta with sin(beta) = sin(phi/2) sin(theta), axis
// (cos(theta)/cos(beta)) [cos(phi/2), sin(phi/2), cos(phi/2) tan(theta)].
// The z component is computed through sin(theta) so theta = pi/2 stays
// regular.
struct RotationParams {
    double theta = 0.0;
    double phi = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    Vec3 axis{0.0, 0.0, 0.0};
};

inline RotationParams make_rotation_params(double theta, double phi) {
    const double s = std::sin(phi / 2.0) * std::sin(theta);
    if (std::abs(s) > 1.0) throw PhaseDomainError("sin(phi/2) sin(theta) outside [-1,1]");
    RotationParams p;
    p.theta = theta;
    p.phi = phi;
    p.beta = std::asin(s);
    p.alpha = 4.0 * p.beta;
    const double cb = std::cos(p.beta);
    if (cb < 1e-12) throw PhaseDomainError("degenerate rotation: cos(beta) = 0");
    p.axis = {std::cos(theta) / cb * std::cos(phi / 2.0),
              std::cos(theta) / cb * std::sin(phi / 2.0),
              std::sin(theta) / cb * std::cos(phi / 2.0)};
    return p;
}

// The restricted matrix of the exact iterate in the {|A'>,|B'>} basis,
// entry by entry.
inline Mat2 exact_iterate_block(double theta, double phi) {
    const std::complex<double> e = std::polar(1.0, phi);
    const std::complex<double> einv = std::polar(1.0, -phi);
    const double s = std::sin(theta), c = std::cos(theta);
    const std::complex<double> pre = -e;
    return {pre * (1.0 + (e - 1.0) * s * s), pre * ((1.0 - einv) * s * c),
            pre * ((e - 1.0) * s * c), pre * (1.0 - (1.0 - einv) * s * s)};
}

// Restricted matrix of the plain iterate: rotation by 2 theta.
inline Mat2 grover_iterate_block(double theta) {
    const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
    return {c, s, -s, c};
}

// -e^{i phi} [cos(alpha/2) I + i sin(alpha/2) (n . sigma)]
inline Mat2 axis_angle_block(const RotationParams& p) {
    using namespace std::complex_literals;
    const std::complex<double> pre = -std::polar(1.0, p.phi);
    const double ch = std::cos(p.alpha / 2.0), sh = std::sin(p.alpha / 2.0);
    const Mat2 ns = pauli_combo(p.axis);
    Mat2 out;
    const Mat2 id = ident2();
    for (int i = 0; i < 4; ++i) out[i] = pre * (ch * id[i] + 1.0i * sh * ns[i]);
    return out;
}

// The (u, v) pair with exact_iterate_block = -e^{i phi} [[u, v], [-v*, u*]].
inline std::complex<double> block_u(double theta, double phi) {
    const std::complex<double> e = std::polar(1.0, phi);
    const double s = std::sin(theta);
    return 1.0 + (e - 1.0) * s * s;
}

inline std::complex<double> block_v(double theta, double phi) {
    const std::complex<double> einv = std::polar(1.0, -phi);
    return (1.0 - einv) * std::sin(theta) * std::cos(theta);
}

// SO(3) image of an SU(2) element [[u,v],[-v*,u*]] under conjugation on the
// Pauli components. Quadratic in (u,v), so any unit scalar prefactor of the
// 2x2 matrix drops out.
inline Mat3 rotation_from_block(std::complex<double> u, std::complex<double> v) {
    using namespace std::complex_literals;
    const double unit = std::abs(u) * std::abs(u) + std::abs(v) * std::abs(v);
    if (std::abs(unit - 1.0) > 1e-9) throw std::invalid_argument("block (u,v) must satisfy |u|^2+|v|^2=1");
    const std::complex<double> ub = std::conj(u), vb = std::conj(v);
    const std::complex<double> entries[9] = {
        0.5 * (u * u + ub * ub - v * v - vb * vb), 0.5i * (ub * ub - u * u + vb * vb - v * v),
        -(u * v + ub * vb),
        0.5i * (u * u - ub * ub + vb * vb - v * v), 0.5 * (u * u + ub * ub + v * v + vb * vb),
        1.0i * (ub * vb - u * v),
        (ub * v + u * vb), 1.0i * (ub * v - u * vb), (u * ub - v * vb)};
    Mat3 out;
    for (int i = 0; i < 9; ++i) {
        if (std::abs(entries[i].imag()) > 1e-9)
            throw std::invalid_argument("rotation entries must come out real");
        out[i] = entries[i].real();
    }
    return out;
}

// The same rotation written directly in theta and phi.
inline Mat3 rotation_closed_form(double theta, double phi) {
    const double c2 = std::cos(2.0 * theta), s2 = std::sin(2.0 * theta);
    const double c4 = std::cos(4.0 * theta), s4 = std::sin(4.0 * theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double ch2 = std::cos(phi / 2.0) * std::cos(phi / 2.0);
    const double sh2 = std::sin(phi / 2.0) * std::sin(phi / 2.0);
    return {cp * (c2 * c2 * cp + s2 * s2) + c2 * sp * sp,
            -c2 * cp * sp + (ch2 - c4 * sh2) * sp,
            -s4 * sh2,
            cp * sp * (c2 - 1.0),
            cp * cp + c2 * sp * sp,
            s2 * sp,
            -cp * s4 * sh2 + s2 * sp * sp,
            -cp * s2 * sp - s4 * sh2 * sp,
            c2 * c2 + cp * s2 * s2};
}

// R_y(t) = cos(t/2) I - i sin(t/2) Y, R_z(p) = cos(p/2) I - i sin(p/2) Z.
inline Mat2 rot_y(double t) {
    const double c = std::cos(t / 2.0), s = std::sin(t / 2.0);
    return {c, -s, s, c};
}

inline Mat2 rot_z(double p) {
    return {std::polar(1.0, -p / 2.0), 0.0, 0.0, std::polar(1.0, p / 2.0)};
}

// R_z(phi') R_y(theta') R_z(-alpha) R_y(-theta') R_z(-phi') for a unit axis
// with spherical angles theta' = arccos(n_z), phi' = atan2(n_y, n_x).
inline Mat2 euler_axis_rotation(const Vec3& axis, double alpha) {
    const double nz = std::clamp(axis[2], -1.0, 1.0);
    const double tp = std::acos(nz);
    const double pp = std::atan2(axis[1], axis[0]);
    Mat2 m = rot_z(pp);
    m = mul2(m, rot_y(tp));
    m = mul2(m, rot_z(-alpha));
    m = mul2(m, rot_y(-tp));
    m = mul2(m, rot_z(-pp));
    return m;
}

// Bloch vector of alpha |A'> + beta |B'> via the closed form
// [2(ac+bd), 2(ad-bc), a^2+b^2-c^2-d^2].
inline Vec3 bloch_from_coeffs(std::complex<double> alpha, std::complex<double> beta) {
    const double a = alpha.real(), b = alpha.imag();
    const double c = beta.real(), d = beta.imag();
    return {2.0 * (a * c + b * d), 2.0 * (a * d - b * c), a * a + b * b - c * c - d * d};
}

}  // namespace dqs
