#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace dqs {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Sizes here stay at desk scale (<= 2^14),
// so everything is plain loops over std::vector storage.
struct CMatrix {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<Complex> data;

    CMatrix() = default;
    CMatrix(std::uint64_t r, std::uint64_t c) : rows(r), cols(c), data(r * c) {}

    Complex& operator()(std::uint64_t i, std::uint64_t j) { return data[i * cols + j]; }
    const Complex& operator()(std::uint64_t i, std::uint64_t j) const { return data[i * cols + j]; }

    static CMatrix identity(std::uint64_t n) {
        CMatrix m(n, n);
        for (std::uint64_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    CMatrix dagger() const {
        CMatrix out(cols, rows);
        for (std::uint64_t i = 0; i < rows; ++i)
            for (std::uint64_t j = 0; j < cols; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }
};

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows, b.cols);
    for (std::uint64_t i = 0; i < a.rows; ++i) {
        for (std::uint64_t k = 0; k < a.cols; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::uint64_t j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
    return worst;
}

// max |U†U - I|, the working definition of "is unitary" throughout.
inline double unitarity_defect(const CMatrix& u) {
    return max_abs_diff(u.dagger() * u, CMatrix::identity(u.cols));
}

// m += coef * v v†
inline void add_outer(CMatrix& m, const std::vector<Complex>& v, Complex coef) {
    for (std::uint64_t i = 0; i < m.rows; ++i) {
        const Complex vi = coef * v[i];
        if (vi == Complex{}) continue;
        for (std::uint64_t j = 0; j < m.cols; ++j) m(i, j) += vi * std::conj(v[j]);
    }
}

}  // namespace dqs
