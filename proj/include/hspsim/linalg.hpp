// Dense complex matrices, sized for gate-level and group-level operators
// (dimensions up to a few thousand). Row-major storage.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hspsim/errors.hpp"

namespace hspsim {

using cplx = std::complex<double>;

struct Matrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<cplx> a;  // row-major, a[r * cols + c]

    Matrix() = default;
    Matrix(std::int64_t r, std::int64_t c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c)) {}

    cplx& at(std::int64_t r, std::int64_t c) { return a[std::size_t(r) * cols + c]; }
    const cplx& at(std::int64_t r, std::int64_t c) const { return a[std::size_t(r) * cols + c]; }

    static Matrix identity(std::int64_t n) {
        Matrix m(n, n);
        for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

Matrix multiply(const Matrix& x, const Matrix& y);
Matrix adjoint(const Matrix& m);
Matrix tensor(const Matrix& x, const Matrix& y);
double max_abs_diff(const Matrix& x, const Matrix& y);

// Max |(U^dagger U - I)_{ij}|.
double unitarity_defect(const Matrix& u);
bool is_unitary(const Matrix& u, double tol = 1e-10);

}  // namespace hspsim
