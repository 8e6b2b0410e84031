#include "hspsim/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace hspsim {

Matrix multiply(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw DimensionMismatch("multiply: inner dimensions differ");
    Matrix out(x.rows, y.cols);
    for (std::int64_t i = 0; i < x.rows; ++i)
        for (std::int64_t k = 0; k < x.cols; ++k) {
            cplx v = x.at(i, k);
            if (v == cplx(0.0, 0.0)) continue;
            for (std::int64_t j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

Matrix adjoint(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (std::int64_t i = 0; i < m.rows; ++i)
        for (std::int64_t j = 0; j < m.cols; ++j) out.at(j, i) = std::conj(m.at(i, j));
    return out;
}

Matrix tensor(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows * y.rows, x.cols * y.cols);
    for (std::int64_t i = 0; i < x.rows; ++i)
        for (std::int64_t j = 0; j < x.cols; ++j) {
            cplx v = x.at(i, j);
            if (v == cplx(0.0, 0.0)) continue;
            for (std::int64_t k = 0; k < y.rows; ++k)
                for (std::int64_t l = 0; l < y.cols; ++l)
                    out.at(i * y.rows + k, j * y.cols + l) = v * y.at(k, l);
        }
    return out;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw DimensionMismatch("max_abs_diff: shapes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    return worst;
}

double unitarity_defect(const Matrix& u) {
    if (u.rows != u.cols) return 1.0;
    const std::int64_t n = u.rows;
    double worst = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            cplx dot(0.0, 0.0);  // (U^dagger U)_{ij} = sum_k conj(U_{ki}) U_{kj}
            for (std::int64_t k = 0; k < n; ++k) dot += std::conj(u.at(k, i)) * u.at(k, j);
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    return worst;
}

bool is_unitary(const Matrix& u, double tol) {
    return u.rows == u.cols && unitarity_defect(u) <= tol;
}

}  // namespace hspsim
