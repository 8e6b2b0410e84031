// Shared helpers for the test suites: explicit unitary irreducible
// representations of the built-in groups, assembled independently of the
// character tables, plus the matrix-coefficient Fourier basis they induce.
// Everything here self-validates (homomorphism, unitarity, irreducibility,
// completeness), so it can serve as ground truth for the samplers.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "hspsim/errors.hpp"
#include "hspsim/groups.hpp"
#include "hspsim/linalg.hpp"

namespace testsupport {

using hspsim::CharacterTable;
using hspsim::cplx;
using hspsim::FiniteGroup;
using hspsim::Matrix;
using hspsim::Subgroup;

struct Irrep {
    int dim = 0;
    std::vector<Matrix> mats;  // one per group element
};

inline Matrix rotation2(double theta) {
    Matrix m(2, 2);
    m.at(0, 0) = std::cos(theta);
    m.at(0, 1) = -std::sin(theta);
    m.at(1, 0) = std::sin(theta);
    m.at(1, 1) = std::cos(theta);
    return m;
}

inline Matrix reflection2() {
    Matrix m = Matrix::identity(2);
    m.at(1, 1) = -1.0;
    return m;
}

inline int element_order(const FiniteGroup& g, int a) {
    int order = 1, acc = a;
    while (acc != g.identity()) {
        acc = g.multiply(acc, a);
        ++order;
    }
    return order;
}

// Writes every element of a dihedral group as r^j s^k for a discovered
// rotation r of order n and reflection s.
struct DihedralShape {
    int n = 0;
    std::vector<int> power;       // j per element
    std::vector<int> reflected;   // k per element (0 or 1)
};

inline DihedralShape dihedral_shape(const FiniteGroup& g) {
    const int n = g.size() / 2;
    int r = -1;
    for (int a = 1; a < g.size() && r < 0; ++a)
        if (element_order(g, a) == n) r = a;
    if (r < 0) throw hspsim::Error("dihedral_shape: no rotation of full order");
    std::vector<int> rot_index(std::size_t(g.size()), -1);
    int acc = g.identity();
    for (int j = 0; j < n; ++j) {
        rot_index[std::size_t(acc)] = j;
        acc = g.multiply(acc, r);
    }
    int s = -1;
    for (int a = 0; a < g.size() && s < 0; ++a)
        if (rot_index[std::size_t(a)] < 0) s = a;
    DihedralShape shape;
    shape.n = n;
    shape.power.assign(std::size_t(g.size()), -1);
    shape.reflected.assign(std::size_t(g.size()), 0);
    for (int a = 0; a < g.size(); ++a) {
        if (rot_index[std::size_t(a)] >= 0) {
            shape.power[std::size_t(a)] = rot_index[std::size_t(a)];
        } else {
            // a = r^j s  =>  a s^{-1} = r^j
            const int j = rot_index[std::size_t(g.multiply(a, g.inverse(s)))];
            if (j < 0) throw hspsim::Error("dihedral_shape: decomposition failed");
            shape.power[std::size_t(a)] = j;
            shape.reflected[std::size_t(a)] = 1;
        }
    }
    return shape;
}

inline std::vector<Irrep> dihedral_irreps(const FiniteGroup& g) {
    const DihedralShape shape = dihedral_shape(g);
    const int n = shape.n;
    std::vector<Irrep> out;
    const auto one_dim = [&](auto value) {
        Irrep rho;
        rho.dim = 1;
        for (int a = 0; a < g.size(); ++a) {
            Matrix m(1, 1);
            m.at(0, 0) = value(shape.power[std::size_t(a)], shape.reflected[std::size_t(a)]);
            rho.mats.push_back(std::move(m));
        }
        out.push_back(std::move(rho));
    };
    one_dim([](int, int) { return 1.0; });
    one_dim([](int, int k) { return k ? -1.0 : 1.0; });
    if (n % 2 == 0) {
        one_dim([](int j, int) { return j % 2 ? -1.0 : 1.0; });
        one_dim([](int j, int k) { return ((j + k) % 2) ? -1.0 : 1.0; });
    }
    for (int h = 1; 2 * h < n; ++h) {
        Irrep rho;
        rho.dim = 2;
        for (int a = 0; a < g.size(); ++a) {
            Matrix m = rotation2(2.0 * std::numbers::pi * h * shape.power[std::size_t(a)] / n);
            if (shape.reflected[std::size_t(a)]) m = multiply(m, reflection2());
            rho.mats.push_back(std::move(m));
        }
        out.push_back(std::move(rho));
    }
    return out;
}

inline int permutation_parity(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

// Orthonormal basis of the sum-zero subspace of R^n (columns of an n x (n-1)
// matrix), by Gram-Schmidt on e_i - e_{i+1}.
inline std::vector<std::vector<double>> sum_zero_basis(int n) {
    std::vector<std::vector<double>> basis;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<double> v(std::size_t(n), 0.0);
        v[std::size_t(i)] = 1.0;
        v[std::size_t(i + 1)] = -1.0;
        for (const auto& b : basis) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r) dot += b[std::size_t(r)] * v[std::size_t(r)];
            for (int r = 0; r < n; ++r) v[std::size_t(r)] -= dot * b[std::size_t(r)];
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Standard (n-1)-dimensional irrep of S_n: permutation action restricted to
// the sum-zero subspace, optionally twisted by the sign character.
inline Irrep symmetric_standard(const FiniteGroup& g, bool twist_by_sign) {
    const int n = g.symmetric_n;
    const auto basis = sum_zero_basis(n);
    Irrep rho;
    rho.dim = n - 1;
    for (int a = 0; a < g.size(); ++a) {
        const auto& p = g.perms[std::size_t(a)];
        Matrix m(n - 1, n - 1);
        for (int col = 0; col < n - 1; ++col) {
            // Permute basis column `col`: (P v)[p[i]] = v[i].
            std::vector<double> pv(std::size_t(n), 0.0);
            for (int i = 0; i < n; ++i)
                pv[std::size_t(p[std::size_t(i)])] = basis[std::size_t(col)][std::size_t(i)];
            for (int row = 0; row < n - 1; ++row) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += basis[std::size_t(row)][std::size_t(i)] * pv[std::size_t(i)];
                m.at(row, col) = dot;
            }
        }
        if (twist_by_sign && permutation_parity(p) < 0)
            for (auto& entry : m.a) entry = -entry;
        rho.mats.push_back(std::move(m));
    }
    return rho;
}

inline std::vector<Irrep> symmetric_irreps(const FiniteGroup& g) {
    std::vector<Irrep> out;
    const auto one_dim = [&](auto value) {
        Irrep rho;
        rho.dim = 1;
        for (int a = 0; a < g.size(); ++a) {
            Matrix m(1, 1);
            m.at(0, 0) = value(a);
            rho.mats.push_back(std::move(m));
        }
        out.push_back(std::move(rho));
    };
    one_dim([](int) { return 1.0; });
    one_dim([&](int a) { return double(permutation_parity(g.perms[std::size_t(a)])); });
    out.push_back(symmetric_standard(g, false));
    if (g.symmetric_n == 4) {
        out.push_back(symmetric_standard(g, true));
        // The remaining 2-dimensional irrep factors through the quotient by
        // the normal subgroup of order 4.
        Subgroup v;
        for (const Subgroup& k : all_subgroups(g))
            if (k.size() == 4 && is_normal(g, k)) v = k;
        if (v.size() != 4) throw hspsim::Error("symmetric_irreps: missing normal four-group");
        const auto cosets = left_coset_partition(g, v);
        std::vector<int> coset_of(std::size_t(g.size()), -1);
        for (std::size_t c = 0; c < cosets.size(); ++c)
            for (std::int64_t e : cosets[c].elements) coset_of[std::size_t(e)] = int(c);
        // Quotient multiplication on coset indices via representatives.
        const auto qmul = [&](int a, int b) {
            return coset_of[std::size_t(g.multiply(int(cosets[std::size_t(a)].representative),
                                                   int(cosets[std::size_t(b)].representative)))];
        };
        const int q = int(cosets.size());  // 6
        // Find an order-3 coset r and an order-2 coset s in the quotient.
        const auto qorder = [&](int a) {
            int order = 1, acc = a;
            while (acc != coset_of[std::size_t(g.identity())]) { acc = qmul(acc, a); ++order; }
            return order;
        };
        int qr = -1, qs = -1;
        for (int a = 0; a < q; ++a) {
            const int o = qorder(a);
            if (o == 3 && qr < 0) qr = a;
        }
        std::vector<int> rot(std::size_t(q), -1);
        int acc = coset_of[std::size_t(g.identity())];
        for (int j = 0; j < 3; ++j) { rot[std::size_t(acc)] = j; acc = qmul(acc, qr); }
        for (int a = 0; a < q && qs < 0; ++a)
            if (rot[std::size_t(a)] < 0) qs = a;
        Irrep rho;
        rho.dim = 2;
        for (int a = 0; a < g.size(); ++a) {
            const int c = coset_of[std::size_t(a)];
            int j, k;
            if (rot[std::size_t(c)] >= 0) {
                j = rot[std::size_t(c)];
                k = 0;
            } else {
                // qs has order 2, so qs^{-1} = qs.
                j = rot[std::size_t(qmul(c, qs))];
                k = 1;
            }
            Matrix m = rotation2(2.0 * std::numbers::pi * j / 3.0);
            if (k) m = multiply(m, reflection2());
            rho.mats.push_back(std::move(m));
        }
        out.push_back(std::move(rho));
    }
    return out;
}

// One-dimensional irreps of an abelian product, straight from its characters.
inline std::vector<Irrep> abelian_irreps(const FiniteGroup& g) {
    const hspsim::AbelianGroup ab(g.abelian_orders);
    std::vector<Irrep> out;
    for (std::int64_t l = 0; l < ab.size(); ++l) {
        Irrep rho;
        rho.dim = 1;
        for (std::int64_t x = 0; x < ab.size(); ++x) {
            Matrix m(1, 1);
            m.at(0, 0) = ab.character(l, x);
            rho.mats.push_back(std::move(m));
        }
        out.push_back(std::move(rho));
    }
    return out;
}

inline std::vector<Irrep> explicit_irreps(const FiniteGroup& g) {
    switch (g.family) {
        case FiniteGroup::Family::AbelianProduct: return abelian_irreps(g);
        case FiniteGroup::Family::Dihedral: return dihedral_irreps(g);
        case FiniteGroup::Family::Symmetric: return symmetric_irreps(g);
    }
    throw hspsim::Error("explicit_irreps: unknown family");
}

inline double irrep_defect(const FiniteGroup& g, const Irrep& rho) {
    // Homomorphism and unitarity, as a single max deviation.
    double worst = 0.0;
    for (int a = 0; a < g.size(); ++a) {
        worst = std::max(worst, hspsim::unitarity_defect(rho.mats[std::size_t(a)]));
        for (int b = 0; b < g.size(); ++b) {
            const Matrix prod = multiply(rho.mats[std::size_t(a)], rho.mats[std::size_t(b)]);
            worst = std::max(worst,
                             hspsim::max_abs_diff(prod, rho.mats[std::size_t(g.multiply(a, b))]));
        }
    }
    return worst;
}

inline cplx irrep_character(const Irrep& rho, int element) {
    cplx tr = 0.0;
    for (int i = 0; i < rho.dim; ++i) tr += rho.mats[std::size_t(element)].at(i, i);
    return tr;
}

// Schur irreducibility test: sum_g |chi(g)|^2 == |G|.
inline double character_norm_sq(const FiniteGroup& g, const Irrep& rho) {
    double acc = 0.0;
    for (int a = 0; a < g.size(); ++a) acc += std::norm(irrep_character(rho, a));
    return acc / double(g.size());
}

// The matrix-coefficient basis: row (i, r, c) holds
// sqrt(d_i/|G|) * conj(rho_i(g)[r][c]) across columns g, so the matrix maps a
// state on C[G] to its Fourier coefficients. Unitary iff the irrep list is
// complete and the sqrt(d_i/|G|) weights are right.
inline Matrix fourier_basis_matrix(const FiniteGroup& g, const std::vector<Irrep>& irreps) {
    const int n = g.size();
    Matrix b(n, n);
    int row = 0;
    for (const Irrep& rho : irreps) {
        const double w = std::sqrt(double(rho.dim) / double(n));
        for (int r = 0; r < rho.dim; ++r)
            for (int c = 0; c < rho.dim; ++c) {
                for (int x = 0; x < n; ++x)
                    b.at(row, x) = w * std::conj(rho.mats[std::size_t(x)].at(r, c));
                ++row;
            }
    }
    if (row != n) throw hspsim::Error("fourier_basis_matrix: irrep list incomplete");
    return b;
}

// Probability of each irrep label for a state psi on C[G]: the squared norm
// of psi's component in irrep i's block of matrix coefficients.
inline std::vector<double> projection_probabilities(const FiniteGroup& g,
                                                    const std::vector<Irrep>& irreps,
                                                    const std::vector<cplx>& psi) {
    std::vector<double> out;
    for (const Irrep& rho : irreps) {
        const double w = std::sqrt(double(rho.dim) / double(g.size()));
        double p = 0.0;
        for (int r = 0; r < rho.dim; ++r) {
            for (int c = 0; c < rho.dim; ++c) {
                cplx coeff = 0.0;
                for (int x = 0; x < g.size(); ++x)
                    coeff += w * rho.mats[std::size_t(x)].at(r, c) * psi[std::size_t(x)];
                p += std::norm(coeff);
            }
        }
        out.push_back(p);
    }
    return out;
}

// Match explicit irreps to character-table rows by their characters.
// Throws unless the matching is a bijection.
inline std::vector<int> match_to_table(const FiniteGroup& g, const CharacterTable& t,
                                       const std::vector<Irrep>& irreps) {
    std::vector<int> match;
    std::set<int> used;
    for (const Irrep& rho : irreps) {
        int found = -1;
        for (int i = 0; i < t.irrep_count(); ++i) {
            double worst = 0.0;
            for (int x = 0; x < g.size(); ++x)
                worst = std::max(worst, std::abs(t.value(i, x) - irrep_character(rho, x)));
            if (worst < 1e-9) { found = i; break; }
        }
        if (found < 0 || !used.insert(found).second)
            throw hspsim::Error("match_to_table: characters do not match the table");
        match.push_back(found);
    }
    return match;
}

// Upper-tail chi-square p-value (Wilson-Hilferty approximation).
inline double chi_square_pvalue(double stat, double dof) {
    const double z = (std::cbrt(stat / dof) - (1.0 - 2.0 / (9.0 * dof))) /
                     std::sqrt(2.0 / (9.0 * dof));
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

}  // namespace testsupport
