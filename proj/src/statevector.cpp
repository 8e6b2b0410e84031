#include "hspsim/statevector.hpp"

#include <algorithm>
#include <cmath>

namespace hspsim {

RegisterLayout::RegisterLayout(std::vector<std::int64_t> register_dims, std::int64_t cap)
    : dims(std::move(register_dims)) {
    if (dims.empty()) throw DimensionMismatch("RegisterLayout: need at least one register");
    total = 1;
    for (std::int64_t d : dims) {
        if (d < 2) throw DimensionMismatch("RegisterLayout: register dimension must be >= 2");
        if (total > cap / d)
            throw ScaleExceeded("RegisterLayout: joint dimension exceeds the amplitude cap");
        total *= d;
    }
    strides.assign(dims.size(), 1);
    for (std::size_t r = dims.size() - 1; r-- > 0;) strides[r] = strides[r + 1] * dims[r + 1];
}

QuantumState QuantumState::basis(RegisterLayout l, std::int64_t index) {
    QuantumState s(std::move(l));
    if (index < 0 || index >= s.dim()) throw RangeError("QuantumState::basis: index out of range");
    s.amps[std::size_t(index)] = 1.0;
    return s;
}

double QuantumState::norm_sq() const {
    double acc = 0.0;
    for (const cplx& a : amps) acc += std::norm(a);
    return acc;
}

QuantumState uniform_state(const RegisterLayout& layout, int reg) {
    if (reg < 0 || reg >= layout.register_count())
        throw RangeError("uniform_state: no such register");
    QuantumState s(layout);
    const std::int64_t d = layout.dims[reg], stride = layout.strides[reg];
    const double amp = 1.0 / std::sqrt(double(d));
    for (std::int64_t x = 0; x < d; ++x) s.amps[std::size_t(x * stride)] = amp;
    return s;
}

void apply_matrix_digits(std::vector<cplx>& amps, const Matrix& u,
                         std::span<const Digit> targets, std::span<const Digit> complement) {
    std::int64_t m = 1;
    for (const Digit& t : targets) m *= t.dim;
    if (u.rows != m || u.cols != m)
        throw DimensionMismatch("apply_matrix_digits: matrix does not fit the target digits");

    // Offsets of the m target sub-indices (row major over `targets`).
    std::vector<std::int64_t> offs(static_cast<std::size_t>(m));
    {
        std::vector<std::int64_t> c(targets.size(), 0);
        std::int64_t off = 0;
        for (std::int64_t i = 0;; ++i) {
            offs[std::size_t(i)] = off;
            if (i + 1 == m) break;
            for (std::size_t j = targets.size(); j-- > 0;) {
                off += targets[j].stride;
                if (++c[j] < targets[j].dim) break;
                off -= targets[j].dim * targets[j].stride;
                c[j] = 0;
            }
        }
    }

    // Walk the complement digits fastest-stride first for locality.
    std::vector<Digit> comp(complement.begin(), complement.end());
    std::sort(comp.begin(), comp.end(),
              [](const Digit& a, const Digit& b) { return a.stride < b.stride; });
    std::int64_t bases = 1;
    for (const Digit& d : comp) bases *= d.dim;

    std::vector<cplx> x(static_cast<std::size_t>(m)), y(static_cast<std::size_t>(m));
    std::vector<std::int64_t> c(comp.size(), 0);
    std::int64_t base = 0;
    for (std::int64_t b = 0; b < bases; ++b) {
        for (std::int64_t i = 0; i < m; ++i) x[std::size_t(i)] = amps[std::size_t(base + offs[std::size_t(i)])];
        for (std::int64_t r = 0; r < m; ++r) {
            cplx acc(0.0, 0.0);
            const cplx* row = &u.a[std::size_t(r) * m];
            for (std::int64_t k = 0; k < m; ++k) acc += row[k] * x[std::size_t(k)];
            y[std::size_t(r)] = acc;
        }
        for (std::int64_t i = 0; i < m; ++i) amps[std::size_t(base + offs[std::size_t(i)])] = y[std::size_t(i)];
        // Odometer increment.
        for (std::size_t j = 0; j < comp.size(); ++j) {
            base += comp[j].stride;
            if (++c[j] < comp[j].dim) break;
            base -= comp[j].dim * comp[j].stride;
            c[j] = 0;
        }
    }
}

void apply_unitary(QuantumState& state, const Matrix& u, std::span<const int> targets) {
    if (targets.empty()) throw DimensionMismatch("apply_unitary: no target registers");
    std::vector<char> used(state.layout.register_count(), 0);
    std::int64_t m = 1;
    std::vector<Digit> target_digits;
    for (int t : targets) {
        if (t < 0 || t >= state.layout.register_count())
            throw RangeError("apply_unitary: no such register");
        if (used[t]) throw DimensionMismatch("apply_unitary: repeated target register");
        used[t] = 1;
        m *= state.layout.dims[t];
        target_digits.push_back({state.layout.dims[t], state.layout.strides[t]});
    }
    if (u.rows != m || u.cols != m)
        throw DimensionMismatch("apply_unitary: matrix size does not match target registers");
    if (unitarity_defect(u) > 1e-10) throw NotUnitary("apply_unitary: operator is not unitary");
    std::vector<Digit> complement;
    for (int r = 0; r < state.layout.register_count(); ++r)
        if (!used[r]) complement.push_back({state.layout.dims[r], state.layout.strides[r]});
    apply_matrix_digits(state.amps, u, target_digits, complement);
}

void apply_oracle(QuantumState& state, const std::function<std::int64_t(std::int64_t)>& f,
                  int in_reg, int out_reg) {
    const auto& lay = state.layout;
    if (in_reg < 0 || in_reg >= lay.register_count() || out_reg < 0 ||
        out_reg >= lay.register_count() || in_reg == out_reg)
        throw RangeError("apply_oracle: bad register pair");
    const std::int64_t d_in = lay.dims[in_reg], d_out = lay.dims[out_reg];
    std::vector<std::int64_t> fx(static_cast<std::size_t>(d_in));
    for (std::int64_t x = 0; x < d_in; ++x) {
        fx[std::size_t(x)] = f(x);
        if (fx[std::size_t(x)] < 0 || fx[std::size_t(x)] >= d_out)
            throw RangeError("apply_oracle: oracle value outside the output register");
    }
    const std::int64_t s_out = lay.strides[out_reg];
    std::vector<cplx> out(state.amps.size());
    for (std::int64_t i = 0; i < lay.total; ++i) {
        const cplx& a = state.amps[std::size_t(i)];
        if (a == cplx(0.0, 0.0)) continue;
        std::int64_t x = lay.digit(i, in_reg);
        std::int64_t y = lay.digit(i, out_reg);
        std::int64_t y2 = (y + fx[std::size_t(x)]) % d_out;
        out[std::size_t(i + (y2 - y) * s_out)] = a;
    }
    state.amps.swap(out);
}

void apply_register_permutation(QuantumState& state, int reg,
                                const std::function<std::int64_t(std::int64_t)>& perm) {
    const auto& lay = state.layout;
    if (reg < 0 || reg >= lay.register_count())
        throw RangeError("apply_register_permutation: no such register");
    const std::int64_t d = lay.dims[reg], stride = lay.strides[reg];
    std::vector<std::int64_t> p(static_cast<std::size_t>(d));
    std::vector<char> hit(std::size_t(d), 0);
    for (std::int64_t x = 0; x < d; ++x) {
        p[std::size_t(x)] = perm(x);
        if (p[std::size_t(x)] < 0 || p[std::size_t(x)] >= d || hit[std::size_t(p[std::size_t(x)])])
            throw RangeError("apply_register_permutation: map is not a bijection");
        hit[std::size_t(p[std::size_t(x)])] = 1;
    }
    std::vector<cplx> out(state.amps.size());
    for (std::int64_t i = 0; i < lay.total; ++i) {
        const cplx& a = state.amps[std::size_t(i)];
        if (a == cplx(0.0, 0.0)) continue;
        std::int64_t x = lay.digit(i, reg);
        out[std::size_t(i + (p[std::size_t(x)] - x) * stride)] = a;
    }
    state.amps.swap(out);
}

std::vector<double> measurement_distribution(const QuantumState& state, int reg) {
    const auto& lay = state.layout;
    if (reg < 0 || reg >= lay.register_count())
        throw RangeError("measurement_distribution: no such register");
    const std::int64_t d = lay.dims[reg], stride = lay.strides[reg];
    const std::int64_t block = d * stride;
    std::vector<double> probs(std::size_t(d), 0.0);
    for (std::int64_t base = 0; base < lay.total; base += block)
        for (std::int64_t x = 0; x < d; ++x) {
            double acc = 0.0;
            const cplx* seg = &state.amps[std::size_t(base + x * stride)];
            for (std::int64_t off = 0; off < stride; ++off) acc += std::norm(seg[off]);
            probs[std::size_t(x)] += acc;
        }
    return probs;
}

double project_register(QuantumState& state, int reg, std::int64_t outcome) {
    const auto& lay = state.layout;
    if (reg < 0 || reg >= lay.register_count())
        throw RangeError("project_register: no such register");
    const std::int64_t d = lay.dims[reg], stride = lay.strides[reg];
    if (outcome < 0 || outcome >= d) throw RangeError("project_register: outcome out of range");
    const std::int64_t block = d * stride;
    double p = 0.0;
    for (std::int64_t base = 0; base < lay.total; base += block) {
        const cplx* seg = &state.amps[std::size_t(base + outcome * stride)];
        for (std::int64_t off = 0; off < stride; ++off) p += std::norm(seg[off]);
    }
    if (p <= 0.0) throw RangeError("project_register: outcome has zero probability");
    const double scale = 1.0 / std::sqrt(p);
    for (std::int64_t base = 0; base < lay.total; base += block)
        for (std::int64_t x = 0; x < d; ++x) {
            cplx* seg = &state.amps[std::size_t(base + x * stride)];
            if (x == outcome)
                for (std::int64_t off = 0; off < stride; ++off) seg[off] *= scale;
            else
                for (std::int64_t off = 0; off < stride; ++off) seg[off] = 0.0;
        }
    return p;
}

std::int64_t measure_register(QuantumState& state, int reg, Rng& rng) {
    std::vector<double> probs = measurement_distribution(state, reg);
    std::int64_t outcome = std::int64_t(sample_discrete(rng, probs));
    project_register(state, reg, outcome);
    return outcome;
}

QuantumState prepare_coset_state(std::int64_t dim, std::span<const std::int64_t> elements) {
    if (elements.empty()) throw RangeError("prepare_coset_state: empty element list");
    QuantumState s{RegisterLayout({dim})};
    const double amp = 1.0 / std::sqrt(double(elements.size()));
    for (std::int64_t e : elements) {
        if (e < 0 || e >= dim) throw RangeError("prepare_coset_state: element out of range");
        if (s.amps[std::size_t(e)] != cplx(0.0, 0.0))
            throw RangeError("prepare_coset_state: repeated element");
        s.amps[std::size_t(e)] = amp;
    }
    return s;
}

QuantumState prepare_coset_state(const AbelianGroup& g, const Subgroup& k, std::int64_t rep) {
    Coset c = coset_of(g, k, rep);
    return prepare_coset_state(g.size(), c.elements);
}

QuantumState prepare_coset_state(const FiniteGroup& g, const Subgroup& k, std::int64_t rep) {
    Coset c = left_coset(g, k, rep);
    return prepare_coset_state(g.size(), c.elements);
}

}  // namespace hspsim
