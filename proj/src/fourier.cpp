#include "hspsim/fourier.hpp"

#include <cmath>
#include <numbers>

namespace hspsim {

namespace {

Matrix hadamard_matrix() {
    Matrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h.at(0, 0) = s;
    h.at(0, 1) = s;
    h.at(1, 0) = s;
    h.at(1, 1) = -s;
    return h;
}

// diag(1,1,1,exp(2*pi*i/2^m)) on a qubit pair.
Matrix controlled_phase(int m) {
    Matrix u = Matrix::identity(4);
    u.at(3, 3) = std::polar(1.0, 2.0 * std::numbers::pi / double(std::int64_t(1) << m));
    return u;
}

Matrix swap_matrix() {
    Matrix u(4, 4);
    u.at(0, 0) = 1.0;
    u.at(1, 2) = 1.0;
    u.at(2, 1) = 1.0;
    u.at(3, 3) = 1.0;
    return u;
}

// Digits of qubit `q` inside a 2^n-dimensional block starting at stride
// `base_stride`, with qubit 0 most significant.
Digit qubit_digit(std::int64_t base_stride, int n, int q) {
    return {2, base_stride << (n - 1 - q)};
}

}  // namespace

Matrix dft_matrix(std::int64_t n) {
    if (n < 1) throw RangeError("dft_matrix: size must be >= 1");
    Matrix f(n, n);
    const double s = 1.0 / std::sqrt(double(n));
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            f.at(a, b) = std::polar(s, 2.0 * std::numbers::pi * double((a * b) % n) / double(n));
    return f;
}

GateSequence qft_circuit(int n) {
    if (n < 1 || n > 22) throw RangeError("qft_circuit: need 1 <= n <= 22");
    GateSequence seq;
    seq.qubits = n;
    for (int j = 0; j < n; ++j) {
        seq.gates.push_back({hadamard_matrix(), {j}});
        for (int k = j + 1; k < n; ++k)
            seq.gates.push_back({controlled_phase(k - j + 1), {k, j}});
    }
    for (int j = 0; j < n / 2; ++j) seq.gates.push_back({swap_matrix(), {j, n - 1 - j}});
    return seq;
}

GateSequence hadamard_all(int n) {
    if (n < 1 || n > 22) throw RangeError("hadamard_all: need 1 <= n <= 22");
    GateSequence seq;
    seq.qubits = n;
    for (int j = 0; j < n; ++j) seq.gates.push_back({hadamard_matrix(), {j}});
    return seq;
}

void apply_gate_sequence(QuantumState& state, const GateSequence& seq, int reg) {
    const auto& lay = state.layout;
    if (reg < 0 || reg >= lay.register_count())
        throw RangeError("apply_gate_sequence: no such register");
    const int n = seq.qubits;
    if (lay.dims[reg] != (std::int64_t(1) << n))
        throw DimensionMismatch("apply_gate_sequence: register dimension is not 2^qubits");
    const std::int64_t reg_stride = lay.strides[reg];
    for (const auto& gate : seq.gates) {
        std::vector<Digit> targets;
        std::vector<char> is_target(n, 0);
        for (int q : gate.qubits) {
            if (q < 0 || q >= n) throw RangeError("apply_gate_sequence: qubit out of range");
            targets.push_back(qubit_digit(reg_stride, n, q));
            is_target[q] = 1;
        }
        std::vector<Digit> complement;
        for (int r = 0; r < lay.register_count(); ++r)
            if (r != reg) complement.push_back({lay.dims[r], lay.strides[r]});
        for (int q = 0; q < n; ++q)
            if (!is_target[q]) complement.push_back(qubit_digit(reg_stride, n, q));
        apply_matrix_digits(state.amps, gate.u, targets, complement);
    }
}

Matrix gate_sequence_unitary(const GateSequence& seq) {
    const int n = seq.qubits;
    const std::int64_t dim = std::int64_t(1) << n;
    Matrix out(dim, dim);
    QuantumState column{RegisterLayout({dim})};
    for (std::int64_t e = 0; e < dim; ++e) {
        std::fill(column.amps.begin(), column.amps.end(), cplx(0.0, 0.0));
        column.amps[std::size_t(e)] = 1.0;
        apply_gate_sequence(column, seq, 0);
        for (std::int64_t r = 0; r < dim; ++r) out.at(r, e) = column.amps[std::size_t(r)];
    }
    return out;
}

void apply_group_ft(QuantumState& state, const AbelianGroup& g, int reg) {
    const auto& lay = state.layout;
    if (reg < 0 || reg >= lay.register_count())
        throw RangeError("apply_group_ft: no such register");
    if (lay.dims[reg] != g.size())
        throw DimensionMismatch("apply_group_ft: register dimension is not |G|");
    const std::size_t factors = g.orders.size();
    // Mixed-radix place value of each factor inside the register.
    std::vector<std::int64_t> place(factors, 1);
    for (std::size_t j = factors - 1; j-- > 0;) place[j] = place[j + 1] * g.orders[j + 1];
    for (std::size_t j = 0; j < factors; ++j) {
        if (g.orders[j] == 1) continue;
        Matrix f = dft_matrix(g.orders[j]);
        Digit target{g.orders[j], lay.strides[reg] * place[j]};
        std::vector<Digit> complement;
        for (int r = 0; r < lay.register_count(); ++r)
            if (r != reg) complement.push_back({lay.dims[r], lay.strides[r]});
        for (std::size_t k = 0; k < factors; ++k)
            if (k != j && g.orders[k] > 1)
                complement.push_back({g.orders[k], lay.strides[reg] * place[k]});
        apply_matrix_digits(state.amps, f, std::span<const Digit>(&target, 1), complement);
    }
}

std::vector<double> weak_fourier_sampling_distribution(const FiniteGroup& g,
                                                       const CharacterTable& table,
                                                       const Subgroup& k) {
    if (k.parent_size != g.size())
        throw DimensionMismatch("weak_fourier_sampling_distribution: subgroup/group mismatch");
    std::vector<double> probs(table.irrep_count());
    double total = 0.0;
    for (int i = 0; i < table.irrep_count(); ++i) {
        cplx acc(0.0, 0.0);
        for (std::int64_t e : k.elements) acc += table.value(i, int(e));
        acc *= double(table.dims[i]) / double(g.size());
        if (std::abs(acc.imag()) > 1e-9 || acc.real() < -1e-9)
            throw Error("weak_fourier_sampling_distribution: character sum is not a probability");
        probs[std::size_t(i)] = std::max(0.0, acc.real());
        total += probs[std::size_t(i)];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw Error("weak_fourier_sampling_distribution: probabilities do not sum to 1");
    return probs;
}

std::vector<double> weak_fourier_sampling_distribution(const FiniteGroup& g, const Subgroup& k) {
    return weak_fourier_sampling_distribution(g, character_table(g), k);
}

}  // namespace hspsim
