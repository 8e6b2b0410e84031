// Dense state-vector simulator over registers of arbitrary dimension (not
// just qubits). Amplitudes are std::complex<double>; the joint dimension is
// capped so a desk machine cannot be asked for more than it can hold.
//
// Indexing is row major: register 0 is the most significant digit. A basis
// index decomposes as i = sum_r digit_r * stride_r with
// stride_r = product of the dimensions after register r.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hspsim/groups.hpp"
#include "hspsim/linalg.hpp"
#include "hspsim/rng.hpp"

namespace hspsim {

// Joint dimension cap: 2^22 amplitudes (64 MiB of complex<double>).
constexpr std::int64_t kAmplitudeCap = std::int64_t(1) << 22;

struct RegisterLayout {
    std::vector<std::int64_t> dims;     // per register, each >= 2
    std::vector<std::int64_t> strides;  // row-major
    std::int64_t total = 0;

    explicit RegisterLayout(std::vector<std::int64_t> register_dims,
                            std::int64_t cap = kAmplitudeCap);
    int register_count() const { return int(dims.size()); }
    std::int64_t digit(std::int64_t index, int reg) const {
        return (index / strides[reg]) % dims[reg];
    }
};

struct QuantumState {
    RegisterLayout layout;
    std::vector<cplx> amps;

    explicit QuantumState(RegisterLayout l)
        : layout(std::move(l)), amps(std::size_t(layout.total)) {}
    static QuantumState basis(RegisterLayout l, std::int64_t index);
    std::int64_t dim() const { return layout.total; }
    double norm_sq() const;
};

// |0...0> on every register except `reg`, which holds the uniform
// superposition over its basis states.
QuantumState uniform_state(const RegisterLayout& layout, int reg);

// One digit of the index space a matrix axis runs over.
struct Digit {
    std::int64_t dim;
    std::int64_t stride;
};

// Core contraction: apply `u` to the sub-index described by `targets` (first
// entry most significant), for every assignment of the `complement` digits.
// `targets` and `complement` together must tile the whole index space.
// No unitarity check here -- public entry points validate their operators.
void apply_matrix_digits(std::vector<cplx>& amps, const Matrix& u,
                         std::span<const Digit> targets, std::span<const Digit> complement);

// Apply a unitary to the listed registers (in the listed order; they need not
// be adjacent). Throws NotUnitary (defect > 1e-10) or DimensionMismatch.
void apply_unitary(QuantumState& state, const Matrix& u, std::span<const int> targets);

// |x>|y> -> |x>|y + f(x) mod d_out>; a permutation of basis states, so any
// total f with values in range is reversible. Counts as one oracle query.
void apply_oracle(QuantumState& state, const std::function<std::int64_t(std::int64_t)>& f,
                  int in_reg = 0, int out_reg = 1);

// Relabel one register's basis states by a bijection.
void apply_register_permutation(QuantumState& state, int reg,
                                const std::function<std::int64_t(std::int64_t)>& perm);

// Born-rule marginal of one register.
std::vector<double> measurement_distribution(const QuantumState& state, int reg);

// Force an outcome: project and renormalize, returning the outcome's
// probability. Throws RangeError for an impossible (zero-weight) outcome.
double project_register(QuantumState& state, int reg, std::int64_t outcome);

// Sample an outcome from the register's marginal, collapse, renormalize.
std::int64_t measure_register(QuantumState& state, int reg, Rng& rng);

// Single-register state (1/sqrt(|C|)) sum_{c in C} |c>.
QuantumState prepare_coset_state(std::int64_t dim, std::span<const std::int64_t> elements);
QuantumState prepare_coset_state(const AbelianGroup& g, const Subgroup& k, std::int64_t rep);
QuantumState prepare_coset_state(const FiniteGroup& g, const Subgroup& k, std::int64_t rep);

}  // namespace hspsim
