// Fourier transforms at three levels:
//   - dft_matrix(N): the dense N-point transform, entries
//     (1/sqrt(N)) exp(2*pi*i*a*b/N).
//   - qft_circuit(n): the O(n^2) elementary-gate factorization of
//     dft_matrix(2^n) (Hadamards, controlled phases, final order-reversal
//     swaps), applied to any power-of-two register viewed as n qubits with
//     qubit 0 most significant.
//   - apply_group_ft: the transform of a product of cyclic groups, i.e. the
//     per-factor DFTs applied in place to one register of dimension |G|.
//
// Weak Fourier sampling over the nonabelian built-ins reports only the irrep
// label. Its closed form p(i) = (d_i/|G|) sum_{k in K} chi_i(k) is validated
// in the tests against explicit-representation projections, where the
// orthonormal Fourier basis vectors carry weight sqrt(d_i/|G|); a bare
// 1/sqrt(|G|) weight would leave the d_i > 1 blocks unnormalized.
#pragma once

#include <cstdint>
#include <vector>

#include "hspsim/groups.hpp"
#include "hspsim/linalg.hpp"
#include "hspsim/statevector.hpp"

namespace hspsim {

Matrix dft_matrix(std::int64_t n);

struct GateSequence {
    struct Gate {
        Matrix u;                // 2^k x 2^k for k target qubits
        std::vector<int> qubits; // first listed qubit is most significant
    };
    int qubits = 0;
    std::vector<Gate> gates;
};

// Gate count: n Hadamards + n(n-1)/2 controlled phases + floor(n/2) swaps.
GateSequence qft_circuit(int n);
GateSequence hadamard_all(int n);

// Apply to register `reg`, whose dimension must be 2^(seq.qubits).
void apply_gate_sequence(QuantumState& state, const GateSequence& seq, int reg);

// Dense unitary of a sequence, assembled column by column.
Matrix gate_sequence_unitary(const GateSequence& seq);

// In-place group transform of a register of dimension |G|.
void apply_group_ft(QuantumState& state, const AbelianGroup& g, int reg);

// p(i) = (d_i/|G|) * sum_{k in K} chi_i(k) -- the probability of observing
// irrep label i when Fourier sampling any coset state of K.
std::vector<double> weak_fourier_sampling_distribution(const FiniteGroup& g,
                                                       const CharacterTable& table,
                                                       const Subgroup& k);
std::vector<double> weak_fourier_sampling_distribution(const FiniteGroup& g, const Subgroup& k);

}  // namespace hspsim
