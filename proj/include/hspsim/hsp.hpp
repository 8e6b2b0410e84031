// The hidden-subgroup engine. One round of the standard method is:
//   uniform superposition -> oracle -> measure the value register ->
//   group Fourier transform -> measure the label register,
// which yields a uniformly random label from the annihilator of the hidden
// subgroup. Every solver here runs rounds of that loop and post-processes
// the labels classically, verifying candidates against the oracle before
// returning them.
//
// Two interchangeable sampling modes:
//   Simulate -- run the full state-vector pipeline;
//   Exact    -- draw from the closed-form label distribution derived from
//               the instance's ground truth (fast path; the tests pin the
//               two modes together to total variation <= 1e-9).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hspsim/groups.hpp"
#include "hspsim/numtheory.hpp"
#include "hspsim/rng.hpp"

namespace hspsim {

enum class SampleMode { Exact, Simulate };

struct HiddenSubgroupInstance {
    AbelianGroup group;
    std::function<std::int64_t(std::int64_t)> oracle;  // constant exactly on cosets of K
    std::optional<Subgroup> ground_truth;              // K, required for Exact mode
    std::optional<Subgroup> dual_truth;                // annihilator of K, optional cache
};

struct DualSample {
    std::int64_t label = 0;
    SampleMode mode = SampleMode::Simulate;
    std::int64_t quantum_queries = 0;  // oracle applications in this round
    std::int64_t gate_ops = 0;         // elementary operator applications
};

DualSample run_standard_method(const HiddenSubgroupInstance& instance, Rng& rng,
                               SampleMode mode);

// ---------------------------------------------------------------------------

struct PeriodConfig {
    int max_rounds = 64;
    SampleMode mode = SampleMode::Simulate;
};

struct PeriodResult {
    std::int64_t period = 0;
    int rounds = 0;
    std::vector<std::int64_t> samples;       // dual labels, one per round
    std::vector<std::int64_t> candidates;    // denominator proposed each round
    std::int64_t quantum_queries = 0;
    std::int64_t gate_ops = 0;
};

// Hidden period of f on Z_n (the period must divide n). Each sampled label c
// proposes the denominator of c/n in lowest terms; proposals aggregate by
// least common multiple and the result is verified via f(0) == f(candidate).
PeriodResult solve_period_zn(std::int64_t n, const std::function<std::int64_t(std::int64_t)>& f,
                             Rng& rng, const PeriodConfig& config = {});

// ---------------------------------------------------------------------------

struct ShorConfig {
    int max_rounds = 64;
    std::optional<std::int64_t> q_override;  // power of two; default: least 2^t >= n^2
    SampleMode mode = SampleMode::Simulate;
};

struct ShorRound {
    std::int64_t measured = 0;                // label c in [0, q)
    std::vector<Convergent> convergents;      // of c/q
    std::optional<std::int64_t> verified;     // order found this round, if any
};

struct ShorResult {
    OrderResult order{0, 0, 0};
    std::int64_t q = 0;
    std::vector<ShorRound> rounds;
    std::int64_t quantum_queries = 0;
    std::int64_t gate_ops = 0;
};

// Order of `base` modulo `modulus` through the truncated-domain pipeline on
// [0, q): candidate denominators come from the convergents of measured c/q,
// candidates and their small multiples are verified with mod_exp, and the
// returned order is reduced to the least exponent that works.
ShorResult solve_order_shor(std::int64_t modulus, std::int64_t base, Rng& rng,
                            const ShorConfig& config = {});

// Exact c-distribution of one pipeline round conditioned on the value
// register collapsing at offset x0 (period r, domain [0, q)). Used by Exact
// mode and pinned against the simulated pipeline in the tests.
std::vector<double> shor_label_distribution(std::int64_t q, std::int64_t r, std::int64_t x0);

// ---------------------------------------------------------------------------

struct SimonConfig {
    int max_rounds = 0;  // 0 means 16n + 16
    SampleMode mode = SampleMode::Simulate;
};

struct SimonResult {
    bool injective = false;
    std::int64_t xi = 0;  // hidden mask when !injective
    int samples = 0;
    std::vector<std::int64_t> dual_samples;
    std::int64_t quantum_queries = 0;
};

// Hidden xor-mask of f on n-bit strings, promised two-to-one with
// f(x) == f(x ^ xi) (or injective, which is reported as such). Dual samples
// y satisfy y . xi == 0; xi is read off the GF(2) nullspace once n-1
// independent constraints accumulate, then verified via f(0) == f(xi).
SimonResult solve_simon(int n_bits, const std::function<std::int64_t(std::int64_t)>& f,
                        Rng& rng, const SimonConfig& config = {});

// Basis of {x : y . x == 0 (mod 2) for every y in rows}, masks of n bits.
std::vector<std::uint64_t> gf2_nullspace(std::span<const std::uint64_t> rows, int n_bits);

// ---------------------------------------------------------------------------

struct NonabelianInstance {
    FiniteGroup group;
    std::function<std::int64_t(std::int64_t)> oracle;  // constant exactly on left cosets
    std::optional<Subgroup> ground_truth;              // K (normal), drives the sampler
};

struct ReconstructionConfig {
    double samples_per_log = 8.0;  // sample budget = floor(this * log2 |G|)
};

struct ReconstructionResult {
    Subgroup subgroup;
    int samples = 0;
    std::vector<int> labels;  // sampled irrep indices
};

// Normal hidden subgroup from weak Fourier sampling: intersect the kernels
// of the sampled irrep labels until the oracle confirms the intersection is
// constant exactly on its cosets.
ReconstructionResult reconstruct_normal_subgroup(const NonabelianInstance& instance, Rng& rng,
                                                 const ReconstructionConfig& config = {});

// Canonical oracle for a hidden subgroup: maps each element to the index of
// its left coset.
std::function<std::int64_t(std::int64_t)> coset_oracle(const FiniteGroup& g, const Subgroup& k);
std::function<std::int64_t(std::int64_t)> coset_oracle(const AbelianGroup& g, const Subgroup& k);

}  // namespace hspsim
