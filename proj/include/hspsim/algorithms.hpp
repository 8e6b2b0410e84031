// End-to-end drivers: factoring, discrete log, xor-mask recovery,
// constant-vs-balanced, and the graph-isomorphism harness. Each driver
// returns its answer together with a RunTrace that makes the run replayable:
// random choices, per-round measurements, convergents tried, and the verdict.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hspsim/graph.hpp"
#include "hspsim/hsp.hpp"
#include "hspsim/rng.hpp"

namespace hspsim {

struct RunTrace {
    std::string algorithm;
    std::int64_t oracle_calls = 0;
    std::int64_t gate_ops = 0;
    int rounds = 0;
    nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const RunTrace& trace);

// ---------------------------------------------------------------------------

struct FactorConfig {
    int max_attempts = 40;
    ShorConfig shor;
    std::optional<std::int64_t> forced_base;  // use this base instead of random draws
};

struct FactorOutcome {
    std::int64_t n = 0;
    std::int64_t factor_small = 0;  // the two factors, sorted; product == n
    std::int64_t factor_large = 0;
    int attempts = 0;
    RunTrace trace;
};

// Factor n >= 4 by order finding: even n and perfect powers are handled
// classically, prime n raises NoFactor, and otherwise random bases are tried
// until one yields an even order r with base^(r/2) != -1, at which point
// gcd(base^(r/2) +- 1, n) splits n. Each attempt succeeds with probability
// at least 1/2 for odd n with at least two prime factors.
FactorOutcome factor(std::int64_t n, Rng& rng, const FactorConfig& config = {});

// ---------------------------------------------------------------------------

struct DlogConfig {
    int max_rounds = 64;
    SampleMode mode = SampleMode::Simulate;
};

struct DlogOutcome {
    std::int64_t p = 0, g = 0, x = 0;
    std::int64_t y = 0;  // g^y == x (mod p)
    int rounds = 0;
    RunTrace trace;
};

// Discrete log via the hidden subgroup <(y, 1)> of Z_{p-1} x Z_{p-1} with
// oracle f(a, b) = g^a * x^(-b) mod p. Sampled label pairs satisfy
// l2 == -y*l1; whenever gcd(l1, p-1) == 1 the round solves for y, which is
// verified by re-exponentiation before returning.
DlogOutcome discrete_log(std::int64_t p, std::int64_t g, std::int64_t x, Rng& rng,
                         const DlogConfig& config = {});

// ---------------------------------------------------------------------------

struct SimonOutcome {
    SimonResult result;
    RunTrace trace;
};

SimonOutcome simon_driver(int n_bits, const std::function<std::int64_t(std::int64_t)>& f,
                          Rng& rng, const SimonConfig& config = {});

// Canonical instance oracle: f(x) = min(x, x ^ xi), two-to-one with mask xi
// when xi != 0 and the identity (injective) when xi == 0.
std::function<std::int64_t(std::int64_t)> simon_mask_oracle(int n_bits, std::int64_t xi);

// ---------------------------------------------------------------------------

struct DeutschOutcome {
    bool constant = false;
    RunTrace trace;
};

// One-query constant-vs-balanced decision: Hadamards, a single application
// of the xor oracle against a |-> ancilla (phase kickback), Hadamards,
// measure. The all-zero outcome occurs iff f is constant; the simulation is
// exact, so the verdict is too.
DeutschOutcome deutsch_jozsa(int n_bits, const std::function<std::int64_t(std::int64_t)>& f,
                             Rng& rng);

// Oracle with exactly 2^(n-1) inputs mapping to 1, drawn uniformly.
std::function<std::int64_t(std::int64_t)> random_balanced_oracle(int n_bits, Rng& rng);

// ---------------------------------------------------------------------------

struct GraphIsoConfig {
    int trials = 30;  // automorphism samples drawn for the verdict
};

struct GraphIsoOutcome {
    bool isomorphic = false;
    std::int64_t aut_size = 0;       // |K| inside the block-or-swap group
    std::int64_t in_swap_count = 0;  // members of K that exchange the halves
    RunTrace trace;
};

// Hidden-subgroup reduction for graph isomorphism on the disjoint union C:
// inside the group of block permutations and whole-block swaps, the
// automorphism group K of C either lies entirely in the block half (the
// graphs differ) or splits exactly half-and-half (they match). K is computed
// by brute force at this scale; the verdict is made the way a quantum
// sampler would, by drawing random members of K and checking where vertex 0
// lands. Inputs must be connected, with at most 5 vertices each.
GraphIsoOutcome graph_iso_harness(const Graph& a, const Graph& b, Rng& rng,
                                  const GraphIsoConfig& config = {});

}  // namespace hspsim
