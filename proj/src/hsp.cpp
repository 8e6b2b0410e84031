#include "hspsim/hsp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "hspsim/errors.hpp"
#include "hspsim/fourier.hpp"
#include "hspsim/statevector.hpp"

namespace hspsim {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd(a, b) * b; }

// Rebuild a subgroup's generator list from its element list using the public
// closure (intersections drop generators).
Subgroup with_generators(const FiniteGroup& g, const Subgroup& k) {
    std::vector<std::int64_t> gens;
    Subgroup cur = subgroup_closure(g, gens);
    for (std::int64_t e : k.elements) {
        if (cur.contains(e)) continue;
        gens.push_back(e);
        cur = subgroup_closure(g, gens);
    }
    return cur;
}

}  // namespace

DualSample run_standard_method(const HiddenSubgroupInstance& instance, Rng& rng,
                               SampleMode mode) {
    const std::int64_t n = instance.group.size();
    DualSample out;
    out.mode = mode;

    if (mode == SampleMode::Exact) {
        if (!instance.ground_truth)
            throw RangeError("exact sampling requires the instance's ground truth");
        const Subgroup dual = instance.dual_truth
                                  ? *instance.dual_truth
                                  : annihilator(instance.group, *instance.ground_truth);
        out.label = dual.elements[uniform_below(rng, std::uint64_t(dual.elements.size()))];
        out.quantum_queries = 1;
        return out;
    }

    // Compile f into contiguous labels (first-occurrence order) so the value
    // register is exactly as large as the image.
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
    std::unordered_map<std::int64_t, std::int64_t> first;
    for (std::int64_t x = 0; x < n; ++x) {
        auto [it, fresh] = first.try_emplace(instance.oracle(x), std::int64_t(first.size()));
        (void)fresh;
        labels[std::size_t(x)] = it->second;
    }
    const std::int64_t m = std::int64_t(first.size());

    // Cosets of one subgroup all share its size, so unequal fibers expose a
    // broken promise before any state is allocated.
    std::vector<std::int64_t> fiber(std::size_t(m), 0);
    for (std::int64_t x = 0; x < n; ++x) ++fiber[std::size_t(labels[std::size_t(x)])];
    for (std::int64_t count : fiber)
        if (count != n / m) throw PromiseViolation("oracle fibers are not equal-sized cosets");

    if (m == 1) {
        // Constant oracle: the value register never entangles, so the
        // transform returns the label register to |0> with certainty.
        out.label = 0;
        out.quantum_queries = 1;
        return out;
    }

    RegisterLayout layout({n, m});
    QuantumState state = uniform_state(layout, 0);
    apply_oracle(state, [&labels](std::int64_t x) { return labels[std::size_t(x)]; }, 0, 1);
    out.quantum_queries = 1;
    measure_register(state, 1, rng);
    apply_group_ft(state, instance.group, 0);
    for (std::int64_t o : instance.group.orders)
        if (o > 1) ++out.gate_ops;
    out.label = measure_register(state, 0, rng);
    return out;
}

// ---------------------------------------------------------------------------

PeriodResult solve_period_zn(std::int64_t n, const std::function<std::int64_t(std::int64_t)>& f,
                             Rng& rng, const PeriodConfig& config) {
    if (n < 1) throw RangeError("solve_period_zn: domain size must be positive");
    if (config.max_rounds < 1) throw RangeError("solve_period_zn: max_rounds must be positive");
    PeriodResult result;
    if (n == 1) {
        result.period = 1;
        return result;
    }

    HiddenSubgroupInstance instance{AbelianGroup({n}), f, std::nullopt, std::nullopt};
    if (config.mode == SampleMode::Exact) {
        // Ground truth by divisor scan: the least period of an f that is
        // periodic on Z_n divides n.
        std::int64_t r = n;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            for (std::int64_t cand : {d, n / d}) {
                if (cand >= r) continue;
                bool ok = true;
                for (std::int64_t x = 0; x < n && ok; ++x)
                    ok = f((x + cand) % n) == f(x);
                if (ok) r = cand;
            }
        }
        Subgroup truth{n, {r % n}, {}};
        for (std::int64_t e = 0; e < n; e += r) truth.elements.push_back(e);
        Subgroup dual{n, {(n / r) % n}, {}};
        for (std::int64_t e = 0; e < n; e += n / r) dual.elements.push_back(e);
        instance.ground_truth = std::move(truth);
        instance.dual_truth = std::move(dual);
    }

    std::int64_t aggregate = 1;
    bool aggregate_changed = true;
    for (int round = 1; round <= config.max_rounds; ++round) {
        const DualSample s = run_standard_method(instance, rng, config.mode);
        result.samples.push_back(s.label);
        result.quantum_queries += s.quantum_queries;
        result.gate_ops += s.gate_ops;

        // c/n in lowest terms has denominator n/gcd(c, n), which divides the
        // period; the least common multiple of such denominators climbs to it.
        const std::int64_t denom = n / gcd(s.label == 0 ? n : s.label, n);
        result.candidates.push_back(denom);
        const std::int64_t next = lcm64(aggregate, denom);
        aggregate_changed = aggregate_changed || next != aggregate;
        aggregate = next;

        if (aggregate_changed) {
            aggregate_changed = false;
            bool ok = true;
            for (std::int64_t x = 0; x < n && ok; ++x)
                ok = f((x + aggregate) % n) == f(x);
            if (ok) {
                result.period = aggregate;
                result.rounds = round;
                return result;
            }
        }
    }
    throw BudgetExhausted("period finding used every round without verifying a period");
}

// ---------------------------------------------------------------------------

std::vector<double> shor_label_distribution(std::int64_t q, std::int64_t r, std::int64_t x0) {
    if (q < 1 || r < 1 || r > q || x0 < 0 || x0 >= r)
        throw RangeError("shor_label_distribution: need 0 <= x0 < r <= q");
    const std::int64_t m = (q - 1 - x0) / r + 1;  // superposition arm count
    const double pi = std::acos(-1.0);
    std::vector<double> p(static_cast<std::size_t>(q));
    for (std::int64_t c = 0; c < q; ++c) {
        const std::int64_t t = std::int64_t((__int128(c) * r) % q);
        double w;
        if (t == 0) {
            w = double(m) * double(m);
        } else {
            // |sum_{k<m} e^(2 pi i t k / q)|^2, reduced mod 2q before the
            // sines so large arguments cost no precision.
            const std::int64_t mt = std::int64_t((__int128(m) * t) % (2 * q));
            const double num = std::sin(pi * double(mt) / double(q));
            const double den = std::sin(pi * double(t) / double(q));
            w = (num * num) / (den * den);
        }
        p[std::size_t(c)] = w / (double(q) * double(m));
    }
    return p;
}

ShorResult solve_order_shor(std::int64_t modulus, std::int64_t base, Rng& rng,
                            const ShorConfig& config) {
    if (modulus < 2) throw RangeError("solve_order_shor: modulus must be at least 2");
    if (base < 1 || base >= modulus)
        throw RangeError("solve_order_shor: base must lie in [1, modulus)");
    if (gcd(base, modulus) != 1)
        throw NotCoprime("solve_order_shor: base shares a factor with the modulus");
    if (config.max_rounds < 1) throw RangeError("solve_order_shor: max_rounds must be positive");

    ShorResult result;
    std::int64_t q = 1;
    if (config.q_override) {
        q = *config.q_override;
        if (q < 2 * modulus || (q & (q - 1)) != 0)
            throw RangeError("solve_order_shor: q must be a power of two, at least 2*modulus");
    } else {
        while (q < modulus * modulus) q <<= 1;
    }
    result.q = q;
    if (base == 1) {
        result.order = OrderResult{base, modulus, 1};
        return result;
    }

    int t_bits = 0;
    while ((std::int64_t(1) << t_bits) < q) ++t_bits;

    // Exact mode needs the true order to drive the closed-form sampler.
    std::int64_t exact_r = 0;
    std::vector<double> offset_weights;
    if (config.mode == SampleMode::Exact) {
        exact_r = multiplicative_order(base, modulus).order;
        offset_weights.resize(std::size_t(exact_r));
        for (std::int64_t x0 = 0; x0 < exact_r; ++x0)
            offset_weights[std::size_t(x0)] = double((q - 1 - x0) / exact_r + 1);
    }

    // Simulate mode compiles x -> base^x mod modulus into contiguous labels;
    // powers repeat with the order, so label(x) = x mod r.
    std::vector<std::int64_t> labels;
    GateSequence qft;
    if (config.mode == SampleMode::Simulate) {
        labels.resize(std::size_t(q));
        std::unordered_map<std::int64_t, std::int64_t> first;
        std::int64_t power = 1 % modulus;
        for (std::int64_t x = 0; x < q; ++x) {
            auto [it, fresh] = first.try_emplace(power, std::int64_t(first.size()));
            (void)fresh;
            labels[std::size_t(x)] = it->second;
            power = std::int64_t((__int128(power) * base) % modulus);
        }
        qft = qft_circuit(t_bits);
    }

    const auto refine_to_order = [&](std::int64_t v) {
        // v is a verified exponent (base^v == 1); strip primes while the
        // smaller exponent still works. Per-prime stripping lands exactly on
        // the order because only that prime's multiplicity changes.
        std::vector<std::int64_t> primes;
        std::int64_t w = v;
        for (std::int64_t p = 2; p * p <= w; ++p) {
            if (w % p != 0) continue;
            primes.push_back(p);
            while (w % p == 0) w /= p;
        }
        if (w > 1) primes.push_back(w);
        for (std::int64_t p : primes)
            while (v % p == 0 && mod_exp(base, std::uint64_t(v / p), modulus) == 1) v /= p;
        return v;
    };

    for (int round = 1; round <= config.max_rounds; ++round) {
        std::int64_t c = 0;
        if (config.mode == SampleMode::Exact) {
            const std::int64_t x0 = std::int64_t(sample_discrete(rng, offset_weights));
            const std::vector<double> dist = shor_label_distribution(q, exact_r, x0);
            c = std::int64_t(sample_discrete(rng, dist));
            result.quantum_queries += 1;
        } else {
            const std::int64_t m = std::int64_t(1) + *std::max_element(labels.begin(), labels.end());
            RegisterLayout layout({q, m});
            QuantumState state = uniform_state(layout, 0);
            apply_oracle(state, [&labels](std::int64_t x) { return labels[std::size_t(x)]; }, 0, 1);
            result.quantum_queries += 1;
            measure_register(state, 1, rng);
            apply_gate_sequence(state, qft, 0);
            result.gate_ops += std::int64_t(qft.gates.size());
            c = measure_register(state, 0, rng);
        }

        ShorRound trace;
        trace.measured = c;
        trace.convergents = convergents(c, q);

        // Candidate orders: every convergent denominator below the modulus,
        // and small multiples of it (the measured fraction may approximate
        // c'/r with gcd(c', r) > 1). Test ascending so the first verified
        // exponent is the least.
        std::vector<std::int64_t> cands;
        for (const Convergent& cv : trace.convergents) {
            if (cv.denominator >= modulus) break;
            for (std::int64_t k = 1; k <= 64; ++k) {
                const std::int64_t v = k * cv.denominator;
                if (v >= modulus) break;
                cands.push_back(v);
            }
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (std::int64_t v : cands) {
            if (mod_exp(base, std::uint64_t(v), modulus) != 1) continue;
            trace.verified = refine_to_order(v);
            break;
        }

        result.rounds.push_back(trace);
        if (trace.verified) {
            result.order = OrderResult{base, modulus, *trace.verified};
            return result;
        }
    }
    throw BudgetExhausted("order finding used every round without a verified order");
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> gf2_nullspace(std::span<const std::uint64_t> rows, int n_bits) {
    if (n_bits < 1 || n_bits > 63) throw RangeError("gf2_nullspace: n_bits must be in [1, 63]");
    const std::uint64_t mask = (std::uint64_t(1) << n_bits) - 1;

    // Row reduce into one pivot row per leading bit.
    std::vector<std::uint64_t> pivot_row(std::size_t(n_bits), 0);
    for (std::uint64_t y : rows) {
        if ((y & ~mask) != 0) throw RangeError("gf2_nullspace: row exceeds n_bits");
        int b = n_bits - 1;
        while (y != 0 && b >= 0) {
            if (((y >> b) & 1) == 0) {
                --b;
                continue;
            }
            if (pivot_row[std::size_t(b)] != 0) {
                y ^= pivot_row[std::size_t(b)];
                continue;
            }
            pivot_row[std::size_t(b)] = y;
            y = 0;
        }
    }
    // Back-substitute so each pivot bit appears in exactly one row.
    for (int b = 0; b < n_bits; ++b) {
        if (pivot_row[std::size_t(b)] == 0) continue;
        for (int b2 = b + 1; b2 < n_bits; ++b2)
            if (pivot_row[std::size_t(b2)] != 0 && ((pivot_row[std::size_t(b2)] >> b) & 1))
                pivot_row[std::size_t(b2)] ^= pivot_row[std::size_t(b)];
    }
    // One basis vector per free bit: set that bit, then satisfy each pivot row.
    std::vector<std::uint64_t> basis;
    for (int c = 0; c < n_bits; ++c) {
        if (pivot_row[std::size_t(c)] != 0) continue;
        std::uint64_t v = std::uint64_t(1) << c;
        for (int p = 0; p < n_bits; ++p)
            if (pivot_row[std::size_t(p)] != 0 && ((pivot_row[std::size_t(p)] >> c) & 1))
                v |= std::uint64_t(1) << p;
        basis.push_back(v);
    }
    return basis;
}

SimonResult solve_simon(int n_bits, const std::function<std::int64_t(std::int64_t)>& f, Rng& rng,
                        const SimonConfig& config) {
    if (n_bits < 1) throw RangeError("solve_simon: need at least one bit");
    if (n_bits > 20) throw ScaleExceeded("solve_simon: domain exceeds desk scale");
    const std::int64_t domain = std::int64_t(1) << n_bits;
    const int budget = config.max_rounds > 0 ? config.max_rounds : 16 * n_bits + 16;

    HiddenSubgroupInstance instance{
        AbelianGroup(std::vector<std::int64_t>(std::size_t(n_bits), 2)), f, std::nullopt,
        std::nullopt};
    if (config.mode == SampleMode::Exact) {
        // The flat index of (Z_2)^n is the bit mask itself, so the ground
        // truth is found by scanning for the partner of 0.
        std::int64_t xi = 0;
        const std::int64_t f0 = f(0);
        for (std::int64_t x = 1; x < domain; ++x)
            if (f(x) == f0) {
                xi = x;
                break;
            }
        Subgroup truth{domain, {}, {0}};
        Subgroup dual{domain, {}, {}};
        if (xi != 0) {
            truth.generators = {xi};
            truth.elements = {0, xi};
            for (std::int64_t y = 0; y < domain; ++y)
                if ((std::popcount(std::uint64_t(y & xi)) & 1) == 0) dual.elements.push_back(y);
        } else {
            for (std::int64_t y = 0; y < domain; ++y) dual.elements.push_back(y);
        }
        instance.ground_truth = std::move(truth);
        instance.dual_truth = std::move(dual);
    }

    SimonResult result;
    std::vector<std::uint64_t> pivot_row(std::size_t(n_bits), 0);
    int rank = 0;
    for (int round = 0; round <= budget; ++round) {
        if (rank == n_bits) {
            // Only x = 0 satisfies every constraint, so f must be injective;
            // scan to confirm the promise before reporting it.
            std::unordered_set<std::int64_t> seen;
            for (std::int64_t x = 0; x < domain; ++x)
                if (!seen.insert(f(x)).second)
                    throw PromiseViolation("mask recovery: oracle is neither injective nor two-to-one");
            result.injective = true;
            return result;
        }
        if (rank == n_bits - 1) {
            std::vector<std::uint64_t> rows;
            for (std::uint64_t row : pivot_row)
                if (row != 0) rows.push_back(row);
            const std::vector<std::uint64_t> null_basis = gf2_nullspace(rows, n_bits);
            const std::int64_t xi = std::int64_t(null_basis.at(0));
            if (f(0) == f(xi)) {
                result.xi = xi;
                return result;
            }
            // Candidate refuted: f is injective and the missing constraint
            // has simply not been drawn yet.
        }
        if (round == budget) break;

        const DualSample s = run_standard_method(instance, rng, config.mode);
        ++result.samples;
        result.dual_samples.push_back(s.label);
        result.quantum_queries += s.quantum_queries;
        std::uint64_t y = std::uint64_t(s.label);
        int b = n_bits - 1;
        while (y != 0 && b >= 0) {
            if (((y >> b) & 1) == 0) {
                --b;
                continue;
            }
            if (pivot_row[std::size_t(b)] != 0) {
                y ^= pivot_row[std::size_t(b)];
                continue;
            }
            pivot_row[std::size_t(b)] = y;
            ++rank;
            y = 0;
        }
    }
    throw BudgetExhausted("mask recovery used every round without a verified mask");
}

// ---------------------------------------------------------------------------

ReconstructionResult reconstruct_normal_subgroup(const NonabelianInstance& instance, Rng& rng,
                                                 const ReconstructionConfig& config) {
    const FiniteGroup& g = instance.group;
    if (!instance.ground_truth)
        throw RangeError("reconstruction requires the instance's ground truth");
    const Subgroup& truth = *instance.ground_truth;
    if (truth.parent_size != g.size())
        throw DimensionMismatch("reconstruction: subgroup belongs to a different group");
    if (!is_normal(g, truth))
        throw PromiseViolation("reconstruction: hidden subgroup is not normal");
    if (config.samples_per_log <= 0)
        throw RangeError("reconstruction: sample budget must be positive");

    const CharacterTable table = character_table(g);
    const std::vector<double> dist = weak_fourier_sampling_distribution(g, table, truth);
    const int budget =
        std::max(1, int(config.samples_per_log * std::log2(double(g.size()))));

    Subgroup hat{g.size(), {}, {}};
    hat.elements.resize(std::size_t(g.size()));
    for (std::int64_t e = 0; e < g.size(); ++e) hat.elements[std::size_t(e)] = e;

    ReconstructionResult result;
    for (int s = 1; s <= budget; ++s) {
        const int label = int(sample_discrete(rng, dist));
        result.labels.push_back(label);
        hat = intersect(hat, kernel_of_character(g, table, label));
        result.samples = s;

        // The intersection always contains the hidden subgroup (each sampled
        // representation kills it), so it is correct exactly when the oracle
        // is constant along it from every element.
        bool ok = true;
        for (std::int64_t k : hat.elements) {
            for (std::int64_t x = 0; x < g.size() && ok; ++x)
                ok = instance.oracle(g.multiply(int(x), int(k))) == instance.oracle(x);
            if (!ok) break;
        }
        if (ok) {
            result.subgroup = with_generators(g, hat);
            return result;
        }
    }
    throw BudgetExhausted("reconstruction used every sample without confirming a subgroup");
}

std::function<std::int64_t(std::int64_t)> coset_oracle(const FiniteGroup& g, const Subgroup& k) {
    const std::vector<Coset> parts = left_coset_partition(g, k);
    auto ids = std::make_shared<std::vector<std::int64_t>>(std::size_t(g.size()));
    for (std::size_t ci = 0; ci < parts.size(); ++ci)
        for (std::int64_t e : parts[ci].elements) (*ids)[std::size_t(e)] = std::int64_t(ci);
    return [ids](std::int64_t x) { return ids->at(std::size_t(x)); };
}

std::function<std::int64_t(std::int64_t)> coset_oracle(const AbelianGroup& g, const Subgroup& k) {
    const std::vector<Coset> parts = coset_partition(g, k);
    auto ids = std::make_shared<std::vector<std::int64_t>>(std::size_t(g.size()));
    for (std::size_t ci = 0; ci < parts.size(); ++ci)
        for (std::int64_t e : parts[ci].elements) (*ids)[std::size_t(e)] = std::int64_t(ci);
    return [ids](std::int64_t x) { return ids->at(std::size_t(x)); };
}

}  // namespace hspsim
