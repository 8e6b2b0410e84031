// Command-line front door: every driver behind one binary with reproducible
// seeding and machine-readable output. Distinct failure modes get distinct
// exit codes (documented in the help footer and README.md).
#include <atomic>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hspsim/algorithms.hpp"
#include "hspsim/errors.hpp"
#include "hspsim/fourier.hpp"
#include "hspsim/graph.hpp"
#include "hspsim/groups.hpp"
#include "hspsim/hsp.hpp"
#include "hspsim/numtheory.hpp"
#include "hspsim/rng.hpp"

namespace {

using nlohmann::json;
using namespace hspsim;

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0   success\n"
    "  1   usage or input/output error\n"
    "  2   no nontrivial factor exists (prime input)\n"
    "  3   a prime was required\n"
    "  4   problem exceeds the simulator's scale cap\n"
    "  5   sampling budget exhausted without a verified answer\n"
    "  6   arguments were required to be coprime\n"
    "  7   not a generator of the multiplicative group\n"
    "  8   modular inverse does not exist\n"
    "  9   oracle violates its promise\n"
    "  10  group outside the built-in families\n"
    "  11  graph input must be connected\n"
    "  12  operator is not unitary\n"
    "  13  dimension mismatch\n"
    "  14  argument out of range\n"
    "  20  internal error\n"
    "\n"
    "Graph file format: first line is the vertex count n; each further line\n"
    "is one edge \"i j\" with 1-indexed vertices; blank lines and '#'\n"
    "comments are ignored.\n"
    "\n"
    "Oracle specs for `period`: mod:<r> (x -> x mod r), pow:<a>:<M>\n"
    "(x -> a^x mod M), const (x -> 0).\n"
    "\n"
    "Group specs for `wfs`: z<n1>x<n2>x... (product of cyclic groups, e.g.\n"
    "z12 or z2x4), d<n> (dihedral, n in 3..6), s<n> (symmetric, n in 3..4).\n";

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NoFactor*>(&e)) return 2;
    if (dynamic_cast<const NotPrime*>(&e)) return 3;
    if (dynamic_cast<const ScaleExceeded*>(&e)) return 4;
    if (dynamic_cast<const BudgetExhausted*>(&e)) return 5;
    if (dynamic_cast<const NotCoprime*>(&e)) return 6;
    if (dynamic_cast<const InvalidGenerator*>(&e)) return 7;
    if (dynamic_cast<const NotInvertible*>(&e)) return 8;
    if (dynamic_cast<const PromiseViolation*>(&e)) return 9;
    if (dynamic_cast<const UnsupportedGroup*>(&e)) return 10;
    if (dynamic_cast<const NotConnected*>(&e)) return 11;
    if (dynamic_cast<const NotUnitary*>(&e)) return 12;
    if (dynamic_cast<const DimensionMismatch*>(&e)) return 13;
    if (dynamic_cast<const RangeError*>(&e)) return 14;
    return 20;
}

std::string to_bits(std::int64_t value, int n_bits) {
    std::string s(std::size_t(n_bits), '0');
    for (int b = 0; b < n_bits; ++b)
        if ((value >> (n_bits - 1 - b)) & 1) s[std::size_t(b)] = '1';
    return s;
}

json shor_rounds_json(const ShorResult& r) {
    json rounds = json::array();
    for (const ShorRound& round : r.rounds) {
        json convs = json::array();
        for (const Convergent& c : round.convergents)
            convs.push_back({c.numerator, c.denominator});
        json rec{{"measured", round.measured}, {"convergents", std::move(convs)}};
        if (round.verified) rec["verified_order"] = *round.verified;
        rounds.push_back(std::move(rec));
    }
    return rounds;
}

// Generic human-readable rendering of the same fields the json mode emits.
void print_text(std::ostream& os, const json& value, int indent) {
    const std::string pad(std::size_t(indent) * 2, ' ');
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            if (sub.is_object() || (sub.is_array() && !sub.empty() && sub.front().is_structured())) {
                os << pad << key << ":\n";
                print_text(os, sub, indent + 1);
            } else {
                os << pad << key << ": " << sub.dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            os << pad << "- ";
            if (value[i].is_structured()) {
                os << "\n";
                print_text(os, value[i], indent + 1);
            } else {
                os << value[i].dump() << "\n";
            }
        }
    } else {
        os << pad << value.dump() << "\n";
    }
}

struct OracleSpec {
    std::string text;
    std::function<std::int64_t(std::int64_t)> fn;
};

OracleSpec parse_oracle_spec(const std::string& spec) {
    if (spec == "const") return {spec, [](std::int64_t) { return std::int64_t(0); }};
    if (spec.rfind("mod:", 0) == 0) {
        const std::int64_t r = std::stoll(spec.substr(4));
        if (r < 1) throw RangeError("oracle spec: modulus must be positive");
        return {spec, [r](std::int64_t x) { return x % r; }};
    }
    if (spec.rfind("pow:", 0) == 0) {
        const std::size_t colon = spec.find(':', 4);
        if (colon == std::string::npos)
            throw std::runtime_error("oracle spec: expected pow:<a>:<M>");
        const std::int64_t a = std::stoll(spec.substr(4, colon - 4));
        const std::int64_t m = std::stoll(spec.substr(colon + 1));
        if (m < 2) throw RangeError("oracle spec: power modulus must be at least 2");
        if (a < 0) throw RangeError("oracle spec: power base must be nonnegative");
        return {spec, [a, m](std::int64_t x) { return mod_exp(a, std::uint64_t(x), m); }};
    }
    throw std::runtime_error("unknown oracle spec (use mod:<r>, pow:<a>:<M>, or const)");
}

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.size() >= 2 && (spec[0] == 'd' || spec[0] == 's')) {
        const int n = std::stoi(spec.substr(1));
        return spec[0] == 'd' ? FiniteGroup::dihedral(n) : FiniteGroup::symmetric(n);
    }
    if (!spec.empty() && spec[0] == 'z') {
        std::vector<std::int64_t> orders;
        std::stringstream body(spec.substr(1));
        std::string part;
        while (std::getline(body, part, 'x')) {
            if (part.empty()) throw std::runtime_error("group spec: empty cyclic order");
            orders.push_back(std::stoll(part));
        }
        if (orders.empty()) throw std::runtime_error("group spec: no cyclic orders given");
        return FiniteGroup::abelian_product(std::move(orders));
    }
    throw std::runtime_error("unknown group spec (use z<n1>x<n2>..., d<n>, or s<n>)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hidden-subgroup quantum algorithm simulator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(kExitCodeHelp);

    std::uint64_t seed = 0;
    std::string mode_name = "simulate";
    int trials = 1;
    bool json_out = false;
    bool verbose = false;
    std::optional<std::int64_t> q_override;
    app.add_option("--seed", seed, "Random seed (default 0)");
    app.add_option("--mode", mode_name, "Sampling mode: simulate (full state vector) or exact")
        ->check(CLI::IsMember({"simulate", "exact"}));
    app.add_option("--trials", trials, "Independent repetitions, each on its own derived stream")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", json_out, "Emit one json document instead of text");
    app.add_flag("--verbose", verbose, "Include the full run trace in the output");
    app.add_option("--q", q_override, "Override the order-finding domain size (power of two)");

    // Per-command state.
    std::int64_t factor_n = 0;
    std::optional<std::int64_t> factor_a;
    auto* cmd_factor = app.add_subcommand("factor", "Factor an integer by quantum order finding");
    cmd_factor->add_option("N", factor_n, "Integer to factor (>= 4)")->required();
    cmd_factor->add_option("--a", factor_a, "Force this base instead of random choices");

    std::int64_t dlog_p = 0, dlog_g = 0, dlog_x = 0;
    auto* cmd_dlog = app.add_subcommand("dlog", "Discrete logarithm modulo a prime");
    cmd_dlog->add_option("p", dlog_p, "Prime modulus")->required();
    cmd_dlog->add_option("g", dlog_g, "Generator of the units mod p")->required();
    cmd_dlog->add_option("x", dlog_x, "Target value")->required();

    std::int64_t period_n = 0;
    std::string period_oracle;
    auto* cmd_period = app.add_subcommand("period", "Hidden period of a function on Z_N");
    cmd_period->add_option("N", period_n, "Domain size")->required();
    cmd_period->add_option("--oracle", period_oracle, "Oracle spec: mod:<r>, pow:<a>:<M>, const")
        ->required();

    std::int64_t order_n = 0, order_a = 0;
    auto* cmd_order = app.add_subcommand("order", "Multiplicative order via the quantum pipeline");
    cmd_order->add_option("N", order_n, "Modulus")->required();
    cmd_order->add_option("a", order_a, "Base (coprime to N)")->required();

    int simon_n = 0;
    std::string simon_xi;
    bool simon_random = false;
    auto* cmd_simon = app.add_subcommand("simon", "Hidden xor-mask recovery");
    cmd_simon->add_option("n", simon_n, "Bit width")->required();
    cmd_simon->add_option("--xi", simon_xi, "Hidden mask as a binary string (all zeros = injective)");
    cmd_simon->add_flag("--random", simon_random, "Draw a random nonzero hidden mask per trial");

    int dj_n = 0;
    bool dj_constant = false, dj_balanced = false;
    auto* cmd_dj = app.add_subcommand("dj", "Constant-vs-balanced decision with one query");
    cmd_dj->add_option("n", dj_n, "Bit width")->required();
    cmd_dj->add_flag("--constant", dj_constant, "Use a constant oracle (random value)");
    cmd_dj->add_flag("--balanced", dj_balanced, "Use a random balanced oracle");

    std::string wfs_group;
    std::vector<std::int64_t> wfs_gens;
    auto* cmd_wfs = app.add_subcommand("wfs", "Weak Fourier sampling over a built-in group");
    cmd_wfs->add_option("group", wfs_group, "Group spec: z<n1>x<n2>..., d<n>, s<n>")->required();
    cmd_wfs->add_option("--subgroup", wfs_gens,
                        "Hidden subgroup generators (element indices, comma separated)")
        ->delimiter(',');

    std::string giso_file_a, giso_file_b;
    auto* cmd_giso = app.add_subcommand("graphiso", "Graph isomorphism harness (<= 5 vertices)");
    cmd_giso->add_option("fileA", giso_file_a, "First graph file")->required();
    cmd_giso->add_option("fileB", giso_file_b, "Second graph file")->required();

    int qft_n = 0;
    auto* cmd_qft = app.add_subcommand("qft-check", "Compare the gate-level transform to the dense matrix");
    cmd_qft->add_option("n", qft_n, "Qubit count")->required()->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    const SampleMode mode = mode_name == "exact" ? SampleMode::Exact : SampleMode::Simulate;

    // Assemble the per-trial runner and the parameter echo.
    std::string command;
    json parameters;
    std::function<json(Rng&)> runner;

    try {
        if (cmd_factor->parsed()) {
            command = "factor";
            parameters = {{"n", factor_n}};
            if (factor_a) parameters["a"] = *factor_a;
            if (q_override) parameters["q"] = *q_override;
            runner = [=](Rng& rng) {
                FactorConfig cfg;
                cfg.shor.mode = mode;
                cfg.shor.q_override = q_override;
                cfg.forced_base = factor_a;
                const FactorOutcome o = factor(factor_n, rng, cfg);
                json r{{"n", o.n},
                       {"factors", {o.factor_small, o.factor_large}},
                       {"attempts", o.attempts}};
                if (verbose) r["trace"] = to_json(o.trace);
                return r;
            };
        } else if (cmd_dlog->parsed()) {
            command = "dlog";
            parameters = {{"p", dlog_p}, {"g", dlog_g}, {"x", dlog_x}};
            runner = [=](Rng& rng) {
                const DlogOutcome o = discrete_log(dlog_p, dlog_g, dlog_x, rng, {64, mode});
                json r{{"p", o.p}, {"g", o.g}, {"x", o.x}, {"y", o.y}, {"rounds", o.rounds}};
                if (verbose) r["trace"] = to_json(o.trace);
                return r;
            };
        } else if (cmd_period->parsed()) {
            command = "period";
            const OracleSpec oracle = parse_oracle_spec(period_oracle);
            parameters = {{"n", period_n}, {"oracle", oracle.text}};
            runner = [=](Rng& rng) {
                const PeriodResult pr = solve_period_zn(period_n, oracle.fn, rng, {64, mode});
                json r{{"n", period_n},
                       {"oracle", oracle.text},
                       {"period", pr.period},
                       {"rounds", pr.rounds}};
                if (verbose)
                    r["trace"] = json{{"algorithm", "period"},
                                      {"samples", pr.samples},
                                      {"candidates", pr.candidates},
                                      {"oracle_calls", pr.quantum_queries},
                                      {"gate_ops", pr.gate_ops}};
                return r;
            };
        } else if (cmd_order->parsed()) {
            command = "order";
            parameters = {{"modulus", order_n}, {"base", order_a}};
            if (q_override) parameters["q"] = *q_override;
            runner = [=](Rng& rng) {
                ShorConfig cfg;
                cfg.mode = mode;
                cfg.q_override = q_override;
                const ShorResult s = solve_order_shor(order_n, order_a, rng, cfg);
                json r{{"modulus", s.order.modulus},
                       {"base", s.order.base},
                       {"order", s.order.order},
                       {"q", s.q},
                       {"rounds", s.rounds.size()}};
                if (verbose)
                    r["trace"] = json{{"algorithm", "order-finding"},
                                      {"rounds", shor_rounds_json(s)},
                                      {"oracle_calls", s.quantum_queries},
                                      {"gate_ops", s.gate_ops}};
                return r;
            };
        } else if (cmd_simon->parsed()) {
            command = "simon";
            if (simon_n < 1) throw RangeError("simon: n must be positive");
            if (simon_random == !simon_xi.empty())
                throw std::runtime_error("simon: give exactly one of --xi or --random");
            std::optional<std::int64_t> fixed_xi;
            if (!simon_xi.empty()) {
                if (int(simon_xi.size()) != simon_n)
                    throw std::runtime_error("simon: --xi must be exactly n binary digits");
                std::int64_t v = 0;
                for (char ch : simon_xi) {
                    if (ch != '0' && ch != '1')
                        throw std::runtime_error("simon: --xi must be a binary string");
                    v = v * 2 + (ch - '0');
                }
                fixed_xi = v;
            }
            parameters = {{"n", simon_n}};
            if (fixed_xi) parameters["xi"] = to_bits(*fixed_xi, simon_n);
            if (simon_random) parameters["xi"] = "random";
            runner = [=](Rng& rng) {
                const std::int64_t domain = std::int64_t(1) << simon_n;
                const std::int64_t xi =
                    fixed_xi ? *fixed_xi : 1 + std::int64_t(uniform_below(rng, std::uint64_t(domain - 1)));
                const SimonOutcome o =
                    simon_driver(simon_n, simon_mask_oracle(simon_n, xi), rng, {0, mode});
                json r{{"n", simon_n},
                       {"hidden_xi", to_bits(xi, simon_n)},
                       {"injective", o.result.injective},
                       {"samples", o.result.samples}};
                if (!o.result.injective) r["xi"] = to_bits(o.result.xi, simon_n);
                if (verbose) r["trace"] = to_json(o.trace);
                return r;
            };
        } else if (cmd_dj->parsed()) {
            command = "dj";
            if (dj_n < 1) throw RangeError("dj: n must be positive");
            if (dj_constant == dj_balanced)
                throw std::runtime_error("dj: give exactly one of --constant or --balanced");
            parameters = {{"n", dj_n}, {"promise", dj_constant ? "constant" : "balanced"}};
            runner = [=](Rng& rng) {
                std::function<std::int64_t(std::int64_t)> f;
                json extra = json::object();
                if (dj_constant) {
                    const std::int64_t value = std::int64_t(uniform_below(rng, 2));
                    f = [value](std::int64_t) { return value; };
                    extra["constant_value"] = value;
                } else {
                    f = random_balanced_oracle(dj_n, rng);
                }
                const DeutschOutcome o = deutsch_jozsa(dj_n, f, rng);
                json r{{"n", dj_n},
                       {"promise", dj_constant ? "constant" : "balanced"},
                       {"verdict", o.constant ? "constant" : "balanced"},
                       {"correct", o.constant == dj_constant},
                       {"oracle_calls", o.trace.oracle_calls}};
                r.update(extra);
                if (verbose) r["trace"] = to_json(o.trace);
                return r;
            };
        } else if (cmd_wfs->parsed()) {
            command = "wfs";
            const FiniteGroup group = parse_group_spec(wfs_group);
            for (std::int64_t g : wfs_gens)
                if (g < 0 || g >= group.size())
                    throw RangeError("wfs: subgroup generator out of range");
            parameters = {{"group", wfs_group}, {"subgroup", wfs_gens}};
            runner = [=](Rng& rng) {
                const Subgroup k = subgroup_closure(group, wfs_gens);
                const CharacterTable table = character_table(group);
                const std::vector<double> dist =
                    weak_fourier_sampling_distribution(group, table, k);
                json dist_json = json::array();
                for (std::size_t i = 0; i < dist.size(); ++i)
                    dist_json.push_back({{"irrep", i},
                                         {"dim", table.dims[i]},
                                         {"probability", dist[i]}});
                const bool normal = is_normal(group, k);
                json r{{"group", wfs_group},
                       {"group_size", group.size()},
                       {"subgroup_elements", k.elements},
                       {"subgroup_size", k.size()},
                       {"normal", normal},
                       {"distribution", std::move(dist_json)}};
                if (normal) {
                    NonabelianInstance instance{group, coset_oracle(group, k), k};
                    const ReconstructionResult rec = reconstruct_normal_subgroup(instance, rng);
                    r["reconstruction"] = json{{"elements", rec.subgroup.elements},
                                               {"generators", rec.subgroup.generators},
                                               {"samples", rec.samples},
                                               {"sampled_irreps", rec.labels},
                                               {"match", rec.subgroup == k}};
                } else {
                    r["reconstruction"] = nullptr;
                    r["note"] = "subgroup is not normal; kernel reconstruction skipped";
                }
                return r;
            };
        } else if (cmd_giso->parsed()) {
            command = "graphiso";
            Graph a(1), b(1);
            try {
                a = load_graph_file(giso_file_a);
                b = load_graph_file(giso_file_b);
            } catch (const Error& e) {
                // Bad or unreadable files are input errors, not domain errors.
                throw std::runtime_error(e.what());
            }
            parameters = {{"fileA", giso_file_a}, {"fileB", giso_file_b}};
            runner = [=](Rng& rng) {
                const GraphIsoOutcome o = graph_iso_harness(a, b, rng);
                json r{{"vertices", {a.n, b.n}},
                       {"isomorphic", o.isomorphic},
                       {"aut_size", o.aut_size},
                       {"in_swap_count", o.in_swap_count}};
                if (verbose) r["trace"] = to_json(o.trace);
                return r;
            };
        } else if (cmd_qft->parsed()) {
            command = "qft-check";
            parameters = {{"n", qft_n}};
            runner = [=](Rng&) {
                const GateSequence seq = qft_circuit(qft_n);
                const Matrix composed = gate_sequence_unitary(seq);
                const Matrix dense = dft_matrix(std::int64_t(1) << qft_n);
                const double deviation = max_abs_diff(composed, dense);
                const std::int64_t bound = std::int64_t(qft_n) * (qft_n + 1) / 2 + qft_n / 2;
                const bool ok = deviation <= 1e-10 && std::int64_t(seq.gates.size()) <= bound;
                return json{{"n", qft_n},
                            {"gate_count", seq.gates.size()},
                            {"gate_bound", bound},
                            {"max_deviation", deviation},
                            {"ok", ok}};
            };
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        const auto* as_hsp = dynamic_cast<const Error*>(&e);
        // Setup failures are usage/input errors unless a domain error escaped.
        return as_hsp ? exit_code_for(e) : 1;
    }

    // Run the trials, each on its own derived stream: trial t under seed s is
    // the same no matter how many workers execute.
    std::vector<json> results(static_cast<std::size_t>(trials));
    std::vector<int> fail_code(static_cast<std::size_t>(trials), 0);
    std::vector<std::string> fail_msg(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    const auto worker = [&]() {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= trials) return;
            Rng rng = derive_stream(seed, std::uint64_t(t));
            try {
                results[std::size_t(t)] = runner(rng);
            } catch (const std::exception& e) {
                fail_code[std::size_t(t)] = exit_code_for(e);
                fail_msg[std::size_t(t)] = e.what();
            }
        }
    };
    const unsigned hw = std::thread::hardware_concurrency();
    const int worker_count = std::min(trials, int(std::max(1u, std::min(hw, 8u))));
    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(worker_count));
        for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    for (int t = 0; t < trials; ++t) {
        if (fail_code[std::size_t(t)] == 0) continue;
        std::cerr << "error";
        if (trials > 1) std::cerr << " (trial " << t << ")";
        std::cerr << ": " << fail_msg[std::size_t(t)] << "\n";
        return fail_code[std::size_t(t)];
    }

    json out{{"command", command},
             {"seed", seed},
             {"mode", mode_name},
             {"trials", trials},
             {"parameters", parameters},
             {"results", json(results)}};
    if (json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << command << " (seed " << seed << ", mode " << mode_name << ")\n";
        for (int t = 0; t < trials; ++t) {
            if (trials > 1) std::cout << "trial " << t << ":\n";
            print_text(std::cout, results[std::size_t(t)], trials > 1 ? 1 : 0);
        }
    }

    if (command == "qft-check")
        for (const json& r : results)
            if (!r.value("ok", false)) return 20;
    return 0;
}
