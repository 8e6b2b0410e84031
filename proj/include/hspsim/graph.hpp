// Simple undirected graphs and brute-force permutation machinery, sized for
// the isomorphism harness (a handful of vertices, exhaustive search as the
// classical ground truth).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hspsim/errors.hpp"

namespace hspsim {

struct Graph {
    int n = 0;
    std::vector<std::uint8_t> adj;  // flat n*n, symmetric, zero diagonal

    Graph() = default;
    explicit Graph(int vertices);
    bool edge(int i, int j) const { return adj[std::size_t(i) * std::size_t(n) + std::size_t(j)] != 0; }
    void add_edge(int i, int j);  // undirected; rejects self-loops and bad indices
    int edge_count() const;
};

// One-line notation, 0-indexed: p[i] is where vertex i goes.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // (a.b)(i) = a[b[i]]

// All n! permutations in lexicographic order, identity first.
std::vector<Permutation> all_permutations(int n);

// Relabeled copy: result has edge (p[i], p[j]) iff g has edge (i, j).
Graph apply_permutation(const Graph& g, const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);

bool is_connected(const Graph& g);

// Disjoint union on 2n vertices (the first input occupies 0..n-1). Both
// inputs must be connected -- otherwise the union's automorphisms can mix
// pieces across the seam and the swap test below it breaks down.
Graph graph_union(const Graph& a, const Graph& b);

// Classical oracle: try all n! relabelings of `a` against `b`.
bool is_isomorphic_brute(const Graph& a, const Graph& b);

// Text format: first non-comment line is the vertex count, then one edge per
// line as "i j" with 1-indexed vertices. Blank lines and '#' comments are
// ignored. Throws RangeError with a line diagnostic on malformed input.
Graph parse_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

}  // namespace hspsim
