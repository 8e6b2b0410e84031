#include "hspsim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

namespace hspsim {

Graph::Graph(int vertices) : n(vertices) {
    if (vertices < 1) throw RangeError("graph: vertex count must be positive");
    adj.assign(std::size_t(n) * std::size_t(n), 0);
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw RangeError("graph: edge endpoint out of range");
    if (i == j) throw RangeError("graph: self-loops are not allowed");
    adj[std::size_t(i) * std::size_t(n) + std::size_t(j)] = 1;
    adj[std::size_t(j) * std::size_t(n) + std::size_t(i)] = 1;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint8_t a : adj) twice += a;
    return twice / 2;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || std::size_t(v) >= p.size() || seen[std::size_t(v)]) return false;
        seen[std::size_t(v)] = true;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DimensionMismatch("compose: permutation sizes differ");
    Permutation out(a.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[std::size_t(b[i])];
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1 || n > 8) throw RangeError("all_permutations: n must be in [1, 8]");
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (int(p.size()) != g.n) throw DimensionMismatch("apply_permutation: size mismatch");
    if (!is_permutation(p)) throw RangeError("apply_permutation: not a permutation");
    Graph out(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(i, j)) out.add_edge(p[std::size_t(i)], p[std::size_t(j)]);
    return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (int(p.size()) != g.n) throw DimensionMismatch("is_automorphism: size mismatch");
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(i, j) != g.edge(p[std::size_t(i)], p[std::size_t(j)])) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<bool> seen(std::size_t(g.n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.n; ++w) {
            if (!g.edge(v, w) || seen[std::size_t(w)]) continue;
            seen[std::size_t(w)] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == g.n;
}

Graph graph_union(const Graph& a, const Graph& b) {
    if (a.n != b.n) throw DimensionMismatch("graph_union: vertex counts differ");
    if (!is_connected(a) || !is_connected(b))
        throw NotConnected("graph_union: both inputs must be connected");
    Graph out(2 * a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j) {
            if (a.edge(i, j)) out.add_edge(i, j);
            if (b.edge(i, j)) out.add_edge(a.n + i, a.n + j);
        }
    return out;
}

bool is_isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    if (a.edge_count() != b.edge_count()) return false;
    for (const Permutation& p : all_permutations(a.n)) {
        bool match = true;
        for (int i = 0; i < a.n && match; ++i)
            for (int j = i + 1; j < a.n && match; ++j)
                match = a.edge(i, j) == b.edge(p[std::size_t(i)], p[std::size_t(j)]);
        if (match) return true;
    }
    return false;
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n)) {
                n = -1;  // blank or comment-only line before the header
                continue;
            }
            if (n < 1) throw RangeError("graph line " + std::to_string(line_no) +
                                        ": vertex count must be positive");
            std::string extra;
            if (fields >> extra)
                throw RangeError("graph line " + std::to_string(line_no) +
                                 ": expected the vertex count alone");
            g = Graph(n);
            continue;
        }
        int i = 0, j = 0;
        if (!(fields >> i)) continue;  // blank line
        if (!(fields >> j))
            throw RangeError("graph line " + std::to_string(line_no) +
                             ": expected two vertex numbers");
        std::string extra;
        if (fields >> extra)
            throw RangeError("graph line " + std::to_string(line_no) +
                             ": expected exactly two vertex numbers");
        if (i < 1 || i > n || j < 1 || j > n)
            throw RangeError("graph line " + std::to_string(line_no) +
                             ": vertex out of range (vertices are 1.." + std::to_string(n) + ")");
        if (i == j)
            throw RangeError("graph line " + std::to_string(line_no) +
                             ": self-loops are not allowed");
        g.add_edge(i - 1, j - 1);
    }
    if (n < 0) throw RangeError("graph: missing vertex-count header line");
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RangeError("cannot open graph file: " + path);
    return parse_graph(in);
}

}  // namespace hspsim
