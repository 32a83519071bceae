#include "thetadet/signed_graph.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "thetadet/errors.hpp"

namespace thetadet {

namespace {

// Minimal union-find over a fixed vertex range.
struct UnionFind {
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // False if x and y were already connected.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
    std::vector<int> parent;
};

} // namespace

SignedGraph::SignedGraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
}

const SignedEdge& SignedGraph::edge(int e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("SignedGraph::edge: no such edge");
    return edges_[static_cast<size_t>(e)];
}

void SignedGraph::add_edge(int u, int v, Dyadic weight, int tag) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
        throw std::out_of_range("SignedGraph::add_edge: endpoint out of range");
    if (weight.is_zero()) throw std::invalid_argument("SignedGraph::add_edge: zero weight");
    edges_.push_back({u, v, std::move(weight), tag});
}

bool SignedGraph::is_connected() const {
    if (vertex_count_ <= 1) return true;
    UnionFind uf(vertex_count_);
    int components = vertex_count_;
    for (const auto& e : edges_)
        if (uf.unite(e.u, e.v)) --components;
    return components == 1;
}

ExactMatrix laplacian(const SignedGraph& g) {
    const int n = g.vertex_count();
    ExactMatrix m = ExactMatrix::Zero(n, n);
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;  // self-loops never enter the Laplacian
        m(e.u, e.v) -= e.weight;
        m(e.v, e.u) -= e.weight;
        m(e.u, e.u) += e.weight;
        m(e.v, e.v) += e.weight;
    }
    return m;
}

ExactMatrix reduced_laplacian(const SignedGraph& g) {
    return reduced_laplacian(g, g.vertex_count() - 1);
}

ExactMatrix reduced_laplacian(const SignedGraph& g, int deleted_vertex) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("reduced_laplacian: graph has no vertices");
    return delete_row_col(laplacian(g), deleted_vertex);
}

Dyadic tree_weight(const SignedGraph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("tree_weight: graph has no vertices");
    return det_exact(reduced_laplacian(g));
}

Dyadic tree_weight_oracle(const SignedGraph& g, int max_edges) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("tree_weight_oracle: graph has no vertices");
    const int m = g.edge_count();
    if (m > max_edges)
        throw OracleGuardError("tree_weight_oracle: " + std::to_string(m) + " edges exceeds cap of " +
                               std::to_string(max_edges));
    const int k = n - 1;
    if (k == 0) return Dyadic(1);  // the single vertex is its own spanning tree
    if (m < k) return Dyadic(0);

    Dyadic total(0);
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        UnionFind uf(n);
        bool acyclic = true;
        for (int e : idx) {
            const auto& ed = g.edge(e);
            if (!uf.unite(ed.u, ed.v)) {  // cycle (self-loops included)
                acyclic = false;
                break;
            }
        }
        if (acyclic) {  // k acyclic edges on n = k+1 vertices always span
            Dyadic prod(1);
            for (int e : idx) prod *= g.edge(e).weight;
            total += prod;
        }
        // Next k-combination of {0..m-1} in lexicographic order.
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return total;
}

SignedGraph remove_self_loops(const SignedGraph& g) {
    SignedGraph r(g.vertex_count());
    for (const auto& e : g.edges())
        if (e.u != e.v) r.add_edge(e.u, e.v, e.weight, e.tag);
    return r;
}

SignedGraph split_multiedge(const SignedGraph& g, int edge_index) {
    const auto& e = g.edge(edge_index);
    if (e.u == e.v) throw std::invalid_argument("split_multiedge: cannot split a self-loop");
    Dyadic half = e.weight * Dyadic::half();
    SignedGraph r(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& f = g.edge(i);
        if (i == edge_index)
            r.add_edge(f.u, f.v, half, f.tag);
        else
            r.add_edge(f.u, f.v, f.weight, f.tag);
    }
    r.add_edge(e.u, e.v, half, e.tag);
    return r;
}

SignedGraph subdivide_edge(const SignedGraph& g, int edge_index) {
    const auto& e = g.edge(edge_index);
    if (!(e.weight == Dyadic::half() || e.weight == -Dyadic::half()))
        throw std::invalid_argument("subdivide_edge: edge weight must be 1/2 or -1/2, got " +
                                    e.weight.str());
    if (e.u == e.v) throw std::invalid_argument("subdivide_edge: cannot subdivide a self-loop");
    Dyadic unit(e.weight.sign());
    SignedGraph r(g.vertex_count());
    int x = r.add_vertex();
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& f = g.edge(i);
        if (i == edge_index) {
            r.add_edge(f.u, x, unit, f.tag);
            r.add_edge(x, f.v, unit, f.tag);
        } else {
            r.add_edge(f.u, f.v, f.weight, f.tag);
        }
    }
    return r;
}

SignedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    SignedGraph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("graph line " + std::to_string(lineno) + ": " + why);
        };
        if (!have_header) {
            if (head.rfind("vertices=", 0) != 0) fail("expected 'vertices=<n>'");
            int n = -1;
            try {
                n = std::stoi(head.substr(9));
            } catch (const std::exception&) {
                fail("bad vertex count");
            }
            if (n < 0) fail("bad vertex count");
            g = SignedGraph(n);
            have_header = true;
            std::string rest;
            if (ls >> rest) fail("trailing tokens after header");
            continue;
        }
        if (head != "edge") fail("expected 'edge <u> <v> <w>'");
        int u, v;
        std::string w;
        if (!(ls >> u >> v >> w)) fail("expected 'edge <u> <v> <w>'");
        std::string rest;
        if (ls >> rest) fail("trailing tokens after edge");
        if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
            fail("vertex id out of range (ids are 1-based)");
        g.add_edge(u - 1, v - 1, Dyadic::parse(w));
    }
    if (!have_header) throw ParseError("graph text: missing 'vertices=<n>' header");
    return g;
}

std::string graph_to_text(const SignedGraph& g) {
    std::ostringstream out;
    out << "vertices=" << g.vertex_count() << "\n";
    for (const auto& e : g.edges())
        out << "edge " << e.u + 1 << " " << e.v + 1 << " " << e.weight.str() << "\n";
    return out.str();
}

} // namespace thetadet
