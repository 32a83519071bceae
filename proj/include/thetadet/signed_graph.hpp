#pragma once

#include <string>
#include <vector>

#include "thetadet/exact_matrix.hpp"

namespace thetadet {

// One edge of an undirected multigraph.  Parallel edges and self-loops are
// allowed; `tag` optionally records which diagram crossing produced the edge.
struct SignedEdge {
    int u = 0;
    int v = 0;
    Dyadic weight;
    int tag = -1;
};

// Undirected multigraph with dyadic edge weights, vertices 0..vertex_count-1.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int vertex_count);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    const SignedEdge& edge(int e) const;

    int add_vertex() { return vertex_count_++; }
    void add_edge(int u, int v, Dyadic weight, int tag = -1);

    // Connectivity of the underlying multigraph (weights ignored).
    bool is_connected() const;

private:
    int vertex_count_ = 0;
    std::vector<SignedEdge> edges_;
};

// Weighted Laplacian: off-diagonal (i,j) = -(sum of weights of i-j edges),
// diagonal (i,i) = sum of weights of non-loop edges at i.  Self-loops are
// ignored entirely, so every row sums to zero.
ExactMatrix laplacian(const SignedGraph& g);

// Laplacian with one row/column deleted (default: the highest-numbered
// vertex).  Its determinant is independent of the choice.
ExactMatrix reduced_laplacian(const SignedGraph& g);
ExactMatrix reduced_laplacian(const SignedGraph& g, int deleted_vertex);

// Signed total spanning-tree weight: sum over spanning trees of the product
// of edge weights, computed as det of a reduced Laplacian (matrix-tree
// theorem).  A graph with no spanning tree gives exact 0; a single vertex
// gives 1.
Dyadic tree_weight(const SignedGraph& g);

// Same quantity by brute force: every (vertex_count-1)-subset of edges is
// tested for being a spanning tree.  Independent of all matrix code, so it
// can referee it.  Throws OracleGuardError above `max_edges` edges.
inline constexpr int kOracleMaxEdges = 24;
Dyadic tree_weight_oracle(const SignedGraph& g, int max_edges = kOracleMaxEdges);

// Edge surgeries used by the spanning-tree lemmas.  Each returns a new graph;
// `edge_index` refers to the current edge order.
SignedGraph remove_self_loops(const SignedGraph& g);
// Replace edge e by two parallel copies of half its weight (tree weight is
// preserved exactly).  e must not be a self-loop.
SignedGraph split_multiedge(const SignedGraph& g, int edge_index);
// Replace an edge of weight +-1/2 by a path of two edges of weight +-1
// through a fresh vertex (|tree weight| doubles).
SignedGraph subdivide_edge(const SignedGraph& g, int edge_index);

// Text format: one "vertices=<n>" line, then "edge <u> <v> <w>" lines with
// 1-based vertex ids and dyadic weights such as -1, 2, 1/2, -1/2.
// '#' starts a comment.
SignedGraph parse_graph(const std::string& text);
std::string graph_to_text(const SignedGraph& g);

} // namespace thetadet
