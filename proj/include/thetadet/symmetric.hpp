#pragma once

#include <string>
#include <vector>

#include "thetadet/signed_graph.hpp"

namespace thetadet {

// Checkerboard graph of a diagram with mirror symmetry about a vertical axis,
// stored as one half plus the axis.  Vertices use a shared 1-based id space:
// 1..n are the left-half regions, n+1..n+m the on-axis regions.  The right
// half is implicit (mirror copy of the left).  Every edge weight is a single
// crossing sign, +1 or -1.
struct LeftEdge {
    int u = 0, v = 0;  // shared ids, at least one of them a left vertex
    int sign = 0;
};
struct AxisEdge {
    int i = 0, j = 0;  // axis indices 1..m
    int sign = 0;
};
struct CrossEdge {
    int vertex = 0;  // left vertex 1..n, joined to its own mirror image
    int sign = 0;
};

class SymmetricTaitGraph {
public:
    SymmetricTaitGraph(int left_count, int axis_count);

    int left_count() const { return left_count_; }
    int axis_count() const { return axis_count_; }

    // Mirrored to the right half (axis endpoints stay put).
    void add_left_edge(int u, int v, int sign);
    // Lies on the axis; appears once in the full graph.
    void add_axis_edge(int i, int j, int sign);
    // Crosses the axis, joining left vertex `vertex` to its mirror image.
    void add_cross_edge(int vertex, int sign);

    const std::vector<LeftEdge>& left_edges() const { return left_edges_; }
    const std::vector<AxisEdge>& axis_edges() const { return axis_edges_; }
    const std::vector<CrossEdge>& cross_edges() const { return cross_edges_; }

private:
    int left_count_ = 0;
    int axis_count_ = 0;
    std::vector<LeftEdge> left_edges_;
    std::vector<AxisEdge> axis_edges_;
    std::vector<CrossEdge> cross_edges_;
};

// Text format, one directive per line ('#' starts a comment):
//   left=<n>  axis=<m>  ledge <u> <v> <sign>  aedge <i> <j> <sign>
//   xedge <v> <sign>
SymmetricTaitGraph parse_sym(const std::string& text);
std::string sym_to_text(const SymmetricTaitGraph& s);

// The whole checkerboard graph on 2n+m vertices (left 0..n-1, axis
// n..n+m-1, right n+m..2n+m-1).  Throws InvalidDiagramError if disconnected.
SignedGraph full_graph(const SymmetricTaitGraph& s);

// The two factors of the Zhang-Yan splitting: tau(full) equals
// 2^(m-1) * tau(left_half) * tau(right_half) for every axis structure.
//
// right_half: one half plus the axis, axis-edge weights halved.
// left_half: one half plus a single hub vertex (index n) standing for the
// whole axis; spokes keep their weight, cross edges arrive doubled.
SignedGraph right_half(const SymmetricTaitGraph& s);
SignedGraph left_half(const SymmetricTaitGraph& s);

// Checkerboard graphs of the two constituent knots, unit weights throughout.
// constituent_ab is right_half with every halved axis edge subdivided into a
// two-edge path (requires unit axis signs); constituent_bc is left_half with
// each doubled cross edge spelled as two parallel unit edges.
SignedGraph constituent_ab(const SymmetricTaitGraph& s);
SignedGraph constituent_bc(const SymmetricTaitGraph& s);

struct ThetaReport {
    BigInt det_full = 0;  // |tau| of the full graph
    BigInt det_ab = 0;    // constituent determinants
    BigInt det_bc = 0;
    Dyadic tau_full;      // signed tree weights behind the above
    Dyadic tau_left;
    Dyadic tau_right;
    Dyadic zy_value;      // 2^(m-1) * tau_left * tau_right
    int m = 0;            // number of axis vertices
    bool zy_ok = false;       // zy_value == tau_full
    bool product_ok = false;  // det_ab * det_bc == det_full
    bool det_odd = false;
};

// Computes every quantity and consistency flag without throwing on mere
// disagreement (only on structural errors such as a disconnected graph).
ThetaReport theta_report(const SymmetricTaitGraph& s);

// det of the embedded theta-curve; DisagreementError unless the splitting
// identity and the constituent product both confirm it.
BigInt theta_determinant(const SymmetricTaitGraph& s);

} // namespace thetadet
