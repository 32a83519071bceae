#include "thetadet/random_graphs.hpp"

namespace thetadet {

namespace {

// Caps on C(edges, vertices-1), the subset count the brute-force oracle
// enumerates: plain graphs may go up to 20 edges (worst case under 80k
// subsets); symmetric expansions stay at 16 (their vertex counts sit nearer
// the binomial peak).
constexpr int kPlainEdgeBudget = 20;
constexpr int kSymmetricEdgeBudget = 16;

Dyadic pick_weight(std::mt19937_64& rng) {
    static const Dyadic pool[] = {Dyadic(1),      Dyadic(-1), Dyadic::half(),
                                  -Dyadic::half(), Dyadic(2),  Dyadic(-2)};
    return pool[std::uniform_int_distribution<int>(0, 5)(rng)];
}

int pick_sign(std::mt19937_64& rng) {
    return std::uniform_int_distribution<int>(0, 1)(rng) * 2 - 1;
}

int pick_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

SignedGraph random_signed_graph(std::mt19937_64& rng) {
    const int nv = pick_int(rng, 2, 8);
    SignedGraph g(nv);
    if (pick_int(rng, 0, 9) > 0) {  // nine in ten draws start from a spanning tree
        for (int v = 1; v < nv; ++v)
            g.add_edge(pick_int(rng, 0, v - 1), v, pick_weight(rng));
    }
    const int extra = pick_int(rng, 0, std::min(12, kPlainEdgeBudget - g.edge_count()));
    for (int i = 0; i < extra; ++i) {
        int u = pick_int(rng, 0, nv - 1);
        int v = pick_int(rng, 0, nv - 1);
        g.add_edge(u, v, pick_weight(rng));  // u == v leaves a deliberate self-loop
    }
    return g;
}

SymmetricTaitGraph random_symmetric(std::mt19937_64& rng) {
    const int n = pick_int(rng, 1, 3);
    const int m = pick_int(rng, 1, 3);
    SymmetricTaitGraph s(n, m);
    int expanded = 0;  // edge count of the full graph built so far
    for (int j = 1; j < m; ++j) {  // the axis is always a path
        s.add_axis_edge(j, j + 1, pick_sign(rng));
        ++expanded;
    }
    for (int v = 1; v <= n; ++v) {
        // Hang each left region off an earlier one or the axis, so the whole
        // expansion comes out connected.
        int pick = pick_int(rng, 0, v - 1 + m - 1);
        int target = pick < v - 1 ? pick + 1 : n + (pick - (v - 1)) + 1;
        s.add_left_edge(v, target, pick_sign(rng));
        expanded += 2;  // the edge and its mirror image
    }
    const int extra = pick_int(rng, 0, 3);
    for (int i = 0; i < extra && expanded + 2 <= kSymmetricEdgeBudget; ++i) {
        int u = pick_int(rng, 1, n);
        int v = pick_int(rng, 1, n + m);
        if (u == v) continue;
        s.add_left_edge(u, v, pick_sign(rng));
        expanded += 2;
    }
    const int crosses = pick_int(rng, 0, 3);
    for (int i = 0; i < crosses && expanded + 1 <= kSymmetricEdgeBudget; ++i) {
        s.add_cross_edge(pick_int(rng, 1, n), pick_sign(rng));
        ++expanded;
    }
    return s;
}

} // namespace thetadet
