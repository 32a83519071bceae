#pragma once

#include <random>

#include "thetadet/signed_graph.hpp"
#include "thetadet/symmetric.hpp"

namespace thetadet {

// Small random weighted graph for property tests: 2..8 vertices and at most
// 20 edges with weights from {+-1, +-1/2, +-2}, sized so the brute-force
// spanning-tree oracle stays fast.  A random spanning tree is laid down
// first in most draws; about a tenth skip it and may come out disconnected.
// Self-loops appear occasionally on purpose.
SignedGraph random_signed_graph(std::mt19937_64& rng);

// Random symmetric description with 1..3 left regions, a 1..3-vertex path
// axis, and unit signs, sized so the expanded graph stays within the
// oracle's reach.  Always connected by construction.
SymmetricTaitGraph random_symmetric(std::mt19937_64& rng);

} // namespace thetadet
