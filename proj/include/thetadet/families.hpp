#pragma once

#include <string>
#include <vector>

#include "thetadet/planar_diagram.hpp"
#include "thetadet/symmetric.hpp"

namespace thetadet {

// Alternating diagram of the (2,n) torus knot, odd n >= 3; determinant n.
PlanarDiagram torus_pd(int n);

// Alternating 4-plat diagram of the 2-bridge knot with positive twist vector
// (a1, ..., ak): a1 horizontal twists, then a2 vertical ones, and so on,
// closed across the top and bottom.  All entries must be >= 1; an even-length
// vector is first rewritten to an equivalent odd-length one.  The determinant
// is continuant(twists); throws InvalidDiagramError when the closure is a
// two-component link (even continuant) rather than a knot.
PlanarDiagram rational_pd(const std::vector<int>& twists);

// Continuant K(a1, ..., ak): K() = 1, K(a1) = a1,
// K(a1..ak) = ak * K(a1..a(k-1)) + K(a1..a(k-2)).
BigInt continuant(const std::vector<int>& twists);

// Symmetric checkerboard graph of the pretzel theta-curve built from p
// left-right symmetric strand crossings and q crossings on the axis
// (p odd >= 1, q even >= 2).  Its determinant is p^2 + p*q and its nontrivial
// constituents are the (2,p) and (2,p+q) torus knots.
SymmetricTaitGraph pretzel_theta(int p, int q);

// One row of the bundled catalogue of prime theta-curves through seven
// crossings (Litherland-Moriuchi tabulation).
struct TableRecord {
    std::string name;                       // e.g. "6_13"
    std::vector<std::string> constituents;  // three knot names
    std::vector<BigInt> listed_dets;        // determinant column, verbatim
    BigInt det = 0;                         // theta-curve determinant column
};

// Tab-separated source text compiled into the library, and its parsed form.
const std::string& table_tsv();
std::vector<TableRecord> parse_table(const std::string& tsv);
const std::vector<TableRecord>& table_records();

} // namespace thetadet
