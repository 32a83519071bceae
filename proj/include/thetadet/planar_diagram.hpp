#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "thetadet/signed_graph.hpp"

namespace thetadet {

// One crossing of a knot diagram: the four arc labels around it in
// counterclockwise rotation order, starting at the incoming under-strand.
// Arcs are numbered 1..2n along the knot, so arcs[2] always succeeds arcs[0].
struct Crossing {
    std::array<int, 4> arcs{};
};

// A directed arc-side: the arc end sitting at `pos` (0..3) of `crossing`.
struct Dart {
    int crossing = -1;
    int pos = -1;
    bool operator==(const Dart&) const = default;
};

class PlanarDiagram {
public:
    PlanarDiagram() = default;  // the 0-crossing unknot

    // Validates tuple shape, arc labels, strand continuity and connectivity.
    static PlanarDiagram from_tuples(std::vector<Crossing> crossings, int outer_face = -1);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int arc_count() const { return 2 * crossing_count(); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int c) const { return crossings_.at(static_cast<size_t>(c)); }

    // Explicit unbounded-face choice from the input text, -1 if none.
    int outer_face_override() const { return outer_face_; }

    int successor(int arc) const { return arc % arc_count() + 1; }

    // Position (1 or 3) where the over-strand enters crossing c.
    int over_in_pos(int c) const;

private:
    std::vector<Crossing> crossings_;
    int outer_face_ = -1;
};

// Parses "X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)" with an optional leading
// "outer=<face-index>" token; '#' starts a comment.  A text with no tuples is
// the 0-crossing unknot.
PlanarDiagram parse_pd(const std::string& text);
std::string pd_to_text(const PlanarDiagram& d);

// Faces of the diagram's 4-valent plane graph, found by orbit-tracing the
// rotation system.  Face ids are deterministic (discovery order).
struct FaceData {
    std::vector<std::vector<Dart>> faces;      // each face as a dart cycle
    std::vector<std::array<int, 4>> corner_face;  // [crossing][corner] -> face id
    std::vector<std::array<int, 2>> arc_faces;    // [arc-1] -> the two face ids
    int outer_face = -1;

    int face_count() const { return static_cast<int>(faces.size()); }
};

// Requires at least one crossing; throws InvalidDiagramError when the face
// count is not crossing_count + 2 (non-planar rotation data).
FaceData trace_faces(const PlanarDiagram& d);

// One of the two checkerboard colourings: colour 0 = shaded, 1 = unshaded.
struct Shading {
    std::vector<int> colour;  // per face id
    int shaded_count = 0;
    bool shaded(int face) const { return colour[static_cast<size_t>(face)] == 0; }
};

// The two complementary shadings; first has the unbounded face unshaded.
std::pair<Shading, Shading> checkerboard(const PlanarDiagram& d, const FaceData& fd);

// Incidence sign of crossing c with respect to a shading: -1 when the corner
// counterclockwise of the incoming under-strand is shaded, else +1.  The
// global sign is calibrated so the standard torus trefoil's two-region
// shading has all-positive crossings.  Swapping the shading flips it;
// relabelling arcs leaves it unchanged.
int crossing_sign(const PlanarDiagram& d, const FaceData& fd, const Shading& s, int c);

// Tait graph of one shading: a vertex per shaded face (in face-id order), an
// edge per crossing joining the two shaded corners, weighted by the crossing
// sign and tagged with the crossing index.
SignedGraph tait_graph(const PlanarDiagram& d, const FaceData& fd, const Shading& s);

// Both Tait graphs, one per checkerboard shading (plane duals of each other).
std::pair<SignedGraph, SignedGraph> tait_graphs(const PlanarDiagram& d);

/// Full (unreduced) Goeritz matrix of a shading: rows/columns indexed by the
// shaded faces in face-id order; entry (i,j), i != j, is minus the sum of
// incidence signs over crossings where faces i and j meet; each diagonal
// entry makes its row sum to zero.  Equals laplacian(tait_graph(d, fd, s)).
ExactMatrix goeritz_matrix(const PlanarDiagram& d, const FaceData& fd, const Shading& s);

// |det| of a reduced Goeritz matrix, computed from both shadings, which must
// agree (DisagreementError otherwise).  The 0-crossing unknot gives 1.
BigInt knot_determinant(const PlanarDiagram& d);

struct KnotReport {
    BigInt det;          // the knot determinant
    Dyadic tau_shaded;   // signed tree weight, first shading's Tait graph
    Dyadic tau_dual;     // same for the complementary shading
    int crossings = 0;
    int faces = 0;
};
KnotReport knot_report(const PlanarDiagram& d);

// Diagram surgeries used to build non-minimal fixtures and invariance tests.
// add_kink threads arc `arc` through a new crossing with a small loop
// (chirality +1 or -1 picks the loop's side); on the empty diagram it returns
// a 1-crossing unknot.  The determinant is unchanged by both operations.
PlanarDiagram add_kink(const PlanarDiagram& d, int arc, int chirality);
PlanarDiagram reverse_orientation(const PlanarDiagram& d);
PlanarDiagram cycle_labels(const PlanarDiagram& d, int shift);

} // namespace thetadet
