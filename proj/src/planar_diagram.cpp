#include "thetadet/planar_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "thetadet/errors.hpp"

namespace thetadet {

namespace {

int dart_id(const Dart& d) { return 4 * d.crossing + d.pos; }
Dart dart_from_id(int id) { return Dart{id / 4, id % 4}; }

// The two occurrences of every arc label, i.e. the ends of every arc.
std::vector<std::array<int, 2>> arc_occurrences(const std::vector<Crossing>& cs) {
    std::vector<std::array<int, 2>> occ(2 * cs.size(), {-1, -1});
    for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
        for (int p = 0; p < 4; ++p) {
            int label = cs[static_cast<size_t>(c)].arcs[static_cast<size_t>(p)];
            auto& slots = occ[static_cast<size_t>(label - 1)];
            if (slots[0] < 0)
                slots[0] = dart_id({c, p});
            else if (slots[1] < 0)
                slots[1] = dart_id({c, p});
            // a third occurrence was already rejected during validation
        }
    }
    return occ;
}

} // namespace

PlanarDiagram PlanarDiagram::from_tuples(std::vector<Crossing> crossings, int outer_face) {
    PlanarDiagram d;
    d.crossings_ = std::move(crossings);
    d.outer_face_ = outer_face;
    const int n = d.crossing_count();
    if (n == 0) return d;
    const int arcs = 2 * n;

    std::vector<int> count(static_cast<size_t>(arcs), 0);
    for (const auto& cr : d.crossings_) {
        for (int label : cr.arcs) {
            if (label < 1 || label > arcs)
                throw ParseError("arc label " + std::to_string(label) + " outside 1.." +
                                 std::to_string(arcs));
            if (++count[static_cast<size_t>(label - 1)] > 2)
                throw ParseError("duplicate arc: label " + std::to_string(label) +
                                 " appears more than twice");
        }
    }
    for (int a = 1; a <= arcs; ++a)
        if (count[static_cast<size_t>(a - 1)] != 2)
            throw ParseError("arc label " + std::to_string(a) + " appears " +
                             std::to_string(count[static_cast<size_t>(a - 1)]) +
                             " times (expected 2)");

    for (int c = 0; c < n; ++c) {
        const auto& t = d.crossings_[static_cast<size_t>(c)].arcs;
        if (d.successor(t[0]) != t[2])
            throw ParseError("crossing " + std::to_string(c + 1) +
                             ": under-strand arcs not consecutive");
        if (d.successor(t[1]) != t[3] && d.successor(t[3]) != t[1])
            throw ParseError("crossing " + std::to_string(c + 1) +
                             ": over-strand arcs not consecutive");
    }

    // Every arc must enter exactly one crossing and leave exactly one, or the
    // strand orientation is inconsistent.
    std::vector<int> heads(static_cast<size_t>(arcs), 0);
    for (int c = 0; c < n; ++c) {
        const auto& t = d.crossings_[static_cast<size_t>(c)].arcs;
        ++heads[static_cast<size_t>(t[0] - 1)];
        ++heads[static_cast<size_t>(t[static_cast<size_t>(d.over_in_pos(c))] - 1)];
    }
    for (int a = 1; a <= arcs; ++a)
        if (heads[static_cast<size_t>(a - 1)] != 1)
            throw ParseError("arc label " + std::to_string(a) +
                             " has inconsistent orientation");

    // Crossings sharing an arc label must form one component.
    std::vector<std::vector<int>> label_sites(static_cast<size_t>(arcs));
    for (int c = 0; c < n; ++c)
        for (int label : d.crossings_[static_cast<size_t>(c)].arcs)
            label_sites[static_cast<size_t>(label - 1)].push_back(c);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int label : d.crossings_[static_cast<size_t>(c)].arcs)
            for (int other : label_sites[static_cast<size_t>(label - 1)])
                if (!seen[static_cast<size_t>(other)]) {
                    seen[static_cast<size_t>(other)] = true;
                    stack.push_back(other);
                }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw ParseError("disconnected diagram");
    return d;
}

int PlanarDiagram::over_in_pos(int c) const {
    const auto& t = crossing(c).arcs;
    bool in1 = successor(t[1]) == t[3];
    bool in3 = successor(t[3]) == t[1];
    if (in1 && in3) return t[1] != t[0] ? 1 : 3;  // only possible with 2 arcs
    return in1 ? 1 : 3;
}

PlanarDiagram parse_pd(const std::string& text) {
    // Strip comments, then scan tokens by hand: the grammar is tiny.
    std::string clean;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            clean += line;
            clean += '\n';
        }
    }

    std::vector<Crossing> tuples;
    int outer = -1;
    size_t i = 0;
    auto skip_filler = [&] {
        while (i < clean.size() && (std::isspace(static_cast<unsigned char>(clean[i])) || clean[i] == ','))
            ++i;
    };
    auto read_int = [&](const char* what) {
        skip_filler();
        size_t start = i;
        if (i < clean.size() && (clean[i] == '-' || clean[i] == '+')) ++i;
        while (i < clean.size() && std::isdigit(static_cast<unsigned char>(clean[i]))) ++i;
        if (i == start) throw ParseError(std::string("expected ") + what);
        return std::stoi(clean.substr(start, i - start));
    };
    while (true) {
        skip_filler();
        if (i >= clean.size()) break;
        if (clean[i] == 'X' || clean[i] == 'x') {
            ++i;
            skip_filler();
            if (i >= clean.size() || clean[i] != '(')
                throw ParseError("malformed tuple: expected '(' after X");
            ++i;
            Crossing cr;
            for (int k = 0; k < 4; ++k) cr.arcs[static_cast<size_t>(k)] = read_int("arc label");
            skip_filler();
            if (i >= clean.size() || clean[i] != ')')
                throw ParseError("malformed tuple: expected 4 arc labels and ')'");
            ++i;
            tuples.push_back(cr);
        } else if (clean.compare(i, 6, "outer=") == 0) {
            if (!tuples.empty()) throw ParseError("outer=<face> must precede the tuples");
            i += 6;
            outer = read_int("face index after outer=");
            if (outer < 0) throw ParseError("outer face index must be non-negative");
        } else {
            throw ParseError(std::string("unexpected character '") + clean[i] + "' in PD text");
        }
    }

    // Accept 0-based codes too: shift labels up by one when 0 occurs.
    bool has_zero = false, has_max = false;
    int arcs = 2 * static_cast<int>(tuples.size());
    for (const auto& t : tuples)
        for (int label : t.arcs) {
            has_zero |= label == 0;
            has_max |= label == arcs;
        }
    if (has_zero && !has_max)
        for (auto& t : tuples)
            for (auto& label : t.arcs) ++label;

    return PlanarDiagram::from_tuples(std::move(tuples), outer);
}

std::string pd_to_text(const PlanarDiagram& d) {
    std::ostringstream out;
    if (d.outer_face_override() >= 0) out << "outer=" << d.outer_face_override() << "\n";
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& t = d.crossing(c).arcs;
        out << "X(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")";
        out << (c + 1 < d.crossing_count() ? ",\n" : "\n");
    }
    return out.str();
}

FaceData trace_faces(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    if (n == 0) throw InvalidDiagramError("trace_faces: diagram has no crossings");
    const int darts = 4 * n;

    auto occ = arc_occurrences(d.crossings());
    // mate: the other end of the dart's arc.
    std::vector<int> mate(static_cast<size_t>(darts));
    for (const auto& pair : occ) {
        mate[static_cast<size_t>(pair[0])] = pair[1];
        mate[static_cast<size_t>(pair[1])] = pair[0];
    }
    // Face successor: cross to the arc's other end, then turn to the next
    // rotation slot.  Orbits of this permutation are the faces.
    auto next = [&](int id) {
        int m = mate[static_cast<size_t>(id)];
        return 4 * (m / 4) + (m % 4 + 1) % 4;
    };

    FaceData fd;
    fd.corner_face.assign(static_cast<size_t>(n), {-1, -1, -1, -1});
    fd.arc_faces.assign(static_cast<size_t>(2 * n), {-1, -1});
    std::vector<int> face_of(static_cast<size_t>(darts), -1);
    for (int start = 0; start < darts; ++start) {
        if (face_of[static_cast<size_t>(start)] >= 0) continue;
        int id = static_cast<int>(fd.faces.size());
        fd.faces.emplace_back();
        for (int cur = start; face_of[static_cast<size_t>(cur)] < 0; cur = next(cur)) {
            face_of[static_cast<size_t>(cur)] = id;
            fd.faces.back().push_back(dart_from_id(cur));
            // Walking out of `cur` we pass the corner at the arc's far end.
            Dart corner = dart_from_id(mate[static_cast<size_t>(cur)]);
            fd.corner_face[static_cast<size_t>(corner.crossing)][static_cast<size_t>(corner.pos)] = id;
        }
    }
    for (size_t a = 0; a < occ.size(); ++a)
        fd.arc_faces[a] = {face_of[static_cast<size_t>(occ[a][0])],
                           face_of[static_cast<size_t>(occ[a][1])]};

    if (fd.face_count() != n + 2)
        throw InvalidDiagramError("face count " + std::to_string(fd.face_count()) +
                                  " != crossings + 2 = " + std::to_string(n + 2) +
                                  ": not a planar rotation system");

    if (int forced = d.outer_face_override(); forced >= 0) {
        if (forced >= fd.face_count())
            throw InvalidDiagramError("outer face override " + std::to_string(forced) +
                                      " out of range");
        fd.outer_face = forced;
    } else {
        // Unbounded face of the standard embeddings: the largest one.
        int best = 0;
        for (int f = 1; f < fd.face_count(); ++f)
            if (fd.faces[static_cast<size_t>(f)].size() > fd.faces[static_cast<size_t>(best)].size())
                best = f;
        fd.outer_face = best;
    }
    return fd;
}

std::pair<Shading, Shading> checkerboard(const PlanarDiagram& d, const FaceData& fd) {
    const int nf = fd.face_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(nf));
    for (int a = 1; a <= d.arc_count(); ++a) {
        auto [f, g] = fd.arc_faces[static_cast<size_t>(a - 1)];
        adj[static_cast<size_t>(f)].push_back(g);
        adj[static_cast<size_t>(g)].push_back(f);
    }
    std::vector<int> colour(static_cast<size_t>(nf), -1);
    std::vector<int> stack{fd.outer_face};
    colour[static_cast<size_t>(fd.outer_face)] = 1;  // unbounded face unshaded
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[static_cast<size_t>(f)]) {
            if (colour[static_cast<size_t>(g)] < 0) {
                colour[static_cast<size_t>(g)] = 1 - colour[static_cast<size_t>(f)];
                stack.push_back(g);
            } else if (colour[static_cast<size_t>(g)] == colour[static_cast<size_t>(f)]) {
                throw InvalidDiagramError("faces admit no checkerboard colouring");
            }
        }
    }
    // Faces form one component (the diagram is connected), so all coloured.
    Shading first, second;
    first.colour = colour;
    second.colour.resize(colour.size());
    for (size_t f = 0; f < colour.size(); ++f) second.colour[f] = 1 - colour[f];
    for (int c : colour) {
        first.shaded_count += c == 0;
        second.shaded_count += c == 1;
    }
    return {first, second};
}

int crossing_sign(const PlanarDiagram& d, const FaceData& fd, const Shading& s, int c) {
    if (c < 0 || c >= d.crossing_count()) throw std::out_of_range("crossing_sign: bad crossing");
    const auto& corners = fd.corner_face[static_cast<size_t>(c)];
    return s.shaded(corners[0]) ? -1 : 1;
}

SignedGraph tait_graph(const PlanarDiagram& d, const FaceData& fd, const Shading& s) {
    std::vector<int> vertex_of(static_cast<size_t>(fd.face_count()), -1);
    int nv = 0;
    for (int f = 0; f < fd.face_count(); ++f)
        if (s.shaded(f)) vertex_of[static_cast<size_t>(f)] = nv++;
    SignedGraph g(nv);
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& corners = fd.corner_face[static_cast<size_t>(c)];
        // Around a crossing the corner colours alternate, so the two shaded
        // corners sit diagonally: slots {0,2} or {1,3}.
        int base = s.shaded(corners[0]) ? 0 : 1;
        int fa = corners[static_cast<size_t>(base)];
        int fb = corners[static_cast<size_t>(base + 2)];
        g.add_edge(vertex_of[static_cast<size_t>(fa)], vertex_of[static_cast<size_t>(fb)],
                   Dyadic(crossing_sign(d, fd, s, c)), c);
    }
    return g;
}

std::pair<SignedGraph, SignedGraph> tait_graphs(const PlanarDiagram& d) {
    FaceData fd = trace_faces(d);
    auto [first, second] = checkerboard(d, fd);
    return {tait_graph(d, fd, first), tait_graph(d, fd, second)};
}

ExactMatrix goeritz_matrix(const PlanarDiagram& d, const FaceData& fd, const Shading& s) {
    std::vector<int> index_of(static_cast<size_t>(fd.face_count()), -1);
    int nv = 0;
    for (int f = 0; f < fd.face_count(); ++f)
        if (s.shaded(f)) index_of[static_cast<size_t>(f)] = nv++;
    ExactMatrix q = ExactMatrix::Zero(nv, nv);
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& corners = fd.corner_face[static_cast<size_t>(c)];
        int base = s.shaded(corners[0]) ? 0 : 1;
        int i = index_of[static_cast<size_t>(corners[static_cast<size_t>(base)])];
        int j = index_of[static_cast<size_t>(corners[static_cast<size_t>(base + 2)])];
        if (i == j) continue;  // both shaded corners in one region: no entry
        Dyadic xi(crossing_sign(d, fd, s, c));
        q(i, j) -= xi;
        q(j, i) -= xi;
        q(i, i) += xi;
        q(j, j) += xi;
    }
    return q;
}

KnotReport knot_report(const PlanarDiagram& d) {
    KnotReport r;
    r.crossings = d.crossing_count();
    if (d.crossing_count() == 0) {
        r.det = 1;  // round unknot
        r.tau_shaded = Dyadic(1);
        r.tau_dual = Dyadic(1);
        r.faces = 1;
        return r;
    }
    FaceData fd = trace_faces(d);
    r.faces = fd.face_count();
    auto [first, second] = checkerboard(d, fd);
    r.tau_shaded = tree_weight(tait_graph(d, fd, first));
    r.tau_dual = tree_weight(tait_graph(d, fd, second));
    if (!r.tau_shaded.is_integer() || !r.tau_dual.is_integer())
        throw DisagreementError("knot determinant: non-integer tree weight");
    BigInt a = boost::multiprecision::abs(r.tau_shaded.as_integer());
    BigInt b = boost::multiprecision::abs(r.tau_dual.as_integer());
    if (a != b)
        throw DisagreementError("knot determinant: shadings disagree (" + a.str() + " vs " +
                                b.str() + ")");
    r.det = a;
    return r;
}

BigInt knot_determinant(const PlanarDiagram& d) { return knot_report(d).det; }

PlanarDiagram add_kink(const PlanarDiagram& d, int arc, int chirality) {
    if (chirality != 1 && chirality != -1)
        throw std::invalid_argument("add_kink: chirality must be +1 or -1");
    const int n = d.crossing_count();
    std::vector<Crossing> tuples = d.crossings();
    int a = 1;
    if (n > 0) {
        if (arc < 1 || arc > d.arc_count()) throw std::out_of_range("add_kink: no such arc");
        a = arc;
        // Shift labels above `arc` to open two fresh labels, then split the
        // arc: the piece entering its old terminal crossing becomes arc+2.
        for (auto& t : tuples)
            for (auto& label : t.arcs)
                if (label > a) label += 2;
        bool relabelled = false;
        for (int c = 0; c < n && !relabelled; ++c) {
            auto& t = tuples[static_cast<size_t>(c)].arcs;
            int over_in = d.over_in_pos(c);
            for (int p : {0, over_in}) {
                if (d.crossing(c).arcs[static_cast<size_t>(p)] == a) {
                    t[static_cast<size_t>(p)] = a + 2;
                    relabelled = true;
                    break;
                }
            }
        }
        if (!relabelled) throw std::logic_error("add_kink: arc has no incoming end");
    }
    const int new_arcs = 2 * (n + 1);
    auto wrap = [&](int label) { return (label - 1) % new_arcs + 1; };
    Crossing kink;
    if (chirality > 0)
        kink.arcs = {wrap(a), wrap(a + 1), wrap(a + 1), wrap(a + 2)};
    else
        kink.arcs = {wrap(a), wrap(a + 2), wrap(a + 1), wrap(a + 1)};
    tuples.push_back(kink);
    return PlanarDiagram::from_tuples(std::move(tuples));
}

PlanarDiagram reverse_orientation(const PlanarDiagram& d) {
    const int arcs = d.arc_count();
    std::vector<Crossing> tuples;
    tuples.reserve(d.crossings().size());
    for (const auto& cr : d.crossings()) {
        const auto& t = cr.arcs;
        // The old under-out end is the reversed diagram's under-in; the
        // rotation order is a property of the plane and stays put.
        Crossing rc;
        for (int p = 0; p < 4; ++p)
            rc.arcs[static_cast<size_t>(p)] = arcs + 1 - t[static_cast<size_t>((p + 2) % 4)];
        tuples.push_back(rc);
    }
    return PlanarDiagram::from_tuples(std::move(tuples), d.outer_face_override());
}

PlanarDiagram cycle_labels(const PlanarDiagram& d, int shift) {
    const int arcs = d.arc_count();
    if (arcs == 0) return d;
    std::vector<Crossing> tuples = d.crossings();
    for (auto& t : tuples)
        for (auto& label : t.arcs)
            label = (label - 1 + shift % arcs + arcs) % arcs + 1;
    return PlanarDiagram::from_tuples(std::move(tuples), d.outer_face_override());
}

} // namespace thetadet
