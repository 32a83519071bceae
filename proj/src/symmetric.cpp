#include "thetadet/symmetric.hpp"

#include <sstream>
#include <stdexcept>

#include "thetadet/errors.hpp"

namespace thetadet {

namespace {

void check_sign(int sign, const char* what) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument(std::string(what) + ": sign must be +1 or -1");
}

} // namespace

SymmetricTaitGraph::SymmetricTaitGraph(int left_count, int axis_count)
    : left_count_(left_count), axis_count_(axis_count) {
    if (left_count < 0) throw std::invalid_argument("negative left vertex count");
    if (axis_count < 1) throw std::invalid_argument("at least one axis vertex is required");
}

void SymmetricTaitGraph::add_left_edge(int u, int v, int sign) {
    check_sign(sign, "add_left_edge");
    const int total = left_count_ + axis_count_;
    if (u < 1 || u > total || v < 1 || v > total)
        throw std::invalid_argument("add_left_edge: vertex id out of range");
    if (u == v) throw std::invalid_argument("add_left_edge: self-loop");
    if (u > left_count_ && v > left_count_)
        throw std::invalid_argument(
            "add_left_edge: both endpoints on the axis (use an axis edge)");
    left_edges_.push_back({u, v, sign});
}

void SymmetricTaitGraph::add_axis_edge(int i, int j, int sign) {
    check_sign(sign, "add_axis_edge");
    if (i < 1 || i > axis_count_ || j < 1 || j > axis_count_)
        throw std::invalid_argument("add_axis_edge: axis index out of range");
    if (i == j) throw std::invalid_argument("add_axis_edge: self-loop");
    axis_edges_.push_back({i, j, sign});
}

void SymmetricTaitGraph::add_cross_edge(int vertex, int sign) {
    check_sign(sign, "add_cross_edge");
    if (vertex < 1 || vertex > left_count_)
        throw std::invalid_argument("add_cross_edge: left vertex id out of range");
    cross_edges_.push_back({vertex, sign});
}

SymmetricTaitGraph parse_sym(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    struct PendingL { int u, v, s, line; };
    struct PendingA { int i, j, s, line; };
    struct PendingX { int v, s, line; };
    std::vector<PendingL> ls;
    std::vector<PendingA> as;
    std::vector<PendingX> xs;
    auto fail = [](int ln, const std::string& msg) {
        throw ParseError("line " + std::to_string(ln) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls_in(line);
        std::string word;
        if (!(ls_in >> word)) continue;
        auto read_rest = [&](auto&... vals) {
            if (!((ls_in >> vals) && ...)) fail(lineno, "malformed '" + word + "' directive");
            std::string extra;
            if (ls_in >> extra) fail(lineno, "trailing text after '" + word + "' directive");
        };
        if (word.rfind("left=", 0) == 0) {
            std::istringstream(word.substr(5)) >> n;
            if (n < 0) fail(lineno, "bad left vertex count");
        } else if (word.rfind("axis=", 0) == 0) {
            std::istringstream(word.substr(5)) >> m;
            if (m < 1) fail(lineno, "bad axis vertex count");
        } else if (word == "ledge") {
            int u = 0, v = 0, s = 0;
            read_rest(u, v, s);
            ls.push_back({u, v, s, lineno});
        } else if (word == "aedge") {
            int i = 0, j = 0, s = 0;
            read_rest(i, j, s);
            as.push_back({i, j, s, lineno});
        } else if (word == "xedge") {
            int v = 0, s = 0;
            read_rest(v, s);
            xs.push_back({v, s, lineno});
        } else {
            fail(lineno, "unknown directive '" + word + "'");
        }
    }
    if (n < 0 || m < 0) throw ParseError("missing left=<n> or axis=<m> header");
    SymmetricTaitGraph g(n, m);
    for (const auto& e : ls) {
        try {
            g.add_left_edge(e.u, e.v, e.s);
        } catch (const std::invalid_argument& ex) {
            fail(e.line, ex.what());
        }
    }
    for (const auto& e : as) {
        try {
            g.add_axis_edge(e.i, e.j, e.s);
        } catch (const std::invalid_argument& ex) {
            fail(e.line, ex.what());
        }
    }
    for (const auto& e : xs) {
        try {
            g.add_cross_edge(e.v, e.s);
        } catch (const std::invalid_argument& ex) {
            fail(e.line, ex.what());
        }
    }
    return g;
}

std::string sym_to_text(const SymmetricTaitGraph& s) {
    std::ostringstream out;
    out << "left=" << s.left_count() << "\n";
    out << "axis=" << s.axis_count() << "\n";
    for (const auto& e : s.left_edges())
        out << "ledge " << e.u << " " << e.v << " " << e.sign << "\n";
    for (const auto& e : s.axis_edges())
        out << "aedge " << e.i << " " << e.j << " " << e.sign << "\n";
    for (const auto& e : s.cross_edges())
        out << "xedge " << e.vertex << " " << e.sign << "\n";
    return out.str();
}

namespace {

// Shared-id (1..n+m) to index in the full graph, left copy.
int left_id(const SymmetricTaitGraph&, int shared) { return shared - 1; }
// Same, mirrored: left vertices map to their right copies, axis stays put.
int right_id(const SymmetricTaitGraph& s, int shared) {
    const int n = s.left_count(), m = s.axis_count();
    return shared <= n ? n + m + shared - 1 : shared - 1;
}

} // namespace

SignedGraph full_graph(const SymmetricTaitGraph& s) {
    const int n = s.left_count(), m = s.axis_count();
    SignedGraph g(2 * n + m);
    for (const auto& e : s.left_edges()) {
        g.add_edge(left_id(s, e.u), left_id(s, e.v), Dyadic(e.sign));
        g.add_edge(right_id(s, e.u), right_id(s, e.v), Dyadic(e.sign));
    }
    for (const auto& e : s.axis_edges())
        g.add_edge(n + e.i - 1, n + e.j - 1, Dyadic(e.sign));
    for (const auto& e : s.cross_edges())
        g.add_edge(e.vertex - 1, n + m + e.vertex - 1, Dyadic(e.sign));
    if (!g.is_connected())
        throw InvalidDiagramError("symmetric graph does not describe a connected diagram");
    return g;
}

SignedGraph right_half(const SymmetricTaitGraph& s) {
    const int n = s.left_count(), m = s.axis_count();
    SignedGraph g(n + m);
    for (const auto& e : s.left_edges())
        g.add_edge(left_id(s, e.u), left_id(s, e.v), Dyadic(e.sign));
    for (const auto& e : s.axis_edges())
        g.add_edge(n + e.i - 1, n + e.j - 1, Dyadic(e.sign) * Dyadic::half());
    return g;
}

SignedGraph left_half(const SymmetricTaitGraph& s) {
    const int n = s.left_count();
    const int hub = n;
    SignedGraph g(n + 1);
    for (const auto& e : s.left_edges()) {
        int u = e.u <= n ? e.u - 1 : hub;
        int v = e.v <= n ? e.v - 1 : hub;
        g.add_edge(u, v, Dyadic(e.sign));  // spokes land on the hub
    }
    for (const auto& e : s.cross_edges())
        g.add_edge(e.vertex - 1, hub, Dyadic(2 * e.sign));
    // axis edges contract away with the axis
    return g;
}

SignedGraph constituent_ab(const SymmetricTaitGraph& s) {
    const int n = s.left_count(), m = s.axis_count();
    SignedGraph g(n + m);
    for (const auto& e : s.left_edges())
        g.add_edge(left_id(s, e.u), left_id(s, e.v), Dyadic(e.sign));
    for (const auto& e : s.axis_edges()) {
        // A halved axis edge becomes a two-edge path through a fresh vertex,
        // exactly as subdivide_edge would rewrite it.
        int x = g.add_vertex();
        g.add_edge(n + e.i - 1, x, Dyadic(e.sign));
        g.add_edge(x, n + e.j - 1, Dyadic(e.sign));
    }
    return g;
}

SignedGraph constituent_bc(const SymmetricTaitGraph& s) {
    const int n = s.left_count();
    const int hub = n;
    SignedGraph g(n + 1);
    for (const auto& e : s.left_edges()) {
        int u = e.u <= n ? e.u - 1 : hub;
        int v = e.v <= n ? e.v - 1 : hub;
        g.add_edge(u, v, Dyadic(e.sign));
    }
    for (const auto& e : s.cross_edges()) {
        // the doubled cross edge, spelled as two parallel unit crossings
        g.add_edge(e.vertex - 1, hub, Dyadic(e.sign));
        g.add_edge(e.vertex - 1, hub, Dyadic(e.sign));
    }
    return g;
}

ThetaReport theta_report(const SymmetricTaitGraph& s) {
    ThetaReport r;
    r.m = s.axis_count();
    r.tau_full = tree_weight(full_graph(s));
    r.tau_left = tree_weight(left_half(s));
    r.tau_right = tree_weight(right_half(s));
    r.zy_value = Dyadic(BigInt(1) << (r.m - 1)) * r.tau_left * r.tau_right;
    r.zy_ok = r.zy_value == r.tau_full;

    Dyadic tau_ab = tree_weight(constituent_ab(s));
    Dyadic tau_bc = tree_weight(constituent_bc(s));
    if (!r.tau_full.is_integer() || !tau_ab.is_integer() || !tau_bc.is_integer())
        throw DisagreementError("theta determinant: non-integer tree weight");
    r.det_full = r.tau_full.abs().as_integer();
    r.det_ab = tau_ab.abs().as_integer();
    r.det_bc = tau_bc.abs().as_integer();
    r.product_ok = r.det_ab * r.det_bc == r.det_full;
    r.det_odd = r.det_full % 2 != 0;
    return r;
}

BigInt theta_determinant(const SymmetricTaitGraph& s) {
    ThetaReport r = theta_report(s);
    if (!r.zy_ok)
        throw DisagreementError("theta determinant: splitting identity failed (tau " +
                                r.tau_full.str() + " vs " + r.zy_value.str() + ")");
    if (!r.product_ok)
        throw DisagreementError("theta determinant: constituent product " + r.det_ab.str() +
                                " * " + r.det_bc.str() + " != " + r.det_full.str());
    return r.det_full;
}

} // namespace thetadet
