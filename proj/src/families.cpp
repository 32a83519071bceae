#include "thetadet/families.hpp"

#include <sstream>
#include <stdexcept>

#include "thetadet/errors.hpp"

namespace thetadet {

PlanarDiagram torus_pd(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("torus_pd: n must be an odd integer >= 3");
    auto wrap = [n](int label) { return (label - 1) % (2 * n) + 1; };
    std::vector<Crossing> tuples;
    tuples.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        tuples.push_back({{wrap(2 * i - 1), wrap(2 * i + n - 1), wrap(2 * i), wrap(2 * i + n)}});
    return PlanarDiagram::from_tuples(std::move(tuples));
}

BigInt continuant(const std::vector<int>& twists) {
    BigInt prev = 0, cur = 1;
    for (int a : twists) {
        BigInt next = a * cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

constexpr int kNW = 0, kNE = 1, kSW = 2, kSE = 3;

// Partially built 4-plat: the four open ends of the tangle so far, plus the
// list of strand connections already closed off.  Ports of a crossing are
// encoded 4*crossing + port, counterclockwise: 0=NE, 1=NW, 2=SW, 3=SE; the
// two strands through a crossing join port p to port p^2.
struct TangleBuilder {
    struct Attach {
        int plug = -1;     // port id, when >= 0
        int partner = -1;  // the opposite open end, while no crossing between
    };
    std::array<Attach, 4> ends;
    std::vector<std::pair<int, int>> connections;
    std::vector<int> over_parity;  // per crossing: port parity of the over strand

    TangleBuilder() {
        ends[kNW].partner = kNE;  // 0-tangle: two horizontal strands
        ends[kNE].partner = kNW;
        ends[kSW].partner = kSE;
        ends[kSE].partner = kSW;
    }

    // Wire whatever open end `e` is attached to onto port `port_id`.
    void join_end(int e, int port_id) {
        Attach a = ends[static_cast<size_t>(e)];
        if (a.plug >= 0)
            connections.emplace_back(a.plug, port_id);
        else
            ends[static_cast<size_t>(a.partner)] = {port_id, -1};
    }

    int add_crossing(int over_par) {
        over_parity.push_back(over_par);
        return static_cast<int>(over_parity.size()) - 1;
    }

    // New crossing to the right of the tangle, absorbing ne and se.
    void h_twist(int over_par) {
        int c = add_crossing(over_par);
        join_end(kNE, 4 * c + 1);
        join_end(kSE, 4 * c + 2);
        ends[kNE] = {4 * c + 0, -1};
        ends[kSE] = {4 * c + 3, -1};
    }

    // New crossing below the tangle, absorbing sw and se.
    void v_twist(int over_par) {
        int c = add_crossing(over_par);
        join_end(kSW, 4 * c + 1);
        join_end(kSE, 4 * c + 0);
        ends[kSW] = {4 * c + 2, -1};
        ends[kSE] = {4 * c + 3, -1};
    }
};

// Frozen handedness of the two twist directions (the port parity of the
// strand passing over).  Using the same parity for both makes every positive
// twist vector an alternating diagram whose determinant is the continuant of
// the vector; the knot-determinant tests pin this down.
constexpr int kHorizontalOverParity = 0;
constexpr int kVerticalOverParity = 0;

} // namespace

PlanarDiagram rational_pd(const std::vector<int>& twists) {
    if (twists.empty()) throw std::invalid_argument("rational_pd: empty twist vector");
    for (int a : twists)
        if (a < 1) throw std::invalid_argument("rational_pd: twist counts must be >= 1");

    // The builder needs the vector to end on a horizontal group (odd length)
    // for the top/bottom closure to be the standard one.  Rewrite the tail,
    // keeping the continued fraction's value: (..., x) = (..., x-1, 1) and
    // (..., y, 1) = (..., y+1).
    std::vector<int> groups = twists;
    if (groups.size() % 2 == 0) {
        if (groups.back() == 1) {
            groups.pop_back();
            groups.back() += 1;
        } else {
            groups.back() -= 1;
            groups.push_back(1);
        }
    }

    TangleBuilder t;
    for (size_t g = 0; g < groups.size(); ++g)
        for (int i = 0; i < groups[g]; ++i) {
            if (g % 2 == 0)
                t.h_twist(kHorizontalOverParity);
            else
                t.v_twist(kVerticalOverParity);
        }
    for (const auto& e : t.ends)
        if (e.plug < 0) throw std::logic_error("rational_pd: open end left unplugged");
    // numerator closure: arcs across the top and across the bottom
    t.connections.emplace_back(t.ends[kNW].plug, t.ends[kNE].plug);
    t.connections.emplace_back(t.ends[kSW].plug, t.ends[kSE].plug);

    const int n = static_cast<int>(t.over_parity.size());
    std::vector<int> link(static_cast<size_t>(4 * n), -1);
    for (const auto& [a, b] : t.connections) {
        if (link[static_cast<size_t>(a)] >= 0 || link[static_cast<size_t>(b)] >= 0)
            throw std::logic_error("rational_pd: port wired twice");
        link[static_cast<size_t>(a)] = b;
        link[static_cast<size_t>(b)] = a;
    }

    // Walk the closed strand once, labelling each connection with the next
    // arc number and noting the port through which each crossing is entered.
    std::vector<std::array<int, 4>> port_label(static_cast<size_t>(n), {0, 0, 0, 0});
    std::vector<std::array<int, 2>> entry_port(static_cast<size_t>(n), {-1, -1});
    const int start = 0 * 4 + 2;  // pretend we just exited crossing 0 at port 2
    int exit = start;
    for (int label = 1; label <= 2 * n; ++label) {
        int y = link[static_cast<size_t>(exit)];
        port_label[static_cast<size_t>(exit / 4)][static_cast<size_t>(exit % 4)] = label;
        port_label[static_cast<size_t>(y / 4)][static_cast<size_t>(y % 4)] = label;
        entry_port[static_cast<size_t>(y / 4)][static_cast<size_t>(y % 4 & 1)] = y % 4;
        exit = y ^ 2;
        // returning to the start before every connection is labelled means the
        // closure has a second component
        if (exit == start && label != 2 * n)
            throw InvalidDiagramError(
                "rational_pd: this twist vector closes to a link, not a knot");
    }
    if (exit != start)
        throw InvalidDiagramError("rational_pd: this twist vector closes to a link, not a knot");

    std::vector<Crossing> tuples;
    tuples.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        int u = entry_port[static_cast<size_t>(c)][static_cast<size_t>(t.over_parity[static_cast<size_t>(c)] ^ 1)];
        Crossing cr;
        for (int k = 0; k < 4; ++k)
            cr.arcs[static_cast<size_t>(k)] =
                port_label[static_cast<size_t>(c)][static_cast<size_t>((u + k) & 3)];
        tuples.push_back(cr);
    }
    return PlanarDiagram::from_tuples(std::move(tuples));
}

SymmetricTaitGraph pretzel_theta(int p, int q) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument("pretzel_theta: p must be odd and >= 1");
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("pretzel_theta: q must be even and >= 2");
    SymmetricTaitGraph s(1, 1);  // one region beside the axis, one region on it
    for (int i = 0; i < p; ++i) s.add_left_edge(1, 2, 1);  // mirrored strand crossings
    for (int i = 0; i < q / 2; ++i) s.add_cross_edge(1, 1);  // clasps on the axis
    return s;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

std::vector<TableRecord> parse_table(const std::string& tsv) {
    std::vector<TableRecord> records;
    std::istringstream in(tsv);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        TableRecord r;
        if (!(row >> r.name)) continue;
        std::string constituents, dets, det, extra;
        if (!(row >> constituents >> dets >> det))
            throw ParseError("table line " + std::to_string(lineno) + ": expected 4 columns");
        if (row >> extra)
            throw ParseError("table line " + std::to_string(lineno) + ": trailing text");
        try {
            r.constituents = split_commas(constituents);
            for (const auto& token : split_commas(dets)) r.listed_dets.emplace_back(token);
            r.det = BigInt(det);
        } catch (const std::exception& ex) {
            throw ParseError("table line " + std::to_string(lineno) + ": " + ex.what());
        }
        if (r.constituents.size() != 3)
            throw ParseError("table line " + std::to_string(lineno) +
                             ": expected three constituent knots");
        records.push_back(std::move(r));
    }
    return records;
}

const std::vector<TableRecord>& table_records() {
    static const std::vector<TableRecord> records = parse_table(table_tsv());
    return records;
}

} // namespace thetadet
