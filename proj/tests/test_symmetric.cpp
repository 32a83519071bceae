#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "thetadet/errors.hpp"
#include "thetadet/random_graphs.hpp"
#include "thetadet/symmetric.hpp"

using thetadet::BigInt;
using thetadet::Dyadic;
using thetadet::SignedGraph;
using thetadet::SymmetricTaitGraph;

namespace {

Dyadic splitting_value(const SymmetricTaitGraph& s, const Dyadic& left, const Dyadic& right) {
    return Dyadic(BigInt(1) << (s.axis_count() - 1)) * left * right;
}

} // namespace

TEST_CASE("construction and validation") {
    SymmetricTaitGraph s(2, 1);
    CHECK(s.left_count() == 2);
    CHECK(s.axis_count() == 1);
    CHECK_NOTHROW(s.add_left_edge(1, 2, 1));
    CHECK_NOTHROW(s.add_left_edge(1, 3, -1));   // left-to-axis spoke
    CHECK_THROWS_AS(s.add_axis_edge(1, 1, 1), std::invalid_argument);   // axis self-loop
    CHECK_THROWS_AS(s.add_left_edge(1, 1, 1), std::invalid_argument);   // self-loop
    CHECK_THROWS_AS(s.add_left_edge(3, 3, 1), std::invalid_argument);   // no left endpoint
    CHECK_THROWS_AS(s.add_left_edge(1, 4, 1), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(s.add_left_edge(1, 2, 2), std::invalid_argument);   // bad sign
    CHECK_THROWS_AS(s.add_cross_edge(3, 1), std::invalid_argument);     // not a left vertex
    CHECK_THROWS_AS(SymmetricTaitGraph(1, 0), std::invalid_argument);   // axis required
    CHECK_THROWS_AS(SymmetricTaitGraph(-1, 1), std::invalid_argument);
}

TEST_CASE("full graph layout") {
    SymmetricTaitGraph s(1, 1);
    s.add_left_edge(1, 2, 1);  // spoke, mirrored
    s.add_cross_edge(1, -1);
    SignedGraph g = thetadet::full_graph(s);
    CHECK(g.vertex_count() == 3);  // left 0, axis 1, right 2
    REQUIRE(g.edge_count() == 3);
    // triangle: (0,1,+1), (2,1,+1), (0,2,-1)
    Dyadic tau = thetadet::tree_weight(g);
    CHECK(tau == Dyadic(-1));  // trees: +1 -1 -1

    // disconnected symmetric data is rejected by full_graph
    SymmetricTaitGraph lonely(1, 1);
    CHECK_THROWS_AS(thetadet::full_graph(lonely), thetadet::InvalidDiagramError);
}

TEST_CASE("halves of the trivial theta curve") {
    // no left regions, a two-vertex axis joined by one crossing
    SymmetricTaitGraph s(0, 2);
    s.add_axis_edge(1, 2, 1);
    thetadet::ThetaReport r = thetadet::theta_report(s);
    CHECK(r.tau_full == Dyadic(1));
    CHECK(r.tau_left == Dyadic(1));            // hub alone
    CHECK(r.tau_right == Dyadic::half());      // halved axis edge
    CHECK(r.zy_value == Dyadic(1));            // 2^1 * 1 * 1/2
    CHECK(r.zy_ok);
    CHECK(r.det_ab == 1);
    CHECK(r.det_bc == 1);
    CHECK(r.det_full == 1);
    CHECK(r.product_ok);
    CHECK(r.det_odd);
    CHECK(thetadet::theta_determinant(s) == 1);
}

TEST_CASE("one spoke plus one clasp") {
    SymmetricTaitGraph s(1, 1);
    s.add_left_edge(1, 2, 1);
    s.add_cross_edge(1, 1);
    thetadet::ThetaReport r = thetadet::theta_report(s);
    CHECK(r.tau_full == Dyadic(3));   // unit triangle
    CHECK(r.tau_right == Dyadic(1));  // single spoke
    CHECK(r.tau_left == Dyadic(3));   // spoke + doubled clasp
    CHECK(r.zy_ok);
    CHECK(r.det_ab == 1);
    CHECK(r.det_bc == 3);
    CHECK(r.det_full == 3);
    CHECK(r.product_ok);
    CHECK(thetadet::theta_determinant(s) == 3);
}

TEST_CASE("halves follow the construction rules") {
    SymmetricTaitGraph s(2, 2);
    s.add_left_edge(1, 2, 1);
    s.add_left_edge(1, 3, -1);   // spoke to axis vertex 1
    s.add_left_edge(2, 4, 1);    // spoke to axis vertex 2
    s.add_axis_edge(1, 2, -1);
    s.add_cross_edge(1, 1);

    SignedGraph right = thetadet::right_half(s);
    CHECK(right.vertex_count() == 4);  // axis pair + right pair
    // axis edge halved, spokes at unit weight, no cross edges
    int halved = 0;
    for (int e = 0; e < right.edge_count(); ++e)
        if (right.edge(e).weight.abs() == Dyadic::half()) ++halved;
    CHECK(halved == 1);
    CHECK(right.edge_count() == 4);

    SignedGraph left = thetadet::left_half(s);
    CHECK(left.vertex_count() == 3);  // two left vertices + hub
    int doubled = 0;
    for (int e = 0; e < left.edge_count(); ++e)
        if (left.edge(e).weight.abs() == Dyadic(2)) ++doubled;
    CHECK(doubled == 1);  // the cross edge
    CHECK(left.edge_count() == 4);    // axis edge collapsed into the hub, not kept

    SignedGraph ab = thetadet::constituent_ab(s);
    CHECK(ab.vertex_count() == 5);  // one fresh vertex per axis edge
    for (int e = 0; e < ab.edge_count(); ++e)
        CHECK(ab.edge(e).weight.abs() == Dyadic(1));

    SignedGraph bc = thetadet::constituent_bc(s);
    CHECK(bc.vertex_count() == 3);
    CHECK(bc.edge_count() == 5);  // doubled cross edge spelled as two units
    for (int e = 0; e < bc.edge_count(); ++e)
        CHECK(bc.edge(e).weight.abs() == Dyadic(1));
}

TEST_CASE("subdivision consistency: |tau(ab)| = 2^(m-1) |tau(right)|") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 100; ++i) {
        SymmetricTaitGraph s = thetadet::random_symmetric(rng);
        Dyadic right = thetadet::tree_weight(thetadet::right_half(s));
        Dyadic ab = thetadet::tree_weight(thetadet::constituent_ab(s));
        Dyadic scale(BigInt(1) << (s.axis_count() - 1));
        CHECK(ab.abs() == (scale * right).abs());
        // and the parallel split never changes tau at all
        Dyadic left = thetadet::tree_weight(thetadet::left_half(s));
        Dyadic bc = thetadet::tree_weight(thetadet::constituent_bc(s));
        CHECK(bc == left);
    }
}

TEST_CASE("splitting identity on random symmetric graphs, all weights via oracle") {
    std::mt19937_64 rng(424242);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        SymmetricTaitGraph s = thetadet::random_symmetric(rng);
        Dyadic full = thetadet::tree_weight_oracle(thetadet::full_graph(s));
        Dyadic left = thetadet::tree_weight_oracle(thetadet::left_half(s));
        Dyadic right = thetadet::tree_weight_oracle(thetadet::right_half(s));
        CHECK(full == splitting_value(s, left, right));  // exact signed equality
        CHECK(full == thetadet::tree_weight(thetadet::full_graph(s)));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("constituent product on random symmetric graphs") {
    std::mt19937_64 rng(31415926);
    for (int i = 0; i < 40; ++i) {
        SymmetricTaitGraph s = thetadet::random_symmetric(rng);
        thetadet::ThetaReport r = thetadet::theta_report(s);
        CHECK(r.zy_ok);
        CHECK(r.product_ok);
        CHECK(r.det_ab * r.det_bc == r.det_full);
    }
}

TEST_CASE("9_48 fixture") {
    SymmetricTaitGraph s = thetadet::parse_sym(testutil::read_fixture("9_48.sym"));
    CHECK(s.left_count() == 2);
    CHECK(s.axis_count() == 1);
    thetadet::ThetaReport r = thetadet::theta_report(s);
    CHECK(r.det_full == 27);
    CHECK(r.det_ab == 3);
    CHECK(r.det_bc == 9);
    CHECK(r.zy_ok);
    CHECK(r.product_ok);
    CHECK(r.det_odd);
    CHECK(thetadet::theta_determinant(s) == 27);
}

TEST_CASE("a non-path axis breaks the constituent product but not the splitting") {
    // three axis vertices wired in a triangle: not a 4-plat axis
    SymmetricTaitGraph s(0, 3);
    s.add_axis_edge(1, 2, 1);
    s.add_axis_edge(2, 3, 1);
    s.add_axis_edge(1, 3, 1);
    thetadet::ThetaReport r = thetadet::theta_report(s);
    CHECK(r.zy_ok);           // the splitting holds for any axis structure
    CHECK(!r.product_ok);     // 6 * 1 != 3
    CHECK(r.det_full == 3);
    CHECK(r.det_ab == 6);
    CHECK_THROWS_AS(thetadet::theta_determinant(s), thetadet::DisagreementError);
}

TEST_CASE("sym text round trip") {
    SymmetricTaitGraph s(2, 2);
    s.add_left_edge(1, 2, 1);
    s.add_left_edge(1, 3, -1);
    s.add_axis_edge(1, 2, 1);
    s.add_cross_edge(2, -1);
    std::string text = thetadet::sym_to_text(s);
    SymmetricTaitGraph back = thetadet::parse_sym(text);
    CHECK(back.left_count() == 2);
    CHECK(back.axis_count() == 2);
    REQUIRE(back.left_edges().size() == 2);
    CHECK(back.left_edges()[1].v == 3);
    CHECK(back.left_edges()[1].sign == -1);
    REQUIRE(back.axis_edges().size() == 1);
    REQUIRE(back.cross_edges().size() == 1);
    CHECK(back.cross_edges()[0].vertex == 2);
}

TEST_CASE("sym parser rejects malformed text") {
    using thetadet::ParseError;
    CHECK_THROWS_AS(thetadet::parse_sym("ledge 1 2 1\n"), ParseError);        // no header
    CHECK_THROWS_AS(thetadet::parse_sym("left=1\n"), ParseError);             // half a header
    CHECK_THROWS_AS(thetadet::parse_sym("left=1\naxis=1\nledge 1 2\n"), ParseError);
    CHECK_THROWS_AS(thetadet::parse_sym("left=1\naxis=1\nledge 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(thetadet::parse_sym("left=1\naxis=1\nxedge 2 1\n"), ParseError);
    CHECK_THROWS_AS(thetadet::parse_sym("left=1\naxis=1\nwedge 1 2 1\n"), ParseError);
    CHECK_NOTHROW(thetadet::parse_sym("# comment\nleft=0\naxis=1\n"));
}
