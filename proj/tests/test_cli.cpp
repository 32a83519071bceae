#include "doctest.h"

#include <string>
#include <vector>

#include "helpers.hpp"
#include "thetadet/cli.hpp"
#include "thetadet/families.hpp"
#include "thetadet/planar_diagram.hpp"

using thetadet::CommandResult;
using thetadet::run_command;

namespace {

const char* kTrefoil = "X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)";

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("det-knot text output is stable") {
    CommandResult r = run_command({"det-knot", kTrefoil});
    CHECK(r.status == 0);
    CHECK(r.out == "det = 3\ncrossings = 3, faces = 5; both checkerboard shadings agree\n");
}

TEST_CASE("det-knot structured output is stable") {
    CommandResult r = run_command({"--output", "structured", "det-knot", kTrefoil});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "command=det-knot\n"
          "crossings=3\n"
          "faces=5\n"
          "tau_shaded=3\n"
          "tau_dual=3\n"
          "det=3\n");
}

TEST_CASE("det-knot cross-checks") {
    CommandResult r = run_command({"det-knot", kTrefoil, "--oracle", "--delete-vertex", "0"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "pivot 0: ok\n"));
    CHECK(contains(r.out, "oracle: ok\n"));

    r = run_command({"--output", "structured", "det-knot", kTrefoil, "--oracle"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "oracle=ok\n"));

    r = run_command({"det-knot", kTrefoil, "--delete-vertex", "99"});
    CHECK(r.status == 2);
    CHECK(contains(r.out, "out of range"));
}

TEST_CASE("det-knot reads fixture files") {
    CommandResult r = run_command({"det-knot", testutil::fixture_path("4_1.pd")});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "det = 5\n"));

    r = run_command({"det-knot", testutil::fixture_path("0_1.pd")});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "det = 1\n"));

    // the empty diagram has no graphs for the oracle to check
    r = run_command({"det-knot", testutil::fixture_path("0_1.pd"), "--oracle"});
    CHECK(r.status == 2);
}

TEST_CASE("det-knot input failures") {
    CommandResult r = run_command({"det-knot", "does_not_exist.pd"});
    CHECK(r.status == 2);
    CHECK(contains(r.out, "error: cannot open file"));

    r = run_command({"det-knot", "X(1,2,3)"});
    CHECK(r.status == 2);

    r = run_command({"det-knot", "X(1,4,2,3), X(3,2,4,1)"});
    CHECK(r.status == 2);
    CHECK(contains(r.out, "error:"));
}

TEST_CASE("det-knot oracle guard trips on a large diagram") {
    std::string big = thetadet::pd_to_text(thetadet::torus_pd(25));
    CommandResult plain = run_command({"det-knot", big});
    CHECK(plain.status == 0);
    CHECK(contains(plain.out, "det = 25\n"));
    CommandResult guarded = run_command({"det-knot", big, "--oracle"});
    CHECK(guarded.status == 4);
    CHECK(contains(guarded.out, "error:"));
}

TEST_CASE("det-theta on the bundled fixture") {
    CommandResult r = run_command({"det-theta", testutil::fixture_path("9_48.sym")});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "det(theta) = 27 (odd)\n"
          "constituents: det_ab = 3, det_bc = 9; product ok\n"
          "splitting: 2^0 * -9 * 3 = -27 vs tau = -27; ok\n");

    r = run_command({"--output", "structured", "det-theta", testutil::fixture_path("9_48.sym"),
                     "--oracle"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "command=det-theta\n"));
    CHECK(contains(r.out, "det_full=27\n"));
    CHECK(contains(r.out, "det_ab=3\n"));
    CHECK(contains(r.out, "det_bc=9\n"));
    CHECK(contains(r.out, "zy_ok=1\n"));
    CHECK(contains(r.out, "product_ok=1\n"));
    CHECK(contains(r.out, "det_odd=1\n"));
    CHECK(contains(r.out, "oracle=ok\n"));
}

TEST_CASE("det-theta accepts inline directives and reports disagreements") {
    CommandResult r = run_command({"det-theta", "left=1\naxis=1\nledge 1 2 1\nxedge 1 1\n"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "det(theta) = 3 (odd)\n"));

    // a triangle axis: splitting holds but the constituent product fails
    r = run_command({"det-theta", "left=0\naxis=3\naedge 1 2 1\naedge 2 3 1\naedge 1 3 1\n"});
    CHECK(r.status == 3);
    CHECK(contains(r.out, "product MISMATCH"));

    r = run_command({"det-theta", "left=1\naxis=1\n"});
    CHECK(r.status == 2);  // disconnected: structurally invalid

    r = run_command({"det-theta", "left=1\naxis=1\nwedge 1 2\n"});
    CHECK(r.status == 2);
}

TEST_CASE("pretzel command") {
    CommandResult r = run_command({"pretzel", "3", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "det = 15 = 3 x 5; closed form 3^2+3*2 = 15 OK\n");

    r = run_command({"--output", "structured", "pretzel", "7", "6"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "command=pretzel\n"));
    CHECK(contains(r.out, "p=7\n"));
    CHECK(contains(r.out, "q=6\n"));
    CHECK(contains(r.out, "det_full=91\n"));
    CHECK(contains(r.out, "closed_form=91\n"));
    CHECK(contains(r.out, "closed_form_ok=1\n"));
    CHECK(contains(r.out, "factors_ok=1\n"));

    CHECK(run_command({"pretzel", "2", "2"}).status == 2);
    CHECK(run_command({"pretzel", "3", "5"}).status == 2);
    CHECK(run_command({"pretzel", "3"}).status == 2);
}

TEST_CASE("verify-table command") {
    CommandResult r = run_command({"verify-table"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "table check: 90/90 rows have product of constituent determinants equal to the "
          "theta determinant\n");

    r = run_command({"--output", "structured", "verify-table"});
    CHECK(r.status == 0);
    CHECK(r.out == "command=verify-table\nrows=90\nfailures=0\n");
}

TEST_CASE("oracle-check command") {
    CommandResult r = run_command({"oracle-check", "--count", "8", "--seed", "11"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "graph tree weights vs oracle: 8/8 exact\n"));
    CHECK(contains(r.out, "symmetric splitting via oracle: 3/3 exact\n"));

    r = run_command({"--output", "structured", "oracle-check", "--count", "4", "--seed", "5",
                     "--max-vertices", "6"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "command=oracle-check\n"));
    CHECK(contains(r.out, "seed=5\n"));
    CHECK(contains(r.out, "max_vertices=6\n"));
    CHECK(contains(r.out, "graph_passes=4\n"));
    CHECK(contains(r.out, "symmetric_passes=2\n"));

    CHECK(run_command({"oracle-check", "--count", "0"}).status == 2);
    CHECK(run_command({"oracle-check", "--max-vertices", "1"}).status == 2);
}

TEST_CASE("top-level argument handling") {
    CHECK(run_command({}).status == 2);
    CHECK(run_command({"bogus"}).status == 2);
    CHECK(run_command({"--output", "xml", "verify-table"}).status == 2);

    CommandResult help = run_command({"--help"});
    CHECK(help.status == 0);
    CHECK(contains(help.out, "det-knot"));
    CHECK(contains(help.out, "det-theta"));
    CHECK(contains(help.out, "pretzel"));
    CHECK(contains(help.out, "verify-table"));
    CHECK(contains(help.out, "oracle-check"));
}
