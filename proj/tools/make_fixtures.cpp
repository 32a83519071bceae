// Regenerates the bundled fixture files.  Every diagram is validated against
// its expected determinant before anything is written, so a bad generator
// change fails here instead of poisoning the test data.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "thetadet/families.hpp"
#include "thetadet/planar_diagram.hpp"
#include "thetadet/symmetric.hpp"

using namespace thetadet;

namespace {

struct KnotSpec {
    std::string name;
    std::vector<int> twists;  // odd-length positive twist vector
    int det;
};

// Twist vectors chosen with odd length (the assembly alternates horizontal
// and vertical groups and must end horizontally); determinants are the
// continuants of the vectors.
const std::vector<KnotSpec> kKnots = {
    {"3_1", {3}, 3},           {"4_1", {2, 1, 1}, 5},        {"5_1", {5}, 5},
    {"5_2", {3, 1, 1}, 7},     {"6_1", {4, 1, 1}, 9},        {"6_2", {3, 1, 2}, 11},
    {"6_3", {2, 1, 1, 1, 1}, 13}, {"7_1", {7}, 7},           {"7_2", {5, 1, 1}, 11},
    {"7_3", {4, 2, 1}, 13},    {"7_4", {3, 1, 3}, 15},       {"7_5", {3, 2, 2}, 17},
    {"7_6", {2, 2, 1, 1, 1}, 19}, {"7_7", {2, 1, 1, 1, 2}, 21},
};

int failures = 0;

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        ++failures;
        return;
    }
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

std::string twists_str(const std::vector<int>& twists) {
    std::ostringstream s;
    for (size_t i = 0; i < twists.size(); ++i) s << (i ? "," : "") << twists[i];
    return s.str();
}

void check_knot_det(const PlanarDiagram& d, int expected, const std::string& what) {
    BigInt det = knot_determinant(d);
    if (det != expected) {
        std::cerr << what << ": determinant " << det << " != expected " << expected << "\n";
        ++failures;
    }
}

void check_theta(const SymmetricTaitGraph& s, int expected, const std::string& what) {
    BigInt det = theta_determinant(s);
    if (det != expected) {
        std::cerr << what << ": determinant " << det << " != expected " << expected << "\n";
        ++failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);

    write_file(dir / "0_1.pd", "# 0-crossing unknot; determinant 1\n");

    PlanarDiagram kink = add_kink(PlanarDiagram(), 1, 1);
    check_knot_det(kink, 1, "0_1_kinked");
    write_file(dir / "0_1_kinked.pd",
               "# unknot with one positive kink; determinant 1\n" + pd_to_text(kink));

    PlanarDiagram two_kinks = add_kink(add_kink(PlanarDiagram(), 1, 1), 2, -1);
    check_knot_det(two_kinks, 1, "0_1_two_kinks");
    write_file(dir / "0_1_two_kinks.pd",
               "# unknot with two kinks; determinant 1\n" + pd_to_text(two_kinks));

    for (const auto& spec : kKnots) {
        PlanarDiagram d = rational_pd(spec.twists);
        check_knot_det(d, spec.det, spec.name);
        std::ostringstream head;
        head << "# alternating 4-plat, twist vector (" << twists_str(spec.twists)
             << "): knot " << spec.name << ", determinant " << spec.det << "\n";
        write_file(dir / (spec.name + ".pd"), head.str() + pd_to_text(d));

        PlanarDiagram kinked = add_kink(d, 1, 1);
        check_knot_det(kinked, spec.det, spec.name + "_kinked");
        write_file(dir / (spec.name + "_kinked.pd"),
                   "# " + spec.name + " with an extra kink on arc 1; determinant " +
                       std::to_string(spec.det) + "\n" +
                       pd_to_text(kinked));
    }

    for (auto [p, q] : {std::pair{3, 2}, std::pair{7, 6}}) {
        SymmetricTaitGraph s = pretzel_theta(p, q);
        int det = p * p + p * q;
        std::string name = "pretzel_" + std::to_string(p) + "_" + std::to_string(q);
        check_theta(s, det, name);
        std::ostringstream head;
        head << "# pretzel theta-curve, p=" << p << " strand crossings, q=" << q
             << " axis crossings; determinant " << det << "\n";
        write_file(dir / (name + ".sym"), head.str() + sym_to_text(s));
    }

    // Symmetric diagram of the strongly invertible knot 9_48: two regions per
    // half, one axis region; constituent determinants 3 and 9, product 27.
    SymmetricTaitGraph nine48(2, 1);
    nine48.add_left_edge(1, 3, 1);
    nine48.add_left_edge(2, 3, 1);
    nine48.add_left_edge(1, 2, 1);
    nine48.add_cross_edge(1, 1);
    nine48.add_cross_edge(2, -1);
    nine48.add_cross_edge(2, -1);
    check_theta(nine48, 27, "9_48");
    write_file(dir / "9_48.sym",
               "# theta-curve of the strongly invertible knot 9_48; determinant 27,\n"
               "# constituent determinants 3 and 9\n" +
                   sym_to_text(nine48));

    // Planar-dual counterexample: tree weights 11 vs 6 once weights leave +-1.
    write_file(dir / "triangle_123.graph",
               "# triangle with weights 1,2,3: tree weight 11, but its planar dual\n"
               "# (three parallel edges) has tree weight 6\n"
               "vertices=3\n"
               "edge 1 2 1\n"
               "edge 2 3 2\n"
               "edge 1 3 3\n");

    if (failures > 0) {
        std::cerr << failures << " fixture checks failed; files may be inconsistent\n";
        return 1;
    }
    std::cout << "all fixtures validated\n";
    return 0;
}
