#include "minktree/mst.hpp"

#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace minktree;
using namespace minktree::testing;

TEST_CASE("build edges: counts, order, ties") {
    PointSet two;
    two.dim = 2;
    two.points = {{Scalar(0), Scalar(0)}, {Scalar(3), Scalar(4)}};
    auto e2 = buildEdges(two, Norm::l2(2));
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].approx == doctest::Approx(5.0));

    auto square = buildEdges(unitSquareInstance(), Norm::linf(2));
    REQUIRE(square.size() == 6);
    for (const auto& e : square) CHECK(e.weight.rat() == 1);
    auto classes = weightClasses(square);
    REQUIRE(classes.size() == 1);

    PointSet line = collinearInstance();
    auto edges = buildEdges(line, Norm::l1(2));
    REQUIRE(edges.size() == 3);
    CHECK(edges[0].weight.rat() == 1);
    CHECK(edges[1].weight.rat() == 2);
    CHECK(edges[2].weight.rat() == 3);

    PointSet dup;
    dup.dim = 1;
    dup.points = {{Scalar(2)}, {Scalar(2)}};
    CHECK_THROWS_AS(buildEdges(dup, Norm::l1(1)), InvalidInstanceError);
}

TEST_CASE("kruskal on the collinear triple") {
    for (const auto& norm : {Norm::l1(2), Norm::l2(2), Norm::linf(2), Norm::lp(3, 2)}) {
        Tree t = kruskalMst(collinearInstance(), norm);
        CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        CHECK(t.total_length.value() == doctest::Approx(3.0));
    }
}

TEST_CASE("kruskal: l1 cross has the unique star MST, length 4") {
    PointSet cross = crossInstance();
    Norm l1 = Norm::l1(2);
    Tree t = kruskalMst(cross, l1);
    CHECK(t.total_length.rat() == 4);
    CHECK(t.maxDegree() == 4);
    CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    // oracle: all 5^3 spanning trees, exactly one optimum
    auto all = allMinTreesByBruteForce(cross, l1);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == t.edges);
}

TEST_CASE("kruskal: hexagon plus center has MST weight 6") {
    PointSet hex = regularStarInstance(6);
    Norm l2 = Norm::l2(2);
    Tree t = kruskalMst(hex, l2);
    CHECK(t.total_length.value() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(bruteForceMstWeight(hex, l2).value() == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("tie-break orders give different but equally light trees") {
    PointSet square = unitSquareInstance();
    Norm linf = Norm::linf(2);
    Tree lex = kruskalMst(square, linf, TieBreak::lexicographic);
    Tree rev = kruskalMst(square, linf, TieBreak::reverse_lexicographic);
    CHECK(lex.total_length.rat() == rev.total_length.rat());
    CHECK(lex.edges != rev.edges);
    // determinism
    CHECK(kruskalMst(square, linf).edges == lex.edges);
}

TEST_CASE("enumerate: unit square under linf has exactly 16 MSTs") {
    auto result = enumerateMsts(unitSquareInstance(), Norm::linf(2));
    CHECK(result.complete);
    REQUIRE(result.trees.size() == 16);
    // matches the independent brute-force oracle tree for tree
    auto oracle = allMinTreesByBruteForce(unitSquareInstance(), Norm::linf(2));
    REQUIRE(oracle.size() == 16);
    for (size_t i = 0; i < 16; ++i) CHECK(result.trees[i].edges == oracle[i]);
}

TEST_CASE("enumerate: cross and two-point instances") {
    auto cross = enumerateMsts(crossInstance(), Norm::l1(2));
    CHECK(cross.complete);
    CHECK(cross.trees.size() == 1);

    PointSet two;
    two.dim = 2;
    two.points = {{Scalar(0), Scalar(0)}, {Scalar(2), Scalar(1)}};
    auto r = enumerateMsts(two, Norm::l2(2));
    CHECK(r.complete);
    REQUIRE(r.trees.size() == 1);
    CHECK(r.trees[0].edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("enumerate matches the oracle on random exact instances") {
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + rng.uniformInt(4);  // 3..6
        Norm norm = trial % 2 == 0 ? Norm::l1(2) : Norm::linf(2);
        PointSet s = randomRationalInstance(n, 2, rng);
        auto enumerated = enumerateMsts(s, norm);
        REQUIRE(enumerated.complete);
        auto oracle = allMinTreesByBruteForce(s, norm);
        REQUIRE(enumerated.trees.size() == oracle.size());
        for (size_t i = 0; i < oracle.size(); ++i) CHECK(enumerated.trees[i].edges == oracle[i]);
    }
}

TEST_CASE("enumerate handles floating ties: the hexagon wheel has 320 MSTs") {
    // spokes and rim edges of the regular hexagon all have length 1 up to
    // double roundoff, so the MSTs are exactly the spanning trees of the
    // wheel graph
    PointSet hex = regularStarInstance(6);
    Norm l2 = Norm::l2(2);
    auto enumerated = enumerateMsts(hex, l2);
    REQUIRE(enumerated.complete);
    auto oracle = allMinTreesByBruteForce(hex, l2);
    CHECK(enumerated.trees.size() == oracle.size());
    CHECK(enumerated.trees.size() == 320);
}

TEST_CASE("enumerate on the 2x3 grid: MSTs are the grid-graph spanning trees") {
    PointSet grid;
    grid.dim = 2;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 2; ++y) grid.points.push_back({Scalar(x), Scalar(y)});
    auto result = enumerateMsts(grid, Norm::l1(2));
    REQUIRE(result.complete);
    CHECK(result.trees.size() == 15);
    auto oracle = allMinTreesByBruteForce(grid, Norm::l1(2));
    REQUIRE(oracle.size() == result.trees.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(result.trees[i].edges == oracle[i]);
}

TEST_CASE("enumerate agrees with the matrix-tree count when one weight class spans") {
    // On these instances all minimum-class edges already connect everything,
    // so the MSTs are exactly the spanning trees of that subgraph and the
    // Kirchhoff determinant is an independent count oracle.
    auto minClassEdges = [](const PointSet& s, const Norm& norm) {
        auto edges = buildEdges(s, norm);
        auto classes = weightClasses(edges);
        EdgeList out;
        for (size_t k = classes[0].first; k < classes[0].second; ++k)
            out.emplace_back(edges[k].i, edges[k].j);
        return out;
    };

    PointSet grid34;
    grid34.dim = 2;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 3; ++y) grid34.points.push_back({Scalar(x), Scalar(y)});
    auto r34 = enumerateMsts(grid34, Norm::l1(2), 5000);
    REQUIRE(r34.complete);
    CHECK(r34.trees.size() == 2415);  // spanning trees of the 3x4 grid graph
    CHECK(spanningTreeCountKirchhoff(12, minClassEdges(grid34, Norm::l1(2))) == 2415);

    PointSet hex = regularStarInstance(6);
    CHECK(spanningTreeCountKirchhoff(7, minClassEdges(hex, Norm::l2(2))) == 320);

    CHECK(spanningTreeCountKirchhoff(4, minClassEdges(unitSquareInstance(), Norm::linf(2))) == 16);
}

TEST_CASE("enumerated trees are pairwise distinct and equally long") {
    Rng rng(1717);
    for (int trial = 0; trial < 30; ++trial) {
        PointSet s = randomRationalInstance(6, 2, rng);
        Norm norm = trial % 2 == 0 ? Norm::linf(2) : Norm::l1(2);
        auto r = enumerateMsts(s, norm);
        std::set<std::vector<std::pair<int, int>>> seen;
        for (const auto& t : r.trees) {
            CHECK(seen.insert(t.edges).second);
            CHECK(t.total_length.rat() == r.trees[0].total_length.rat());
        }
    }
}

TEST_CASE("enumeration cap truncates with a flag") {
    auto r = enumerateMsts(unitSquareInstance(), Norm::linf(2), 5);
    CHECK_FALSE(r.complete);
    CHECK(r.trees.size() == 5);
    auto exact = enumerateMsts(unitSquareInstance(), Norm::linf(2), 16);
    CHECK(exact.complete);
    CHECK(exact.trees.size() == 16);
}

TEST_CASE("degree report examples") {
    auto square = degreeReport(unitSquareInstance(), Norm::linf(2));
    CHECK(square.mst_count == 16);
    CHECK(square.delta_minus == 2);
    CHECK(square.delta_plus == 3);
    CHECK(square.enumeration_complete);

    auto cross = degreeReport(crossInstance(), Norm::l1(2));
    CHECK(cross.mst_count == 1);
    CHECK(cross.delta_minus == 4);
    CHECK(cross.delta_plus == 4);

    // pentagon star: unique MST with center degree 5
    PointSet pent = regularStarInstance(5);
    auto r = degreeReport(pent, Norm::l2(2));
    CHECK(r.mst_count == 1);
    CHECK(r.delta_minus == 5);
    CHECK(r.delta_plus == 5);
}

TEST_CASE("incident angle sizes on MSTs stay above 1") {
    Rng rng(31337);
    Norm l2 = Norm::l2(2);
    for (int trial = 0; trial < 100; ++trial) {
        PointSet s = randomFloatInstance(3 + rng.uniformInt(6), 2, rng);
        Tree t = kruskalMst(s, l2);
        auto report = checkIncidentAngles(t, s, l2);
        CHECK(report.violations.empty());
        CHECK(report.min_size >= 1.0 - 1e-9);
    }
}

TEST_CASE("incident angle checker flags a deliberately bad tree") {
    PointSet line = collinearInstance();
    Tree bad = makeTree(line, Norm::l2(2), {{0, 2}, {1, 2}});
    auto report = checkIncidentAngles(bad, line, Norm::l2(2));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.min_size == doctest::Approx(0.0));
    CHECK(report.violations[0].b == 2);
}

TEST_CASE("hexagon star: minimum incident angle size is exactly 1") {
    PointSet hex = regularStarInstance(6);
    std::vector<std::pair<int, int>> spokes;
    for (int i = 1; i <= 6; ++i) spokes.emplace_back(0, i);
    Tree star = makeTree(hex, Norm::l2(2), spokes);
    auto report = checkIncidentAngles(star, hex, Norm::l2(2));
    CHECK(report.violations.empty());
    CHECK(report.min_size == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("brute force weight oracle") {
    PointSet two;
    two.dim = 2;
    two.points = {{Scalar(0), Scalar(0)}, {Scalar(3), Scalar(4)}};
    CHECK(bruteForceMstWeight(two, Norm::l2(2)).value() == doctest::Approx(5.0));

    Scalar square = bruteForceMstWeight(unitSquareInstance(), Norm::linf(2));
    CHECK(square.rat() == 3);

    Rng rng(1);
    PointSet big = randomRationalInstance(10, 2, rng);
    CHECK_THROWS_AS(bruteForceMstWeight(big, Norm::l1(2)), std::invalid_argument);
}

TEST_CASE("kruskal equals the brute-force oracle on random instances") {
    Rng rng(2025);
    const std::vector<Norm> norms = {Norm::l1(2), Norm::l2(2), Norm::linf(2), Norm::lp(3, 2)};
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + rng.uniformInt(6);  // 3..8
        const Norm& norm = norms[trial % norms.size()];
        PointSet s = randomRationalInstance(n, 2, rng);
        Scalar fast = kruskalMst(s, norm).total_length;
        Scalar slow = bruteForceMstWeight(s, norm);
        if (fast.exact() && slow.exact())
            CHECK(fast.rat() == slow.rat());
        else
            CHECK(fast.value() == doctest::Approx(slow.value()).epsilon(1e-9));
    }
}

TEST_CASE("makeTree validates its edge list") {
    PointSet line = collinearInstance();
    CHECK_THROWS_AS(makeTree(line, Norm::l2(2), {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(makeTree(line, Norm::l2(2), {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(makeTree(line, Norm::l2(2), {{0, 1}, {3, 4}}), std::invalid_argument);
}
