#include "helpers.hpp"

#include "levi/errors.hpp"
#include "levi/levi.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace levi;
using levi::testing::three_lines;
using levi::testing::two_lines;

namespace {

bool has_violation(const ValidationReport& r, const std::string& kind) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

Arrangement with_labels(const Arrangement& arr, std::vector<CurveId> labels) {
    return Arrangement(arr.map(), std::move(labels));
}

}  // namespace

TEST(Arrangement, ThreeLinesValidate) {
    const auto arr = three_lines();
    const auto r = validate(arr);
    ASSERT_TRUE(r.ok);
    EXPECT_TRUE(r.pairs_ok());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) EXPECT_EQ(r.pair_crossings[a][b], a == b ? 0 : 1);
    const auto t = cells(arr.map());
    EXPECT_EQ(t.vertices.size(), 3u);
    EXPECT_EQ(t.edges.size(), 6u);
    EXPECT_EQ(t.faces.size(), 4u);
}

TEST(Arrangement, TwoLinesValidate) {
    const auto r = validate(two_lines());
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.pair_crossings[0][1], 1);
}

TEST(Arrangement, OneLineQuotient) {
    const auto arr = one_line_arrangement();
    EXPECT_TRUE(validate(arr).ok);
    const auto t = cells(arr.map());
    EXPECT_EQ(t.quotient_euler(), 1);
    EXPECT_EQ(t.vertices.size() + t.edges.size() + t.faces.size(), 3u);
}

TEST(Arrangement, SwappedLabelsDisconnectCurve) {
    const auto arr = three_lines();
    auto labels = arr.dart_curves();
    const auto& m = arr.map();
    Dart e1 = kNoDart, e2 = kNoDart;
    for (Dart d = 0; d < m.size(); ++d) {
        if (labels[d] == 1 && e1 == kNoDart) e1 = d;
        if (labels[d] == 2 && e2 == kNoDart) e2 = d;
    }
    for (Dart d : {e1, m.alpha(e1), m.tau(e1), m.alpha(m.tau(e1))}) labels[d] = 2;
    for (Dart d : {e2, m.alpha(e2), m.tau(e2), m.alpha(m.tau(e2))}) labels[d] = 1;
    const auto r = validate(with_labels(arr, labels));
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(has_violation(r, "curve not a single closed walk"));
}

TEST(Arrangement, CrossingCountOnMergedLabels) {
    // folding curves 1..3 of a 4-line arrangement into one curve makes it meet curve 0 three times
    const auto arr = enumerate_simple(4).front();
    auto labels = arr.dart_curves();
    for (auto& c : labels) c = c == 0 ? 0 : 1;
    const auto broken = with_labels(arr, labels);
    EXPECT_EQ(crossing_count(broken, 0, 1), 3);
    EXPECT_FALSE(validate(broken).ok);
}

TEST(Arrangement, CrossingCountPairs) {
    const auto arr = three_lines();
    EXPECT_EQ(crossing_count(arr, 0, 2), 1);
    EXPECT_THROW(crossing_count(arr, 1, 1), SameCurve);
}

TEST(Arrangement, CurvesThroughCells) {
    const auto arr = three_lines();
    for (const auto& f : cells(arr.map()).faces) EXPECT_TRUE(curves_through(arr, f).empty());
    for (const auto& e : cells(arr.map()).edges)
        EXPECT_EQ(curves_through(arr, e), std::set<CurveId>{arr.curve_of_edge(e)});
    for (const auto& v : cells(arr.map()).vertices) EXPECT_EQ(curves_through(arr, v).size(), 2u);
}

TEST(Arrangement, SharedCurve) {
    const auto arr = three_lines();
    const auto t = cells(arr.map());
    EXPECT_FALSE(shared_curve(arr, t.faces[0], t.faces[1]).has_value());
    const auto v = t.vertices[0];
    const auto through = curves_through(arr, v);
    const CurveId c = *through.rbegin();
    const auto e = *std::find_if(t.edges.begin(), t.edges.end(), [&](const CellRef& x) { return arr.curve_of_edge(x) == c; });
    ASSERT_TRUE(shared_curve(arr, v, e).has_value());
    EXPECT_EQ(*shared_curve(arr, v, e), c);
    EXPECT_TRUE(shared_curve(arr, v, v).has_value());
}

TEST(Arrangement, DualGraphSizes) {
    const auto g2 = dual_graph(two_lines());
    EXPECT_EQ(g2.nodes.size(), 2u);
    EXPECT_EQ(g2.links.size(), 2u);
    const auto g3 = dual_graph(three_lines());
    EXPECT_EQ(g3.nodes.size(), 4u);
    EXPECT_EQ(g3.links.size(), 6u);
    const auto g1 = dual_graph(one_line_arrangement());
    ASSERT_EQ(g1.nodes.size(), 1u);
    ASSERT_EQ(g1.links.size(), 1u);
    EXPECT_EQ(g1.links[0].from, g1.links[0].to);
}

TEST(Arrangement, CellNamesRoundTrip) {
    const auto arr = three_lines();
    for (const auto& c : levi::testing::all_cells(arr)) EXPECT_EQ(parse_cell(arr, cell_name(arr, c)), c);
    EXPECT_THROW(parse_cell(arr, "face:99"), Error);
    EXPECT_THROW(parse_cell(arr, "blob:0"), Error);
    EXPECT_THROW(parse_cell(arr, "face"), Error);
}
