#include "helpers.hpp"

#include "levi/errors.hpp"
#include "levi/levi.hpp"

#include <gtest/gtest.h>

using namespace levi;
using levi::testing::two_lines;

TEST(CombMap, SingleLineCover) {
    const auto m = one_line_arrangement().map();
    const auto t = cells(m);
    EXPECT_EQ(t.cover_vertices, 2);
    EXPECT_EQ(t.cover_edges, 2);
    EXPECT_EQ(t.cover_faces, 2);
    EXPECT_EQ(t.vertices.size(), 1u);
    EXPECT_EQ(t.edges.size(), 1u);
    EXPECT_EQ(t.faces.size(), 1u);
}

TEST(CombMap, TwoLineCover) {
    const auto t = cells(two_lines().map());
    EXPECT_EQ(t.cover_vertices, 2);
    EXPECT_EQ(t.cover_edges, 4);
    EXPECT_EQ(t.cover_faces, 4);
    EXPECT_EQ(t.quotient_euler(), 1);
    EXPECT_EQ(t.vertices.size(), 1u);
    EXPECT_EQ(t.edges.size(), 2u);
    EXPECT_EQ(t.faces.size(), 2u);
}

TEST(CombMap, AlphaWithFixedPointRejected) {
    try {
        CombMap::build({3, 2, 1, 0}, {0, 1, 2, 3}, {2, 3, 0, 1});
        FAIL() << "expected InvalidMap";
    } catch (const InvalidMap& e) {
        EXPECT_NE(std::string(e.what()).find("alpha not fixed-point free"), std::string::npos);
    }
}

TEST(CombMap, TauMustCommuteWithAlpha) {
    EXPECT_THROW(CombMap::build({3, 2, 1, 0}, {1, 0, 3, 2}, {3, 2, 1, 0}), InvalidMap);
}

TEST(CombMap, FaceWalkIsContractible) {
    const auto m = two_lines().map();
    for (int f = 0; f < m.face_count(); ++f) EXPECT_TRUE(is_contractible(m, m.face_darts(f)));
}

TEST(CombMap, PseudolineWalkIsEssential) {
    const auto arr = two_lines();
    const auto cycle = arr.curve_cycle(0);
    std::vector<Dart> half(cycle.begin(), cycle.begin() + cycle.size() / 2);
    EXPECT_FALSE(is_contractible(arr.map(), half));
    std::vector<Dart> twice = half;
    twice.insert(twice.end(), half.begin(), half.end());
    EXPECT_TRUE(is_contractible(arr.map(), twice));
}

TEST(CombMap, MalformedWalkRejected) {
    const auto m = levi::testing::three_lines().map();
    // two darts at the same vertex do not chain
    const Dart d = 0;
    std::vector<Dart> walk{d, m.sigma(d)};
    EXPECT_THROW(is_contractible(m, walk), MalformedWalk);
}

TEST(CombMap, SplitEdgeBookkeeping) {
    const auto m = two_lines().map();
    const auto t0 = cells(m);
    const auto r = split_edge(m, t0.edges[0]);
    const auto t = cells(r.map);
    EXPECT_EQ(t.vertices.size(), 2u);
    EXPECT_EQ(t.edges.size(), 3u);
    EXPECT_EQ(t.faces.size(), 2u);
    EXPECT_EQ(r.map.size(), m.size() + 4);
    EXPECT_EQ(r.map.degree(r.back), 2);
}

TEST(CombMap, SplitTauPartnerGivesSameResult) {
    const auto m = two_lines().map();
    const Dart d = 0;
    const auto a = split_edge(m, d);
    const auto b = split_edge(m, m.tau(d));
    EXPECT_EQ(cells(a.map).quotient_euler(), cells(b.map).quotient_euler());
    EXPECT_EQ(a.vertex.kind, b.vertex.kind);
    // same quotient surgery: relabel both canonically
    Arrangement aa(a.map, std::vector<CurveId>(a.map.size(), 0));
    Arrangement bb(b.map, std::vector<CurveId>(b.map.size(), 0));
    EXPECT_TRUE(iso(aa, bb));
}

TEST(CombMap, ChordAddsFaceAndEdge) {
    const auto m = two_lines().map();
    const auto t0 = cells(m);
    const auto face = t0.faces[0];
    const auto& walk = m.face_darts(m.face_lift(face));
    // corners are named by the dart before them in rotation order
    const Dart a = m.sigma_inv(walk[0]);
    const Dart b = m.sigma_inv(walk[1]);
    const auto r = add_chord(m, face, a, b);
    const auto t = cells(r.map);
    EXPECT_EQ(t.faces.size(), t0.faces.size() + 1);
    EXPECT_EQ(t.edges.size(), t0.edges.size() + 1);
    EXPECT_EQ(t.quotient_euler(), 1);
}

TEST(CombMap, LoopChordAtOneCorner) {
    const auto m = two_lines().map();
    const auto face = cells(m).faces[0];
    const Dart a = m.sigma_inv(m.face_darts(m.face_lift(face))[0]);
    const auto r = add_chord(m, face, a, a);
    const auto t = cells(r.map);
    EXPECT_EQ(t.faces.size(), 3u);
    EXPECT_EQ(r.map.vertex_of(r.first), r.map.vertex_of(r.second));
}

TEST(CombMap, ChordAcrossFacesRejected) {
    const auto m = two_lines().map();
    const auto t = cells(m);
    const Dart a = m.sigma_inv(m.face_darts(m.face_lift(t.faces[0]))[0]);
    const Dart b = m.sigma_inv(m.face_darts(m.face_lift(t.faces[1]))[0]);
    EXPECT_THROW(add_chord(m, t.faces[0], a, b), CornersNotCofacial);
}

TEST(CombMap, DissolveUndoesSplit) {
    const auto m = two_lines().map();
    const auto r = split_edge(m, 0);
    const auto d = dissolve_vertex(r.map, r.back);
    EXPECT_EQ(d.map.size(), m.size());
    const auto t = cells(d.map);
    EXPECT_EQ(t.vertices.size(), 1u);
    EXPECT_EQ(t.edges.size(), 2u);
}

TEST(CombMap, RelabelIsIsomorphism) {
    const auto arr = levi::testing::three_lines();
    const auto order = bfs_relabeling(arr.map(), 5);
    const auto moved = relabel(arr, order);
    EXPECT_TRUE(iso(arr, moved));
    EXPECT_EQ(cells(moved.map()).quotient_euler(), 1);
}
