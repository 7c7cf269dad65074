#include "helpers.hpp"

#include "levi/errors.hpp"
#include "levi/levi.hpp"

#include <gtest/gtest.h>

using namespace levi;
using levi::testing::three_lines;

TEST(Wiring, ReducedWordCounts) {
    // commutation classes of reduced words of the longest permutation
    const std::vector<std::size_t> expected{1, 2, 8, 62, 908};
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(simple_wiring_words(n).size(), expected[n - 2]) << "n=" << n;
}

TEST(Wiring, RejectsIncompleteDiagram) {
    EXPECT_THROW(wiring_arrangement(3, {{0, 2}, {1, 2}}), Error);
    EXPECT_THROW(wiring_arrangement(2, {{0, 2}, {0, 2}}), Error);
}

TEST(Enumerate, ClassCounts) {
    EXPECT_EQ(enumerate_simple(1).size(), 1u);
    EXPECT_EQ(enumerate_simple(2).size(), 1u);
    EXPECT_EQ(enumerate_simple(3).size(), 1u);
    EXPECT_EQ(enumerate_simple(4).size(), 1u);  // regression constant
    EXPECT_EQ(enumerate_simple(5).size(), 1u);
    EXPECT_EQ(enumerate_simple(6).size(), 4u);
    EXPECT_THROW(enumerate_simple(7), Error);
}

TEST(Enumerate, ClassesAreValidAndDistinct) {
    const auto six = enumerate_simple(6);
    for (const auto& a : six) EXPECT_TRUE(validate(a).ok);
    for (std::size_t i = 0; i < six.size(); ++i)
        for (std::size_t j = i + 1; j < six.size(); ++j) EXPECT_FALSE(iso(six[i], six[j]));
}

TEST(Enumerate, OneLineIsMarkerForm) {
    EXPECT_TRUE(iso(enumerate_simple(1).front(), one_line_arrangement()));
}

TEST(Random, Deterministic) {
    const auto a = random_arrangement(5, 1, RandomMode::simple);
    const auto b = random_arrangement(5, 1, RandomMode::simple);
    EXPECT_EQ(canonical_form(a), canonical_form(b));
    EXPECT_EQ(a, b);
}

TEST(Random, MergedHasMultiCrossing) {
    const auto a = random_arrangement(5, 1, RandomMode::merged);
    EXPECT_TRUE(validate(a).ok);
    bool big = false;
    for (const auto& v : cells(a.map()).vertices) big |= curves_through(a, v).size() >= 3;
    EXPECT_TRUE(big);
}

TEST(Random, SingleLine) {
    for (std::uint64_t s : {0ull, 7ull, 123456789ull})
        EXPECT_TRUE(iso(random_arrangement(1, s, RandomMode::merged), one_line_arrangement()));
}

TEST(Iso, RelabelInvariant) {
    const auto a = enumerate_simple(5).front();
    EXPECT_TRUE(iso(a, relabel(a, bfs_relabeling(a.map(), 17))));
    EXPECT_FALSE(iso(three_lines(), enumerate_simple(4).front()));
}

TEST(Iso, CurveRenamingInvariant) {
    const auto a = three_lines();
    auto labels = a.dart_curves();
    for (auto& c : labels) c = 2 - c;
    EXPECT_TRUE(iso(a, Arrangement(a.map(), labels)));
}

TEST(Brute, ThreeLinesDistinctFaces) {
    const auto arr = three_lines();
    const auto t = cells(arr.map());
    const int e = static_cast<int>(t.edges.size());
    for (const auto& p : t.faces)
        for (const auto& q : t.faces)
            if (p != q) {
                EXPECT_FALSE(brute_extend(arr, p, q, e).empty());
            }
}

TEST(Brute, OneLineSingleEncounter) {
    const auto arr = one_line_arrangement();
    const auto t = cells(arr.map());
    const auto sigs = brute_extend(arr, t.faces[0], t.edges[0], default_max_len(arr));
    ASSERT_FALSE(sigs.empty());
    for (const auto& s : sigs) EXPECT_EQ(s.size(), 1u);
}

TEST(Brute, SharedCurveRejected) {
    const auto arr = three_lines();
    const auto v = cells(arr.map()).vertices[0];
    const CurveId c = *curves_through(arr, v).begin();
    for (const auto& e : cells(arr.map()).edges)
        if (arr.curve_of_edge(e) == c) {
            EXPECT_THROW(brute_extend(arr, v, e, 8), SameLine);
        }
}

TEST(Brute, ContainsExtendSignature) {
    for (int n = 2; n <= 4; ++n) {
        const auto arr = enumerate_simple(n).front();
        const auto cs = levi::testing::all_cells(arr);
        for (const auto& p : cs)
            for (const auto& q : cs) {
                if (p == q || shared_curve(arr, p, q)) continue;
                const auto r = extend_detailed(arr, p, q);
                const auto sigs = brute_extend(arr, p, q, default_max_len(arr));
                EXPECT_TRUE(sigs.count(signature_of(arr, r.normalized)));
            }
    }
}

TEST(Signature, RotationAndReversal) {
    const CellRef a{CellKind::edge, 0}, b{CellKind::edge, 4}, c{CellKind::vertex, 2};
    const auto s = canonical_signature({b, c, a});
    EXPECT_EQ(s, canonical_signature({a, b, c}));
    EXPECT_EQ(s, canonical_signature({c, b, a}));
    EXPECT_EQ(s.front(), c);  // vertices order before edges
}
