#include "helpers.hpp"

#include "levi/errors.hpp"
#include "levi/levi.hpp"
#include "levi/psl_io.hpp"
#include "levi/svg.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace levi;
using levi::testing::three_lines;
using levi::testing::two_lines;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string cmd = std::string(PSLKIT_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Minimal well-formedness check: tags nest and close, attributes are quoted.
bool well_formed_xml(const std::string& s) {
    std::vector<std::string> open;
    std::size_t i = 0;
    while ((i = s.find('<', i)) != std::string::npos) {
        const auto j = s.find('>', i);
        if (j == std::string::npos) return false;
        std::string tag = s.substr(i + 1, j - i - 1);
        i = j + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        if (std::count(tag.begin(), tag.end(), '"') % 2) return false;
        if (tag[0] == '/') {
            if (open.empty() || open.back() != tag.substr(1)) return false;
            open.pop_back();
            continue;
        }
        const bool self_closing = tag.back() == '/';
        const std::string name = tag.substr(0, tag.find_first_of(" /"));
        if (!self_closing) open.push_back(name);
    }
    return open.empty();
}

std::filesystem::path temp_dir() {
    auto d = std::filesystem::temp_directory_path() / "levi_io_test";
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(Psl, TwoLinesRoundTrip) {
    const auto arr = two_lines();
    const auto text = print_psl(arr);
    EXPECT_NE(text.find("darts 8\n"), std::string::npos);
    EXPECT_EQ(text.rfind("psl 1\n", 0), 0u);
    const auto back = parse_psl(text);
    EXPECT_EQ(back, canonical_relabel(arr));
    EXPECT_EQ(print_psl(back), text);
}

TEST(Psl, CorpusRoundTrip) {
    std::vector<Arrangement> corpus;
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : enumerate_simple(n)) corpus.push_back(a);
    for (std::uint64_t s = 0; s < 10; ++s) corpus.push_back(random_arrangement(6, s, RandomMode::merged));
    for (const auto& a : corpus) {
        const auto back = parse_psl(print_psl(a));
        EXPECT_TRUE(iso(back, a));
        EXPECT_EQ(back.dart_curves(), canonical_relabel(a).dart_curves());
        EXPECT_EQ(print_psl(back), print_psl(a));
    }
}

TEST(Psl, WrongLengthIsParseError) {
    const std::string text = "psl 1\ndarts 4\nsigma: 3 2 1\nalpha: 1 0 3 2\ntau: 2 3 0 1\nlabels: 0 0 0 0\n";
    try {
        parse_psl(text);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Psl, OtherMalformedInput) {
    EXPECT_THROW(parse_psl("graph 1\n"), ParseError);
    EXPECT_THROW(parse_psl("psl 2\n"), ParseError);
    EXPECT_THROW(parse_psl("psl 1\ndarts 4\nsigma: 3 2 1 x\n"), ParseError);
    EXPECT_THROW(parse_psl("psl 1\ndarts 4\nsigma: 3 2 1 0\n"), ParseError);
    EXPECT_THROW(parse_psl("psl 1\ndarts 4\nsigma: 3 2 1 0\nalpha: 0 1 2 3\ntau: 2 3 0 1\nlabels: 0 0 0 0\n"),
                 InvalidMap);
}

TEST(Psl, NamesSurvive) {
    PslDocument doc;
    doc.arrangement = three_lines();
    doc.names["face:0"] = "outer region";
    const auto back = parse_psl_document(print_psl(doc));
    EXPECT_EQ(back.names, doc.names);
}

TEST(Psl, ShippedFixture) {
    const auto arr = parse_psl(read_file(std::string(FIXTURE_DIR) + "/three_lines.psl"));
    EXPECT_TRUE(validate(arr).ok);
    const auto t = cells(arr.map());
    EXPECT_EQ(t.vertices.size(), 3u);
    EXPECT_EQ(t.edges.size(), 6u);
    EXPECT_EQ(t.faces.size(), 4u);
}

TEST(Export, ThreeLines) {
    const auto text = export_crossing_lists(three_lines());
    std::istringstream in(text);
    std::string line;
    int curves = 0;
    while (std::getline(in, line)) {
        if (line.rfind("curve ", 0) != 0) continue;
        ++curves;
        std::istringstream ls(line.substr(line.find(':') + 1));
        int v, k = 0;
        while (ls >> v) ++k;
        EXPECT_EQ(k, 2) << line;
    }
    EXPECT_EQ(curves, 3);
}

TEST(Export, MergedVertexListsThreeCurves) {
    const auto text = export_crossing_lists(random_arrangement(5, 1, RandomMode::merged));
    std::istringstream in(text);
    std::string line;
    std::size_t widest = 0;
    while (std::getline(in, line)) {
        if (line.rfind("vertex ", 0) != 0) continue;
        std::istringstream ls(line.substr(line.find(':') + 1));
        int c;
        std::size_t k = 0;
        while (ls >> c) ++k;
        widest = std::max(widest, k);
    }
    EXPECT_GE(widest, 3u);
}

TEST(Export, OneLine) {
    EXPECT_EQ(export_crossing_lists(one_line_arrangement()), "curves 1\ncurve 0: 0\nvertex 0: 0\n");
}

TEST(Svg, ThreeLinesDiskModel) {
    const auto svg = render_svg(three_lines(), 0);
    EXPECT_TRUE(well_formed_xml(svg));
    int polylines = 0;
    for (std::size_t i = 0; (i = svg.find("<polyline", i)) != std::string::npos; ++i) ++polylines;
    EXPECT_EQ(polylines, 2);
    EXPECT_EQ(svg.find("class=\"highlight\""), std::string::npos);
}

TEST(Svg, HighlightOnce) {
    const auto arr = three_lines();
    const auto t = cells(arr.map());
    const auto bigger = extend(arr, t.faces[0], t.faces[1]);
    const auto svg = render_svg(bigger, 0, 3);
    const auto first = svg.find("class=\"highlight\"");
    ASSERT_NE(first, std::string::npos);
    EXPECT_EQ(svg.find("class=\"highlight\"", first + 1), std::string::npos);
    EXPECT_EQ(svg, render_svg(bigger, 0, 3));
}

TEST(Svg, UnknownCurve) {
    EXPECT_THROW(render_svg(three_lines(), 99), UnknownCurve);
    EXPECT_THROW(render_svg(three_lines(), 0, 7), UnknownCurve);
}

TEST(Svg, CorpusWellFormed) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : enumerate_simple(n))
            for (CurveId c = 0; c < n; ++c) EXPECT_TRUE(well_formed_xml(render_svg(a, c)));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto a = random_arrangement(6, s, RandomMode::merged);
        EXPECT_TRUE(well_formed_xml(render_svg(a, 0, 1)));
    }
}

TEST(Cli, ValidateFixture) {
    const auto r = run_cli("validate " + std::string(FIXTURE_DIR) + "/three_lines.psl");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pairs_ok=true\n"), std::string::npos);
}

TEST(Cli, ExtendThenValidate) {
    const auto out = (temp_dir() / "extended.psl").string();
    const auto fixture = std::string(FIXTURE_DIR) + "/three_lines.psl";
    const auto r = run_cli("extend " + fixture + " --p face:0 --q vertex:2 -o " + out);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("curves=4\n"), std::string::npos);
    const auto v = run_cli("validate " + out);
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("ok=true\n"), std::string::npos);
}

TEST(Cli, SameLineAndSamePoint) {
    const auto fixture = std::string(FIXTURE_DIR) + "/three_lines.psl";
    const auto out = (temp_dir() / "unused.psl").string();
    const auto same_line = run_cli("extend " + fixture + " --p vertex:0 --q edge:0 -o " + out);
    EXPECT_EQ(same_line.code, 1);
    EXPECT_NE(same_line.out.find("error=same_line\n"), std::string::npos);
    const auto same_point = run_cli("extend " + fixture + " --p face:1 --q face:1 -o " + out);
    EXPECT_EQ(same_point.code, 1);
    EXPECT_NE(same_point.out.find("error=same_point\n"), std::string::npos);
}

TEST(Cli, UsageAndParseErrors) {
    EXPECT_EQ(run_cli("").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
    const auto bad = (temp_dir() / "bad.psl").string();
    std::ofstream(bad) << "psl 1\ndarts 4\nsigma: 1\n";
    EXPECT_EQ(run_cli("validate " + bad).code, 2);
    const auto fixture = std::string(FIXTURE_DIR) + "/three_lines.psl";
    EXPECT_EQ(run_cli("extend " + fixture + " --p face:42 --q face:0 -o x.psl").code, 2);
}

TEST(Cli, Deterministic) {
    const auto a = (temp_dir() / "r1.psl").string();
    const auto b = (temp_dir() / "r2.psl").string();
    const auto r1 = run_cli("random --n 6 --seed 9 --merged -o " + a);
    const auto r2 = run_cli("random --n 6 --seed 9 --merged -o " + b);
    EXPECT_EQ(r1.code, 0);
    EXPECT_EQ(read_file(a), read_file(b));
    EXPECT_EQ(run_cli("stats " + a + " --cells").out, run_cli("stats " + b + " --cells").out);
}

TEST(Cli, EnumerateAndRender) {
    const auto dir = (temp_dir() / "enum4").string();
    const auto r = run_cli("enumerate --n 4 -o " + dir);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("classes=1\n"), std::string::npos);
    const auto svg = (temp_dir() / "n4.svg").string();
    EXPECT_EQ(run_cli("render " + dir + "/n4_0.psl --infinity 1 --highlight 2 -o " + svg).code, 0);
    EXPECT_TRUE(well_formed_xml(read_file(svg)));
    EXPECT_EQ(run_cli("render " + dir + "/n4_0.psl --infinity 99 -o " + svg).code, 2);
}
