#include "levi/svg.hpp"

#include "levi/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace levi {

namespace {

constexpr double kCenter = 200.0;
constexpr double kRadius = 180.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

}  // namespace

std::string render_svg(const Arrangement& arr, CurveId infinity, std::optional<CurveId> highlight) {
    const int n = arr.size();
    if (infinity < 0 || infinity >= n) throw UnknownCurve(infinity);
    if (highlight && (*highlight < 0 || *highlight >= n)) throw UnknownCurve(*highlight);
    const auto& m = arr.map();

    // Boundary: the cover cycle of the infinity curve. The drawn hemisphere is
    // the side to its right, found by flooding faces without crossing it.
    const auto boundary = arr.curve_cycle(infinity);
    const int len = static_cast<int>(boundary.size());
    std::vector<char> inside(m.face_count(), 0);
    std::vector<int> stack{m.face_of(boundary[0])};
    inside[stack[0]] = 1;
    while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (Dart d : m.face_darts(f)) {
            if (arr.curve_of(d) == infinity) continue;
            const int g = m.face_of(m.alpha(d));
            if (!inside[g]) {
                inside[g] = 1;
                stack.push_back(g);
            }
        }
    }

    std::vector<double> x(m.vertex_count(), kCenter), y(m.vertex_count(), kCenter);
    std::vector<char> fixed(m.vertex_count(), 0), used(m.vertex_count(), 0);
    for (int j = 0; j < len; ++j) {
        // clockwise, so the right-hand side of the walk is the interior
        const double a = -2.0 * std::numbers::pi * j / len;
        const int v = m.vertex_of(boundary[j]);
        x[v] = kCenter + kRadius * std::cos(a);
        y[v] = kCenter - kRadius * std::sin(a);
        fixed[v] = used[v] = 1;
    }
    auto drawn = [&](Dart d) { return arr.curve_of(d) != infinity && inside[m.face_of(d)]; };
    for (Dart d = 0; d < m.size(); ++d)
        if (drawn(d)) used[m.vertex_of(d)] = 1;

    // barycentric (Tutte) layout by Gauss-Seidel sweeps
    for (int sweep = 0; sweep < 400; ++sweep) {
        for (int v = 0; v < m.vertex_count(); ++v) {
            if (fixed[v] || !used[v]) continue;
            double sx = 0, sy = 0;
            int k = 0;
            for (Dart d : m.vertex_darts(v)) {
                const int u = m.vertex_of(m.alpha(d));
                sx += x[u];
                sy += y[u];
                ++k;
            }
            x[v] = sx / k;
            y[v] = sy / k;
        }
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n";
    out << "  <circle class=\"infinity\" cx=\"200\" cy=\"200\" r=\"180\" fill=\"none\" stroke=\"#444444\" "
           "stroke-width=\"2\"/>\n";

    for (CurveId c = 0; c < n; ++c) {
        if (c == infinity) continue;
        // the part of the cover cycle inside the hemisphere, between two
        // antipodal boundary points
        const auto cycle = arr.curve_cycle(c);
        const int k = static_cast<int>(cycle.size());
        int start = -1;
        for (int i = 0; i < k; ++i)
            if (fixed[m.vertex_of(cycle[i])] && drawn(cycle[i])) start = i;
        if (start < 0) continue;
        std::vector<int> path{m.vertex_of(cycle[start])};
        for (int i = start; i < start + k; ++i) {
            const Dart d = cycle[i % k];
            path.push_back(m.vertex_of(m.alpha(d)));
            if (fixed[path.back()]) break;
        }
        const bool hl = highlight && *highlight == c;
        out << "  <polyline class=\"" << (hl ? "highlight" : "curve") << "\" data-curve=\"" << c << "\" points=\"";
        for (std::size_t i = 0; i < path.size(); ++i)
            out << (i ? " " : "") << num(x[path[i]]) << ',' << num(y[path[i]]);
        out << "\" fill=\"none\" stroke=\"" << (hl ? "#d62728" : "#1f77b4") << "\" stroke-width=\""
            << (hl ? 3 : 1.5) << "\"/>\n";
    }

    for (int j = 0; j < len; ++j) {
        const int v = m.vertex_of(boundary[j]);
        const double a = -2.0 * std::numbers::pi * j / len;
        out << "  <circle class=\"mark\" cx=\"" << num(x[v]) << "\" cy=\"" << num(y[v])
            << "\" r=\"3\" fill=\"#444444\"/>\n";
        out << "  <text x=\"" << num(kCenter + (kRadius + 12) * std::cos(a)) << "\" y=\""
            << num(kCenter - (kRadius + 12) * std::sin(a) + 4) << "\" font-size=\"10\" text-anchor=\"middle\">"
            << (j % (len / 2)) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace levi
