#include "levi/arrangement.hpp"

#include "levi/errors.hpp"

#include <algorithm>
#include <charconv>

namespace levi {

Arrangement::Arrangement(CombMap map, std::vector<CurveId> dart_curve)
    : map_(std::move(map)), curve_(std::move(dart_curve)) {
    if (static_cast<Dart>(curve_.size()) != map_.size())
        throw InvalidMap("label table size does not match dart count");
    for (CurveId c : curve_) n_ = std::max(n_, c + 1);
}

std::vector<CurveId> Arrangement::curves_at_vertex(Dart d) const {
    std::vector<CurveId> out;
    const auto& ring = map_.vertex_darts(map_.vertex_of(d));
    auto start = std::find(ring.begin(), ring.end(), d) - ring.begin();
    for (std::size_t i = 0; i < ring.size(); ++i) {
        CurveId c = curve_[ring[(start + i) % ring.size()]];
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

std::vector<Dart> Arrangement::curve_cycle(CurveId c) const {
    Dart first = kNoDart;
    for (Dart d = 0; d < map_.size(); ++d) {
        if (curve_[d] == c) {
            first = d;
            break;
        }
    }
    std::vector<Dart> cycle;
    if (first == kNoDart) return cycle;
    Dart d = first;
    do {
        cycle.push_back(d);
        d = map_.straight(map_.alpha(d));
        if (cycle.size() > static_cast<std::size_t>(map_.size())) break;
    } while (d != first);
    return cycle;
}

bool ValidationReport::pairs_ok() const {
    for (std::size_t a = 0; a < pair_crossings.size(); ++a)
        for (std::size_t b = 0; b < pair_crossings.size(); ++b)
            if (a != b && pair_crossings[a][b] != 1) return false;
    return true;
}

ValidationReport validate(const Arrangement& arr) {
    ValidationReport rep;
    const auto& m = arr.map();
    const int n = arr.size();
    rep.pair_crossings.assign(n, std::vector<int>(n, 0));
    auto fail = [&](std::string kind, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(detail)});
    };
    if (m.empty()) {
        rep.ok = (n == 0);
        return rep;
    }

    bool labels_ok = true;
    std::vector<int> darts_per_curve(n, 0);
    for (Dart d = 0; d < m.size(); ++d) {
        CurveId c = arr.curve_of(d);
        if (c < 0 || c >= n) {
            fail("unlabeled edge", "dart " + std::to_string(d));
            labels_ok = false;
            continue;
        }
        ++darts_per_curve[c];
        if (arr.curve_of(m.alpha(d)) != c || arr.curve_of(m.tau(d)) != c) {
            fail("label mismatch", "dart " + std::to_string(d));
            labels_ok = false;
        }
    }
    for (CurveId c = 0; c < n; ++c)
        if (darts_per_curve[c] == 0) fail("missing curve", "curve " + std::to_string(c));

    bool straight = labels_ok;
    for (int v = 0; v < m.vertex_count() && labels_ok; ++v) {
        const auto& ring = m.vertex_darts(v);
        const auto deg = ring.size();
        if (deg % 2 != 0) {
            fail("not straight through", "odd degree at vertex of dart " + std::to_string(ring[0]));
            straight = false;
            continue;
        }
        const auto half = deg / 2;
        std::vector<CurveId> seen;
        for (std::size_t i = 0; i < half; ++i) {
            CurveId c = arr.curve_of(ring[i]);
            if (arr.curve_of(ring[i + half]) != c ||
                std::find(seen.begin(), seen.end(), c) != seen.end()) {
                fail("not straight through", "vertex of dart " + std::to_string(ring[0]));
                straight = false;
                break;
            }
            seen.push_back(c);
        }
    }

    if (straight) {
        for (CurveId c = 0; c < n; ++c) {
            if (darts_per_curve[c] == 0) continue;
            auto cycle = arr.curve_cycle(c);
            bool single = 2 * cycle.size() == static_cast<std::size_t>(darts_per_curve[c]);
            if (single) {
                // the lift must be one tau-invariant cycle traversed in one direction
                std::vector<char> on(m.size(), 0);
                for (Dart d : cycle) on[d] = 1;
                for (Dart d : cycle) {
                    if (on[m.alpha(d)] || !on[m.tau(d)]) single = false;
                }
            }
            if (!single) fail("curve not a single closed walk", "curve " + std::to_string(c));
        }
    } else if (labels_ok) {
        // without a rotation to follow, check the edges of each curve form one cycle
        for (CurveId c = 0; c < n; ++c) {
            if (darts_per_curve[c] == 0) continue;
            std::vector<int> degree(m.vertex_count(), 0);
            Dart start = kNoDart;
            for (Dart d = 0; d < m.size(); ++d)
                if (arr.curve_of(d) == c) {
                    ++degree[m.vertex_of(d)];
                    if (start == kNoDart) start = d;
                }
            bool single = std::all_of(degree.begin(), degree.end(), [](int k) { return k == 0 || k == 2; });
            if (single) {
                int walked = 0;
                Dart d = start;
                do {
                    ++walked;
                    // leave the head of d by its other c-dart
                    const Dart back = m.alpha(d);
                    Dart next = m.sigma(back);
                    while (arr.curve_of(next) != c) next = m.sigma(next);
                    d = next;
                } while (d != start && walked <= m.size());
                single = 2 * walked == darts_per_curve[c];
            }
            if (!single) fail("curve not a single closed walk", "curve " + std::to_string(c));
        }
    }

    if (labels_ok) {
        for (const auto& v : cells(m).vertices) {
            auto cs = arr.curves_at_vertex(v.orbit);
            for (std::size_t i = 0; i < cs.size(); ++i)
                for (std::size_t j = i + 1; j < cs.size(); ++j) {
                    ++rep.pair_crossings[cs[i]][cs[j]];
                    ++rep.pair_crossings[cs[j]][cs[i]];
                }
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rep.pair_crossings[a][b] != 1)
                    fail("pair crossing count", "curves " + std::to_string(a) + "," +
                                                    std::to_string(b) + " cross " +
                                                    std::to_string(rep.pair_crossings[a][b]) +
                                                    " times");
    }

    if (cells(m).quotient_euler() != 1) fail("euler", "quotient characteristic is not 1");
    rep.ok = rep.violations.empty();
    return rep;
}

int crossing_count(const Arrangement& arr, CurveId a, CurveId b) {
    if (a == b) throw SameCurve();
    int count = 0;
    for (const auto& v : cells(arr.map()).vertices) {
        auto cs = arr.curves_at_vertex(v.orbit);
        bool has_a = std::find(cs.begin(), cs.end(), a) != cs.end();
        bool has_b = std::find(cs.begin(), cs.end(), b) != cs.end();
        if (has_a && has_b) ++count;
    }
    return count;
}

std::set<CurveId> curves_through(const Arrangement& arr, const CellRef& cell) {
    switch (cell.kind) {
    case CellKind::face: return {};
    case CellKind::edge: return {arr.curve_of(cell.orbit)};
    case CellKind::vertex: {
        auto cs = arr.curves_at_vertex(cell.orbit);
        return {cs.begin(), cs.end()};
    }
    }
    return {};
}

std::optional<CurveId> shared_curve(const Arrangement& arr, const CellRef& p, const CellRef& q) {
    auto a = curves_through(arr, p);
    auto b = curves_through(arr, q);
    for (CurveId c : a)
        if (b.contains(c)) return c;
    return std::nullopt;
}

std::vector<std::size_t> DualGraph::links_of(const CellRef& face) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < links.size(); ++i)
        if (links[i].from == face || links[i].to == face) out.push_back(i);
    return out;
}

DualGraph dual_graph(const Arrangement& arr) {
    const auto& m = arr.map();
    DualGraph g;
    auto table = cells(m);
    g.nodes = table.faces;
    if (m.empty()) return g;
    for (const auto& e : table.edges) {
        Dart d = e.orbit;
        g.links.push_back({m.face_cell(d), m.face_cell(m.alpha(d)), e, d, arr.curve_of(d)});
    }
    for (const auto& v : table.vertices) g.corners.emplace_back(v, m.vertex_darts(m.vertex_of(v.orbit)));
    return g;
}

namespace {

const std::vector<CellRef>& cells_of_kind(const CellTable& t, CellKind kind) {
    switch (kind) {
    case CellKind::vertex: return t.vertices;
    case CellKind::edge: return t.edges;
    case CellKind::face: return t.faces;
    }
    return t.faces;
}

}  // namespace

CellRef cell_by_index(const Arrangement& arr, CellKind kind, int index) {
    auto t = cells(arr.map());
    const auto& v = cells_of_kind(t, kind);
    if (index < 0 || static_cast<std::size_t>(index) >= v.size())
        throw Error(to_string(kind) + " id " + std::to_string(index) + " out of range");
    return v[index];
}

int cell_index(const Arrangement& arr, const CellRef& cell) {
    auto t = cells(arr.map());
    const auto& v = cells_of_kind(t, cell.kind);
    auto it = std::lower_bound(v.begin(), v.end(), cell);
    if (it == v.end() || *it != cell) return -1;
    return static_cast<int>(it - v.begin());
}

std::string cell_name(const Arrangement& arr, const CellRef& cell) {
    return to_string(cell.kind) + ":" + std::to_string(cell_index(arr, cell));
}

CellRef parse_cell(const Arrangement& arr, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("cell must look like kind:id, got '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string num = text.substr(colon + 1);
    int id = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), id);
    if (ec != std::errc() || ptr != num.data() + num.size())
        throw Error("bad cell id in '" + text + "'");
    if (kind == "face") return cell_by_index(arr, CellKind::face, id);
    if (kind == "edge") return cell_by_index(arr, CellKind::edge, id);
    if (kind == "vertex") return cell_by_index(arr, CellKind::vertex, id);
    throw Error("unknown cell kind '" + kind + "'");
}

Arrangement relabel(const Arrangement& arr, std::span<const Dart> old_to_new) {
    if (arr.map().empty()) return arr;
    std::vector<CurveId> labels(arr.map().size());
    for (Dart d = 0; d < arr.map().size(); ++d) labels[old_to_new[d]] = arr.curve_of(d);
    return Arrangement(relabel(arr.map(), old_to_new), std::move(labels));
}

Arrangement canonical_relabel(const Arrangement& arr) {
    if (arr.map().empty()) return arr;
    return relabel(arr, bfs_relabeling(arr.map(), 0));
}

}  // namespace levi
