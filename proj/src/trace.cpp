#include "levi/trace.hpp"

#include "levi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace levi {

std::optional<std::size_t> Trace::anchor_index(Anchor a) const {
    for (std::size_t i = 0; i < half.size(); ++i)
        if (half[i].anchor == a) return i;
    return std::nullopt;
}

int before_face(const CombMap& map, const Passage& p) {
    switch (p.kind) {
    case PassageKind::face: return map.face_of(p.dart);
    case PassageKind::edge: return map.face_of(p.dart);
    case PassageKind::vertex: return map.face_of_corner(p.dart);
    }
    return -1;
}

int after_face(const CombMap& map, const Passage& p) {
    switch (p.kind) {
    case PassageKind::face: return map.face_of(p.dart);
    case PassageKind::edge: return map.face_of(map.alpha(p.dart));
    case PassageKind::vertex: return map.face_of_corner(p.out);
    }
    return -1;
}

Passage tau_passage(const CombMap& map, const Passage& p) {
    Passage t = p;
    switch (p.kind) {
    case PassageKind::face: t.dart = map.alpha(map.tau(p.dart)); break;
    case PassageKind::edge:
        t.dart = map.alpha(map.tau(p.dart));
        if (p.pos == kNearOrigin)
            t.pos = kNearHead;
        else if (p.pos == kNearHead)
            t.pos = kNearOrigin;
        else
            t.pos = 1.0 - p.pos;
        break;
    case PassageKind::vertex:
        t.dart = map.tau_corner(p.dart);
        t.out = map.tau_corner(p.out);
        break;
    }
    return t;
}

std::vector<Passage> lift(const CombMap& map, const Trace& trace) {
    std::vector<Passage> out = trace.half;
    out.reserve(2 * trace.half.size());
    for (const auto& p : trace.half) out.push_back(tau_passage(map, p));
    return out;
}

namespace {

Dart small_dart(const CombMap& map, Dart d) { return map.edge_of(d); }

// Coordinate along the edge's smaller dart, or a placeholder marker.
double canonical_pos(const CombMap& map, const Passage& p) {
    const bool same = p.dart == small_dart(map, p.dart);
    if (p.pos == kNearOrigin) return same ? kNearOrigin : kNearHead;
    if (p.pos == kNearHead) return same ? kNearHead : kNearOrigin;
    return same ? p.pos : 1.0 - p.pos;
}

}  // namespace

void settle(const CombMap& map, std::vector<Passage>& lift) {
    std::vector<std::vector<std::size_t>> on_edge(map.size());
    for (std::size_t i = 0; i < lift.size(); ++i)
        if (lift[i].kind == PassageKind::edge) on_edge[small_dart(map, lift[i].dart)].push_back(i);

    std::vector<std::pair<double, std::size_t>> pts;
    for (Dart e = 0; e < map.size(); ++e) {
        const auto& idx = on_edge[e];
        if (idx.empty()) continue;
        double lo = 1.0, hi = 0.0;
        int n_start = 0, n_end = 0;
        for (std::size_t i : idx) {
            double x = canonical_pos(map, lift[i]);
            if (x == kNearOrigin)
                ++n_start;
            else if (x == kNearHead)
                ++n_end;
            else {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
        if (n_start + n_end == static_cast<int>(idx.size())) {
            lo = 2.0 / 3.0;
            hi = 1.0 / 3.0;
        }
        pts.clear();
        int k_start = 0, k_end = 0;
        for (std::size_t i : idx) {
            double x = canonical_pos(map, lift[i]);
            if (x == kNearOrigin)
                x = lo * (k_start++ + 1) / (n_start + 1);
            else if (x == kNearHead)
                x = 1.0 - (1.0 - hi) * (n_end - k_end++) / (n_end + 1);
            pts.emplace_back(x, i);
        }
        std::sort(pts.begin(), pts.end());
        const double k = static_cast<double>(pts.size());
        for (std::size_t r = 0; r < pts.size(); ++r) {
            double x = (static_cast<double>(r) + 1.0) / (k + 1.0);
            auto& p = lift[pts[r].second];
            p.pos = p.dart == e ? x : 1.0 - x;
        }
    }
}

Trace splice(const CombMap& map, const std::vector<Passage>& lift, std::size_t first,
             std::size_t count, const std::vector<Passage>& repl) {
    const std::size_t h = lift.size() / 2;
    if (count > h) throw InvalidTrace("splice span longer than half the lift");
    Trace t;
    t.half = repl;
    for (std::size_t k = count; k < h; ++k) t.half.push_back(lift[(first + k) % lift.size()]);
    if (t.half.empty()) throw InvalidTrace("splice removed every passage");
    auto full = levi::lift(map, t);
    settle(map, full);
    full.resize(full.size() / 2);
    t.half = std::move(full);
    return t;
}

std::vector<CurveId> curves_crossed(const Arrangement& arr, const Passage& p) {
    switch (p.kind) {
    case PassageKind::face: return {};
    case PassageKind::edge: return {arr.curve_of(p.dart)};
    case PassageKind::vertex: return arr.curves_at_vertex(p.dart);
    }
    return {};
}

std::vector<int> crossing_counts(const Arrangement& arr, const Trace& trace) {
    std::vector<int> counts(arr.size(), 0);
    for (const auto& p : trace.half)
        for (CurveId c : curves_crossed(arr, p)) ++counts[c];
    return counts;
}

int total_crossings(const Arrangement& arr, const Trace& trace) {
    auto c = crossing_counts(arr, trace);
    return std::accumulate(c.begin(), c.end(), 0);
}

bool parity_odd(const std::vector<int>& counts) {
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c % 2 == 1; });
}

double entry_coord(const CombMap& map, const Passage& p) {
    switch (p.kind) {
    case PassageKind::edge: return map.face_index(p.dart) + p.pos;
    case PassageKind::vertex: return map.face_index(map.sigma(p.dart));
    case PassageKind::face: break;
    }
    return -1.0;
}

double exit_coord(const CombMap& map, const Passage& p) {
    switch (p.kind) {
    case PassageKind::edge: return map.face_index(map.alpha(p.dart)) + 1.0 - p.pos;
    case PassageKind::vertex: return map.face_index(map.sigma(p.out));
    case PassageKind::face: break;
    }
    return -1.0;
}

std::vector<double> edge_points(const CombMap& map, const std::vector<Passage>& lift, Dart d) {
    const Dart e = small_dart(map, d);
    std::vector<double> xs;
    for (const auto& p : lift)
        if (p.kind == PassageKind::edge && small_dart(map, p.dart) == e)
            xs.push_back(canonical_pos(map, p));
    std::sort(xs.begin(), xs.end());
    return xs;
}

namespace {

struct Chord {
    int face;
    double a, b;
    std::size_t from;  // lift index of the passage the chord leaves
};

// Chords between consecutive non-marker passages; markers lie on chords.
std::vector<Chord> chords(const CombMap& map, const std::vector<Passage>& lift) {
    std::vector<std::size_t> real;
    for (std::size_t i = 0; i < lift.size(); ++i)
        if (lift[i].kind != PassageKind::face) real.push_back(i);
    std::vector<Chord> out;
    for (std::size_t k = 0; k < real.size(); ++k) {
        const auto& a = lift[real[k]];
        const auto& b = lift[real[(k + 1) % real.size()]];
        out.push_back({after_face(map, a), exit_coord(map, a), entry_coord(map, b), real[k]});
    }
    return out;
}

// x strictly inside the ccw boundary arc from a to b of a face of length k
bool inside(double x, double a, double b, double k) {
    auto rel = [&](double y) {
        double r = std::fmod(y - a, k);
        return r < 0 ? r + k : r;
    };
    double rx = rel(x);
    return rx > 0 && rx < rel(b);
}

}  // namespace

void check_trace(const CombMap& map, const Trace& trace) {
    if (trace.half.empty()) throw InvalidTrace("empty trace");
    for (const auto& p : trace.half) {
        if (p.dart < 0 || p.dart >= map.size()) throw InvalidTrace("dart out of range");
        if (p.kind == PassageKind::vertex && (p.out < 0 || p.out >= map.size()))
            throw InvalidTrace("dart out of range");
    }
    const auto L = lift(map, trace);
    const std::size_t n = L.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (after_face(map, L[i]) != before_face(map, L[(i + 1) % n]))
            throw InvalidTrace("passages " + std::to_string(i) + " and " +
                               std::to_string((i + 1) % n) + " do not share a face");
    }
    std::vector<char> vertex_used(map.vertex_count(), 0);
    std::vector<std::vector<double>> per_edge(map.size());
    for (const auto& p : L) {
        if (p.kind == PassageKind::edge) {
            if (!(p.pos > 0.0 && p.pos < 1.0)) throw InvalidTrace("crossing position outside the edge");
            per_edge[small_dart(map, p.dart)].push_back(canonical_pos(map, p));
        } else if (p.kind == PassageKind::vertex) {
            if (map.vertex_of(p.out) != map.vertex_of(p.dart) ||
                p.out != map.sigma_pow(p.dart, map.degree(p.dart) / 2))
                throw InvalidTrace("vertex passage is not transversal");
            int v = map.vertex_of(p.dart);
            if (vertex_used[v]) throw InvalidTrace("vertex passed twice");
            vertex_used[v] = 1;
        }
    }
    for (auto& xs : per_edge) {
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
            throw InvalidTrace("two crossings at one point");
    }

    std::vector<std::vector<Chord>> by_face(map.face_count());
    for (const auto& c : chords(map, L)) by_face[c.face].push_back(c);
    for (int f = 0; f < map.face_count(); ++f) {
        const auto& cs = by_face[f];
        const double k = static_cast<double>(map.face_darts(f).size());
        std::vector<double> ends;
        for (const auto& c : cs) {
            ends.push_back(c.a);
            ends.push_back(c.b);
        }
        std::sort(ends.begin(), ends.end());
        if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
            throw InvalidTrace("two strands meet inside a face");
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                if (inside(cs[j].a, cs[i].a, cs[i].b, k) != inside(cs[j].b, cs[i].a, cs[i].b, k))
                    throw InvalidTrace("strands cross inside a face");
    }
}

bool is_valid_trace(const CombMap& map, const Trace& trace) {
    try {
        check_trace(map, trace);
        return true;
    } catch (const InvalidTrace&) {
        return false;
    }
}

Subdivision::Subdivision(const CombMap& map, const std::vector<Passage>& lift) {
    const int F = map.face_count();
    const auto cs = chords(map, lift);
    points_.assign(F, {});
    for (const auto& c : cs) {
        points_[c.face].push_back(c.a);
        points_[c.face].push_back(c.b);
    }
    gap_base_.assign(F + 1, 0);
    for (int f = 0; f < F; ++f) {
        std::sort(points_[f].begin(), points_[f].end());
        gap_base_[f + 1] = gap_base_[f] + std::max<int>(1, static_cast<int>(points_[f].size()));
    }
    const int G = gap_base_[F];
    std::vector<int> parent(G);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto point_index = [&](int f, double x) {
        const auto& v = points_[f];
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    auto after = [&](int f, int j) { return gap_base_[f] + j; };
    auto before = [&](int f, int j) {
        int k = static_cast<int>(points_[f].size());
        return gap_base_[f] + (j + k - 1) % k;
    };
    for (const auto& c : cs) {
        int ja = point_index(c.face, c.a), jb = point_index(c.face, c.b);
        parent[find(after(c.face, ja))] = find(before(c.face, jb));
        parent[find(after(c.face, jb))] = find(before(c.face, ja));
    }
    std::vector<int> id(G, -1);
    region_of_gap_.assign(G, -1);
    for (int f = 0; f < F; ++f) {
        for (int g = gap_base_[f]; g < gap_base_[f + 1]; ++g) {
            int r = find(g);
            if (id[r] < 0) {
                id[r] = regions_++;
                region_face_.push_back(f);
            }
            region_of_gap_[g] = id[r];
        }
    }
    chords_.assign(regions_, {});
    for (const auto& c : cs) {
        int ja = point_index(c.face, c.a), jb = point_index(c.face, c.b);
        int r1 = region_of_gap_[after(c.face, ja)];
        int r2 = region_of_gap_[after(c.face, jb)];
        chords_[r1].push_back(c.from);
        if (r2 != r1) chords_[r2].push_back(c.from);
    }
}

int Subdivision::gap_at(int f, double x) const {
    const auto& v = points_[f];
    if (v.empty()) return gap_base_[f];
    auto j = static_cast<int>(std::upper_bound(v.begin(), v.end(), x) - v.begin()) - 1;
    if (j < 0) j = static_cast<int>(v.size()) - 1;
    return gap_base_[f] + j;
}

int Subdivision::region_at(int f, double x) const { return region_of_gap_[gap_at(f, x)]; }

}  // namespace levi
