#include "levi/levi.hpp"

#include "levi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace levi {

namespace {

constexpr double kEps = 1e-9;

// Position along the cover cycle of one curve. The cycle has `len` edges;
// t = j + x is the point at fraction x along cycle[j], t = j is its origin.
struct CurveCoords {
    std::vector<Dart> cycle;
    std::vector<int> dart_index;
    std::vector<int> vertex_index;
    int len = 0;

    CurveCoords(const Arrangement& arr, CurveId c) : cycle(arr.curve_cycle(c)) {
        const auto& m = arr.map();
        len = static_cast<int>(cycle.size());
        dart_index.assign(m.size(), -1);
        vertex_index.assign(m.vertex_count(), -1);
        for (int j = 0; j < len; ++j) {
            dart_index[cycle[j]] = j;
            dart_index[m.alpha(cycle[j])] = j;
            vertex_index[m.vertex_of(cycle[j])] = j;
        }
    }

    double half() const { return len / 2.0; }

    double t_of(const CombMap& m, const Passage& p) const {
        if (p.kind == PassageKind::vertex) return vertex_index[m.vertex_of(p.dart)];
        int j = dart_index[p.dart];
        return cycle[j] == p.dart ? j + p.pos : j + 1.0 - p.pos;
    }

    // Dart of the edge of d pointing in the direction of travel.
    Dart walking(const CombMap& m, Dart d, bool forward) const {
        Dart c = cycle[dart_index[d]];
        return forward ? c : m.alpha(c);
    }

    double ahead(double from, double to, bool forward) const {
        double r = std::fmod(forward ? to - from : from - to, static_cast<double>(len));
        return r < 0 ? r + len : r;
    }
};

// Crossings of the fan on one side of the curve at head(w), for a strand that
// follows the curve closely while it walks along w.
void fan(const CombMap& m, Dart w, bool right, std::vector<Passage>& out) {
    const Dart back = m.alpha(w);
    const int half = m.degree(back) / 2;
    for (int i = 1; i < half; ++i) {
        if (right) {
            out.push_back(Passage::cross(m.sigma_pow(back, i), kNearOrigin));
        } else {
            Dart f = m.sigma_pow(back, -i);
            out.push_back(Passage::cross(m.alpha(f), kNearHead));
        }
    }
}

// Strand following the curve from t1 to t2 (both excluded) on one side.
std::vector<Passage> hug(const CombMap& m, const CurveCoords& cc, double t1, double t2,
                         bool forward, bool right) {
    std::vector<Passage> out;
    const double dist = cc.ahead(t1, t2, forward);
    if (forward) {
        for (int j = static_cast<int>(std::floor(t1)) + 1; j < t1 + dist - kEps; ++j) {
            int jm = ((j % cc.len) + cc.len) % cc.len;
            fan(m, cc.cycle[(jm - 1 + cc.len) % cc.len], right, out);
        }
    } else {
        for (int j = static_cast<int>(std::ceil(t1)) - 1; j > t1 - dist + kEps; --j) {
            int jm = ((j % cc.len) + cc.len) % cc.len;
            fan(m, m.alpha(cc.cycle[jm]), right, out);
        }
    }
    return out;
}

struct CurveCrossing {
    std::size_t idx;
    double t;
};

std::vector<CurveCrossing> crossings_on(const Arrangement& arr, const CurveCoords& cc,
                                        const std::vector<Passage>& L, CurveId c) {
    std::vector<CurveCrossing> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
        auto cs = curves_crossed(arr, L[i]);
        if (std::find(cs.begin(), cs.end(), c) != cs.end()) out.push_back({i, cc.t_of(arr.map(), L[i])});
    }
    return out;
}

// No other crossing strictly inside the curve arc from a to b.
bool innermost(const CurveCoords& cc, const std::vector<CurveCrossing>& xs, double a, double b,
               bool forward) {
    const double span = cc.ahead(a, b, forward);
    for (const auto& x : xs) {
        double r = cc.ahead(a, x.t, forward);
        if (r > kEps && r < span - kEps) return false;
    }
    return true;
}

bool anchor_free(const std::vector<Passage>& L, std::size_t first, std::size_t count,
                 std::size_t skip = static_cast<std::size_t>(-1)) {
    for (std::size_t s = 0; s < count; ++s) {
        std::size_t i = (first + s) % L.size();
        if (i != skip && L[i].anchor != Anchor::none) return false;
    }
    return true;
}

std::size_t arc_count(std::size_t from, std::size_t to, std::size_t n) { return (to + n - from) % n + 1; }

std::set<CurveId> anchor_curves(const Arrangement& arr, const Trace& t, Anchor a) {
    std::set<CurveId> out;
    if (auto i = t.anchor_index(a))
        for (CurveId c : curves_crossed(arr, t.half[*i])) out.insert(c);
    return out;
}

CurveId lowest_curve_at(const Arrangement& arr, Dart d) {
    auto cs = arr.curves_at_vertex(d);
    return *std::min_element(cs.begin(), cs.end());
}

}  // namespace

Arrangement one_line_arrangement() {
    auto map = CombMap::build({3, 2, 1, 0}, {1, 0, 3, 2}, {2, 3, 0, 1});
    return Arrangement(std::move(map), {0, 0, 0, 0});
}

Trace seed_curve(const Arrangement& arr, const CellRef& p, const SeedOptions& options) {
    const auto& m = arr.map();
    if (arr.size() == 0) throw Error("cannot seed a curve in the empty arrangement");
    Trace t;
    auto& out = t.half;
    auto hug_until = [&](Dart w, bool right, auto done) {
        while (!done(w)) {
            fan(m, w, right, out);
            w = m.straight(m.alpha(w));
        }
    };

    switch (p.kind) {
    case CellKind::face: {
        const int f = m.face_lift(p);
        const auto& walk = m.face_darts(f);
        CurveId alpha = arr.size();
        for (Dart d : walk) alpha = std::min(alpha, arr.curve_of(d));
        if (options.follow) {
            if (std::none_of(walk.begin(), walk.end(), [&](Dart d) { return arr.curve_of(d) == *options.follow; }))
                throw Error("seed curve does not bound the face");
            alpha = *options.follow;
        }
        Dart b = kNoDart;
        for (Dart d : walk)
            if (arr.curve_of(d) == alpha && (b == kNoDart || d < b)) b = d;
        if (!options.flip_side) {
            out.push_back(Passage::cross(m.alpha(b), 0.5));
            out.push_back(Passage::marker(b, Anchor::p));
            Dart stop = m.tau(b);
            // the first step already sits at head(b)
            Dart w = b;
            do {
                fan(m, w, true, out);
                w = m.straight(m.alpha(w));
            } while (w != stop);
        } else {
            Dart w0 = m.alpha(b);
            out.push_back(Passage::cross(w0, 0.5));
            out.push_back(Passage::marker(b, Anchor::p));
            Dart stop = m.tau(w0);
            Dart w = w0;
            do {
                fan(m, w, false, out);
                w = m.straight(m.alpha(w));
            } while (w != stop);
        }
        break;
    }
    case CellKind::edge: {
        if (options.follow && *options.follow != arr.curve_of(p.orbit))
            throw Error("seed curve does not contain the edge");
        Dart w0 = options.flip_side ? m.alpha(p.orbit) : p.orbit;
        out.push_back(Passage::cross(m.alpha(w0), 0.5, Anchor::p));
        Dart stop = m.tau(w0);
        Dart w = w0;
        do {
            fan(m, w, true, out);
            w = m.straight(m.alpha(w));
        } while (w != stop);
        break;
    }
    case CellKind::vertex: {
        const int v = m.vertex_lift(p);
        const int tv = m.tau_vertex(v);
        const auto& ring = m.vertex_darts(v);
        CurveId alpha = lowest_curve_at(arr, ring[0]);
        if (options.follow) {
            auto cs = arr.curves_at_vertex(ring[0]);
            if (std::find(cs.begin(), cs.end(), *options.follow) == cs.end())
                throw Error("seed curve does not pass through the vertex");
            alpha = *options.follow;
        }
        Dart a = kNoDart;
        for (Dart d : ring)
            if (arr.curve_of(d) == alpha && (a == kNoDart || d < a)) a = d;
        const int half = m.degree(a) / 2;
        auto reached = [&](Dart w) { return m.vertex_of(m.alpha(w)) == tv; };
        if (!options.flip_side) {
            out.push_back(Passage::through(m.sigma_pow(a, half), a, Anchor::p));
            hug_until(a, false, reached);
        } else {
            out.push_back(Passage::through(m.sigma_pow(a, half - 1), m.sigma_pow(a, -1), Anchor::p));
            hug_until(a, true, reached);
        }
        break;
    }
    }
    auto full = lift(m, t);
    settle(m, full);
    full.resize(full.size() / 2);
    t.half = std::move(full);
    return t;
}

Trace route_to_q(const Arrangement& arr, const Trace& trace, const CellRef& q) {
    const auto& m = arr.map();
    const auto L = lift(m, trace);
    const std::size_t h = trace.half.size();

    // q already on the curve: tag or pin it
    for (std::size_t i = 0; i < L.size(); ++i) {
        const auto& p = L[i];
        if (q.kind == CellKind::edge && p.kind == PassageKind::edge && m.edge_cell(p.dart) == q) {
            Trace t = trace;
            t.half[i % h].anchor = Anchor::q;
            return t;
        }
        if (q.kind == CellKind::vertex && p.kind == PassageKind::vertex && m.vertex_cell(p.dart) == q) {
            Trace t = trace;
            t.half[i % h].anchor = Anchor::q;
            return t;
        }
    }
    if (q.kind == CellKind::face) {
        for (std::size_t i = 0; i < L.size(); ++i) {
            int f = after_face(m, L[i]);
            if (m.face_cell(m.face_darts(f)[0]) == q)
                return splice(m, L, i + 1, 0, {Passage::marker(m.face_darts(f)[0], Anchor::q)});
        }
    }

    Subdivision sub(m, L);
    const int R = sub.region_count();

    struct Link {
        int to;
        Dart d;
        double lo, hi;
    };
    std::vector<std::vector<double>> cuts(m.size());
    for (const auto& p : L) {
        if (p.kind != PassageKind::edge) continue;
        Dart e = m.edge_of(p.dart);
        cuts[e].push_back(p.dart == e ? p.pos : 1.0 - p.pos);
    }
    std::vector<std::vector<Link>> adj(R);
    for (Dart d = 0; d < m.size(); ++d) {
        const Dart e = m.edge_of(d);
        std::vector<double> xs{0.0, 1.0};
        for (double x : cuts[e]) xs.push_back(d == e ? x : 1.0 - x);
        std::sort(xs.begin(), xs.end());
        for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
            double lo = xs[s], hi = xs[s + 1], mid = (lo + hi) / 2;
            int r1 = sub.region_at(m.face_of(d), m.face_index(d) + mid);
            int r2 = sub.region_at(m.face_of(m.alpha(d)), m.face_index(m.alpha(d)) + 1.0 - mid);
            adj[r1].push_back({r2, d, lo, hi});
        }
    }

    std::vector<std::vector<std::vector<Passage>>> tips(R);
    switch (q.kind) {
    case CellKind::face: {
        int f = m.face_lift(q);
        for (int g : {f, m.tau_face(f)}) {
            Dart d = m.face_darts(g)[0];
            tips[sub.region_at(g, 0.5)].push_back({Passage::marker(d, Anchor::q)});
        }
        break;
    }
    case CellKind::edge: {
        Dart e = q.orbit;
        for (Dart d : {e, m.alpha(e), m.tau(e), m.alpha(m.tau(e))}) {
            int r = sub.region_at(m.face_of(d), m.face_index(d) + 0.5);
            tips[r].push_back({Passage::cross(d, 1.0 / 3, Anchor::q), Passage::cross(m.alpha(d), 1.0 / 3)});
            tips[r].push_back({Passage::cross(d, 2.0 / 3, Anchor::q), Passage::cross(m.alpha(d), 2.0 / 3)});
        }
        break;
    }
    case CellKind::vertex: {
        int v = m.vertex_lift(q);
        for (int u : {v, m.tau_vertex(v)}) {
            for (Dart y : m.vertex_darts(u)) {
                const int half = m.degree(y) / 2;
                int r = sub.region_at(m.face_of(m.sigma(y)), m.face_index(m.sigma(y)));
                std::vector<Passage> up{Passage::through(y, m.sigma_pow(y, half), Anchor::q)};
                for (int i = half + 1; i <= 2 * half; ++i)
                    up.push_back(Passage::cross(m.sigma_pow(y, i), kNearOrigin));
                std::vector<Passage> down{Passage::through(y, m.sigma_pow(y, half), Anchor::q)};
                for (int i = half; i >= 1; --i)
                    down.push_back(Passage::cross(m.alpha(m.sigma_pow(y, i)), kNearHead));
                tips[r].push_back(std::move(up));
                tips[r].push_back(std::move(down));
            }
        }
        break;
    }
    }

    // breadth-first search over regions from every region the curve touches
    std::vector<int> parent(R, -2);
    std::vector<Link> via(R);
    std::deque<int> queue;
    for (int r = 0; r < R; ++r) {
        if (sub.face_has_chords(sub.region_face(r))) {
            parent[r] = -1;
            queue.push_back(r);
        }
    }
    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        if (!tips[r].empty()) {
            std::vector<Link> path;
            int s = r;
            while (parent[s] >= 0) {
                path.push_back(via[s]);
                s = parent[s];
            }
            std::reverse(path.begin(), path.end());
            for (std::size_t from : sub.chords_of(s)) {
                for (int side = 0; side < 2; ++side) {
                    for (const auto& tip : tips[r]) {
                        std::vector<Passage> repl;
                        for (const auto& l : path) {
                            double a = l.lo + (l.hi - l.lo) / 3, b = l.lo + 2 * (l.hi - l.lo) / 3;
                            repl.push_back(Passage::cross(l.d, side ? a : b));
                        }
                        repl.insert(repl.end(), tip.begin(), tip.end());
                        for (auto it = path.rbegin(); it != path.rend(); ++it) {
                            double a = it->lo + (it->hi - it->lo) / 3, b = it->lo + 2 * (it->hi - it->lo) / 3;
                            repl.push_back(Passage::cross(m.alpha(it->d), 1.0 - (side ? b : a)));
                        }
                        Trace t = splice(m, L, from + 1, 0, repl);
                        if (is_valid_trace(m, t)) return t;
                    }
                }
            }
        }
        for (const auto& l : adj[r]) {
            if (parent[l.to] != -2) continue;
            parent[l.to] = r;
            via[l.to] = l;
            queue.push_back(l.to);
        }
    }
    throw Unreachable();
}

std::optional<Bigon> find_bigon_on(const Arrangement& arr, const Trace& trace, CurveId curve) {
    const auto& m = arr.map();
    const auto L = lift(m, trace);
    const std::size_t h = trace.half.size();
    CurveCoords cc(arr, curve);
    const auto xs = crossings_on(arr, cc, L, curve);
    if (xs.size() < 6) return std::nullopt;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const auto& a = xs[j];
        const auto& b = xs[(j + 1) % xs.size()];
        if (a.idx >= h) continue;
        const double f = cc.ahead(a.t, b.t, true);
        if (std::abs(f - cc.half()) < kEps) continue;
        const bool forward = f < cc.half();
        if (!innermost(cc, xs, a.t, b.t, forward)) continue;
        const std::size_t count = arc_count(a.idx, b.idx, L.size());
        if (count > h || !anchor_free(L, a.idx, count)) continue;
        if (L[a.idx].kind != PassageKind::edge || L[b.idx].kind != PassageKind::edge) continue;

        Bigon g;
        g.curve = curve;
        g.first = a.idx;
        g.count = count;
        for (std::size_t s = 0; s < count; ++s) g.gamma_arc.push_back(L[(a.idx + s) % L.size()]);
        g.t_first = a.t;
        g.t_last = b.t;
        g.forward = forward;
        const Dart d1 = L[a.idx].dart;
        g.outer_right = d1 == cc.walking(m, d1, forward);
        Dart w = cc.walking(m, d1, forward);
        const Dart last = cc.walking(m, L[b.idx].dart, forward);
        g.alpha_arc.push_back(w);
        while (w != last) {
            w = m.straight(m.alpha(w));
            g.alpha_arc.push_back(w);
        }
        return g;
    }
    return std::nullopt;
}

std::optional<Bigon> find_reducible_bigon(const Arrangement& arr, const Trace& trace) {
    auto blocked = anchor_curves(arr, trace, Anchor::p);
    auto at_q = anchor_curves(arr, trace, Anchor::q);
    blocked.insert(at_q.begin(), at_q.end());
    const auto counts = crossing_counts(arr, trace);
    for (CurveId c = 0; c < arr.size(); ++c) {
        if (blocked.contains(c) || counts[c] < 3) continue;
        if (auto g = find_bigon_on(arr, trace, c)) return g;
    }
    return std::nullopt;
}

Trace remove_bigon(const Arrangement& arr, const Trace& trace, const Bigon& bigon) {
    const auto& m = arr.map();
    const auto L = lift(m, trace);
    if (bigon.first >= L.size() || bigon.count > trace.half.size() || bigon.count < 2 ||
        bigon.gamma_arc.size() != bigon.count)
        throw StaleBigon();
    for (std::size_t s = 0; s < bigon.count; ++s)
        if (!(L[(bigon.first + s) % L.size()] == bigon.gamma_arc[s])) throw StaleBigon();
    for (const auto* end : {&bigon.gamma_arc.front(), &bigon.gamma_arc.back()}) {
        if (end->kind != PassageKind::edge || arr.curve_of(end->dart) != bigon.curve) throw StaleBigon();
    }
    CurveCoords cc(arr, bigon.curve);
    auto repl = hug(m, cc, bigon.t_first, bigon.t_last, bigon.forward, bigon.outer_right);
    return splice(m, L, bigon.first, bigon.count, repl);
}

Trace anchored_reduce(const Arrangement& arr, const Trace& trace, Anchor anchor, CurveId curve) {
    const auto& m = arr.map();
    if (auto g = find_bigon_on(arr, trace, curve)) return remove_bigon(arr, trace, *g);

    const auto L = lift(m, trace);
    const std::size_t h = trace.half.size();
    CurveCoords cc(arr, curve);
    const auto xs = crossings_on(arr, cc, L, curve);
    if (xs.size() < 6) return trace;
    auto ip = trace.anchor_index(anchor);
    if (!ip) throw NoProgress("anchor missing from the trace");
    auto it = std::find_if(xs.begin(), xs.end(), [&](const CurveCrossing& x) { return x.idx == *ip; });
    if (it == xs.end()) throw NoProgress("anchor does not cross the curve");
    const std::size_t jp = static_cast<std::size_t>(it - xs.begin());
    const auto& x = xs[(jp + xs.size() - 1) % xs.size()];
    const auto& P = xs[jp];
    const auto& y = xs[(jp + 1) % xs.size()];

    const bool fwd1 = cc.ahead(x.t, P.t, true) < cc.half();
    const bool fwd2 = cc.ahead(P.t, y.t, true) < cc.half();
    if (fwd1 != fwd2) throw NoProgress("anchored arcs overlap on the curve");
    const bool fwd = fwd1;
    if (!innermost(cc, xs, x.t, P.t, fwd) || !innermost(cc, xs, P.t, y.t, fwd))
        throw NoProgress("anchored arcs are not innermost");
    const std::size_t count = arc_count(x.idx, y.idx, L.size());
    if (count > h || !anchor_free(L, x.idx, count, P.idx)) throw NoProgress("anchored arcs hold the other anchor");

    const Dart dx = L[x.idx].dart;
    const bool right = dx == cc.walking(m, dx, fwd);
    std::vector<Passage> repl = hug(m, cc, x.t, P.t, fwd, right);
    const Passage& old = L[P.idx];
    Passage again = old;
    if (old.kind == PassageKind::edge) {
        Dart w = cc.walking(m, old.dart, fwd);
        again.dart = right ? w : m.alpha(w);
        again.pos = again.dart == old.dart ? old.pos : 1.0 - old.pos;
    } else {
        const int jv = cc.vertex_index[m.vertex_of(old.dart)];
        const Dart w = fwd ? cc.cycle[(jv - 1 + cc.len) % cc.len] : m.alpha(cc.cycle[jv]);
        const Dart back = m.alpha(w);
        const int half = m.degree(back) / 2;
        again.dart = right ? back : m.sigma_pow(back, -1);
        again.out = m.sigma_pow(again.dart, half);
    }
    repl.push_back(again);
    auto tail = hug(m, cc, P.t, y.t, fwd, !right);
    repl.insert(repl.end(), tail.begin(), tail.end());
    return splice(m, L, x.idx, count, repl);
}

Trace normalize(const Arrangement& arr, const Trace& trace, NormalizeStats* stats) {
    const auto& m = arr.map();
    check_trace(m, trace);
    const auto at_p = anchor_curves(arr, trace, Anchor::p);
    const auto at_q = anchor_curves(arr, trace, Anchor::q);
    Trace cur = trace;
    auto counts = crossing_counts(arr, cur);
    int total = 0;
    for (int c : counts) total += c;
    NormalizeStats local;
    NormalizeStats& st = stats ? *stats : local;
    st = {};
    st.initial_total = total;
    st.step_budget = (total - arr.size()) / 2;

    while (true) {
        StepRecord rec;
        Trace next;
        if (auto g = find_reducible_bigon(arr, cur)) {
            rec.kind = StepKind::bigon;
            rec.curve = g->curve;
            next = remove_bigon(arr, cur, *g);
        } else {
            CurveId target = -1;
            for (CurveId c = 0; c < arr.size() && target < 0; ++c)
                if (counts[c] >= 3 && (at_p.contains(c) || at_q.contains(c))) target = c;
            if (target < 0) break;
            rec.kind = StepKind::anchored;
            rec.curve = target;
            next = anchored_reduce(arr, cur, at_p.contains(target) ? Anchor::p : Anchor::q, target);
        }
        check_trace(m, next);
        auto after = crossing_counts(arr, next);
        rec.total_before = total;
        rec.curve_before = counts[rec.curve];
        total = 0;
        for (int c : after) total += c;
        rec.total_after = total;
        rec.curve_after = after[rec.curve];
        rec.parity_odd = parity_odd(after);
        st.steps.push_back(rec);
        if (rec.total_after >= rec.total_before) throw NoProgress("step did not reduce crossings");
        if (static_cast<int>(st.steps.size()) > st.step_budget) throw NoProgress("step budget exceeded");
        cur = std::move(next);
        counts = std::move(after);
    }
    for (CurveId c = 0; c < arr.size(); ++c)
        if (counts[c] != 1)
            throw NoProgress("curve " + std::to_string(c) + " still crossed " + std::to_string(counts[c]) +
                             " times");
    return cur;
}

namespace {

struct Surgery {
    CombMap map;
    std::vector<CurveId> labels;
    AuditLog* audit = nullptr;

    void after_mutation() {
        if (!audit) return;
        ++audit->mutations;
        auto t = cells(map);
        if (t.quotient_euler() != 1 || t.cover_euler() != 2) ++audit->euler_violations;
        for (Dart d = 0; d < map.size(); ++d) {
            if (map.tau(map.alpha(d)) != map.alpha(map.tau(d)) || map.tau(map.sigma(d)) != map.sigma_inv(map.tau(d))) {
                ++audit->tau_violations;
                break;
            }
        }
    }
    void append_labels(CurveId c) {
        for (int i = 0; i < 4; ++i) labels.push_back(c);
    }
};

}  // namespace

FinalizeResult finalize(const Arrangement& arr, const Trace& trace, AuditLog* audit) {
    const auto& m0 = arr.map();
    const int n = arr.size();
    check_trace(m0, trace);
    const auto counts = crossing_counts(arr, trace);
    for (CurveId c = 0; c < n; ++c)
        if (counts[c] != 1)
            throw InvalidTrace("curve " + std::to_string(c) + " crossed " + std::to_string(counts[c]) + " times");

    const auto L = lift(m0, trace);
    const std::size_t h = trace.half.size();
    Surgery s{m0, arr.dart_curves(), audit};

    // split every crossed edge; record the corners the new curve uses there
    std::vector<Dart> in_corner(L.size(), kNoDart), out_corner(L.size(), kNoDart);
    std::vector<char> done(m0.size(), 0);
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i].kind != PassageKind::edge) continue;
        const Dart E = m0.edge_cell(L[i].dart).orbit;
        if (done[E]) continue;
        done[E] = 1;
        const Dart TE = m0.tau(E);
        std::vector<std::pair<double, std::size_t>> on_e, on_te;
        for (std::size_t k = 0; k < L.size(); ++k) {
            if (L[k].kind != PassageKind::edge) continue;
            const Dart d = L[k].dart;
            if (d == E || d == m0.alpha(E)) on_e.emplace_back(d == E ? L[k].pos : 1.0 - L[k].pos, k);
            if (d == TE || d == m0.alpha(TE)) on_te.emplace_back(d == TE ? L[k].pos : 1.0 - L[k].pos, k);
        }
        std::sort(on_e.begin(), on_e.end());
        std::sort(on_te.begin(), on_te.end());
        const CurveId c = arr.curve_of(E);
        Dart cur = E;
        for (std::size_t r = 0; r < on_e.size(); ++r) {
            auto sr = split_edge(s.map, cur);
            s.map = std::move(sr.map);
            s.append_labels(c);
            s.after_mutation();
            auto assign = [&](std::size_t k, Dart dir, Dart back, Dart fwd) {
                const bool along = L[k].dart == dir;
                in_corner[k] = along ? back : fwd;
                out_corner[k] = along ? fwd : back;
            };
            assign(on_e[r].second, E, sr.back, sr.forward);
            assign(on_te[r].second, TE, s.map.tau(sr.back), s.map.tau(sr.forward));
            cur = sr.forward;
        }
    }
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i].kind == PassageKind::vertex) {
            in_corner[i] = L[i].dart;
            out_corner[i] = L[i].out;
        }
    }

    // one chord per strand leaving a passage of the first half; add_chord mirrors it
    std::vector<std::size_t> real;
    for (std::size_t i = 0; i < L.size(); ++i)
        if (L[i].kind != PassageKind::face) real.push_back(i);
    std::vector<Dart> chord_from(L.size(), kNoDart);
    for (std::size_t k = 0; k < real.size(); ++k) {
        if (real[k] >= h) continue;
        const Dart a = out_corner[real[k]];
        const Dart b = in_corner[real[(k + 1) % real.size()]];
        auto cr = add_chord(s.map, s.map.face_cell(s.map.sigma(a)), a, b);
        s.map = std::move(cr.map);
        s.append_labels(n);
        s.after_mutation();
        chord_from[real[k]] = cr.first;
    }

    // darts that locate each anchor on the new curve
    Dart rep_p = kNoDart, rep_q = kNoDart;
    for (std::size_t i = 0; i < h; ++i) {
        if (L[i].anchor == Anchor::none) continue;
        Dart rep = kNoDart;
        if (L[i].kind == PassageKind::edge) {
            rep = in_corner[i];
        } else if (L[i].kind == PassageKind::vertex) {
            rep = L[i].dart;
        } else {
            std::size_t j = i;
            while (L[j].kind == PassageKind::face) j = (j + L.size() - 1) % L.size();
            rep = j < h ? chord_from[j] : s.map.tau(chord_from[j - h]);
        }
        (L[i].anchor == Anchor::p ? rep_p : rep_q) = rep;
    }

    // marker vertices disappear once their curve has real crossings
    bool again = true;
    while (again) {
        again = false;
        for (int v = 0; v < s.map.vertex_count(); ++v) {
            if (s.map.vertex_darts(v).size() != 2) continue;
            auto dr = dissolve_vertex(s.map, s.map.vertex_darts(v)[0]);
            std::vector<CurveId> labels(dr.map.size());
            for (Dart x = 0; x < static_cast<Dart>(dr.old_to_new.size()); ++x)
                if (dr.old_to_new[x] != kNoDart) labels[dr.old_to_new[x]] = s.labels[x];
            s.map = std::move(dr.map);
            s.labels = std::move(labels);
            s.after_mutation();
            rep_p = rep_p == kNoDart ? kNoDart : dr.old_to_new[rep_p];
            rep_q = rep_q == kNoDart ? kNoDart : dr.old_to_new[rep_q];
            again = true;
            break;
        }
    }

    Arrangement raw(std::move(s.map), std::move(s.labels));
    const auto order = bfs_relabeling(raw.map(), 0);
    FinalizeResult out;
    out.arrangement = relabel(raw, order);
    const auto& fm = out.arrangement.map();
    auto cell_for = [&](Dart rep, Anchor a) {
        if (rep == kNoDart) return CellRef{};
        auto i = trace.anchor_index(a);
        Dart d = order[rep];
        return trace.half[*i].kind == PassageKind::face ? fm.edge_cell(d) : fm.vertex_cell(d);
    };
    out.p_cell = cell_for(rep_p, Anchor::p);
    out.q_cell = cell_for(rep_q, Anchor::q);
    return out;
}

ExtendResult extend_detailed(const Arrangement& arr, const CellRef& p, const CellRef& q,
                             const ExtendOptions& options) {
    if (p == q || arr.size() == 0) throw SamePoint();
    if (auto c = shared_curve(arr, p, q)) throw SameLine(*c);
    ExtendResult r;
    r.seeded = seed_curve(arr, p, options.seed);
    check_trace(arr.map(), r.seeded);
    r.routed = route_to_q(arr, r.seeded, q);
    check_trace(arr.map(), r.routed);
    r.normalized = normalize(arr, r.routed, &r.stats);
    auto fin = finalize(arr, r.normalized, options.audit ? &r.audit : nullptr);
    auto report = validate(fin.arrangement);
    if (!report.ok)
        throw Error("extension produced an invalid arrangement: " + report.violations.front().kind);
    r.arrangement = std::move(fin.arrangement);
    r.p_cell = fin.p_cell;
    r.q_cell = fin.q_cell;
    return r;
}

Arrangement extend(const Arrangement& arr, const CellRef& p, const CellRef& q) {
    return extend_detailed(arr, p, q).arrangement;
}


}  // namespace levi
