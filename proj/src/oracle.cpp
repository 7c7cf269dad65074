#include "levi/oracle.hpp"

#include "levi/errors.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <random>

namespace levi {

Signature canonical_signature(std::vector<CellRef> cells) {
    if (cells.empty()) return cells;
    Signature best;
    const std::size_t n = cells.size();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < n; ++r) {
            Signature s;
            s.reserve(n);
            for (std::size_t k = 0; k < n; ++k) s.push_back(cells[(r + k) % n]);
            if (best.empty() || s < best) best = std::move(s);
        }
        std::reverse(cells.begin(), cells.end());
    }
    return best;
}

Signature signature_of(const Arrangement& arr, const Trace& trace) {
    const auto& m = arr.map();
    std::vector<CellRef> cells;
    for (const auto& p : trace.half) {
        if (p.kind == PassageKind::edge) cells.push_back(m.edge_cell(p.dart));
        if (p.kind == PassageKind::vertex) cells.push_back(m.vertex_cell(p.dart));
    }
    return canonical_signature(std::move(cells));
}

int default_max_len(const Arrangement& arr) {
    return static_cast<int>(cells(arr.map()).edges.size()) + 2;
}

std::set<Signature> brute_extend(const Arrangement& arr, const CellRef& p, const CellRef& q, int max_len) {
    if (p == q || arr.size() == 0) throw SamePoint();
    if (auto c = shared_curve(arr, p, q)) throw SameLine(*c);
    const auto& m = arr.map();
    const int n = arr.size();

    std::set<Signature> found;
    std::vector<char> face_seen(m.size(), 0);  // keyed by quotient face orbit dart
    std::vector<char> crossed(n, 0);
    std::vector<CellRef> seq;
    int n_crossed = 0;
    int start_face = -1;

    auto qcell_face = [&](int f) { return m.face_cell(m.face_darts(f)[0]); };
    auto hits_q = [&](const CellRef& c) { return c == q; };

    std::function<void(int, bool)> dfs = [&](int f, bool q_seen) {
        if (n_crossed == n) {
            if (f == m.tau_face(start_face) && q_seen) found.insert(canonical_signature(seq));
            return;
        }
        if (static_cast<int>(seq.size()) >= max_len) return;
        for (Dart d : m.face_darts(f)) {
            // cross the edge of d
            const CurveId c = arr.curve_of(d);
            if (!crossed[c]) {
                const int g = m.face_of(m.alpha(d));
                const CellRef gc = qcell_face(g);
                const bool closing = n_crossed + 1 == n && g == m.tau_face(start_face);
                if (closing || !face_seen[gc.orbit]) {
                    const CellRef e = m.edge_cell(d);
                    crossed[c] = 1;
                    ++n_crossed;
                    if (!closing) face_seen[gc.orbit] = 1;
                    seq.push_back(e);
                    dfs(g, q_seen || hits_q(e) || hits_q(gc));
                    seq.pop_back();
                    if (!closing) face_seen[gc.orbit] = 0;
                    --n_crossed;
                    crossed[c] = 0;
                }
            }
            // pass through the vertex at the corner before d
            const Dart y = m.sigma_inv(d);
            const auto cs = arr.curves_at_vertex(y);
            if (std::any_of(cs.begin(), cs.end(), [&](CurveId k) { return crossed[k]; })) continue;
            const Dart out = m.sigma_pow(y, m.degree(y) / 2);
            const int g = m.face_of_corner(out);
            const CellRef gc = qcell_face(g);
            const int after = n_crossed + static_cast<int>(cs.size());
            const bool closing = after == n && g == m.tau_face(start_face);
            if (!closing && face_seen[gc.orbit]) continue;
            const CellRef v = m.vertex_cell(y);
            for (CurveId k : cs) crossed[k] = 1;
            n_crossed = after;
            if (!closing) face_seen[gc.orbit] = 1;
            seq.push_back(v);
            dfs(g, q_seen || hits_q(v) || hits_q(gc));
            seq.pop_back();
            if (!closing) face_seen[gc.orbit] = 0;
            n_crossed -= static_cast<int>(cs.size());
            for (CurveId k : cs) crossed[k] = 0;
        }
    };

    auto enter = [&](int f0) {
        start_face = f0;
        face_seen[qcell_face(f0).orbit] = 1;
    };
    auto leave = [&](int f0) { face_seen[qcell_face(f0).orbit] = 0; };

    switch (p.kind) {
    case CellKind::face: {
        const int f0 = m.face_lift(p);
        enter(f0);
        dfs(f0, hits_q(p));
        leave(f0);
        break;
    }
    case CellKind::edge: {
        const Dart e = p.orbit;
        const int f0 = m.face_of(e);
        const int g = m.face_of(m.alpha(e));
        enter(f0);
        const CellRef gc = qcell_face(g);
        const bool closing = n == 1 && g == m.tau_face(f0);
        if (closing || !face_seen[gc.orbit]) {
            crossed[arr.curve_of(e)] = 1;
            n_crossed = 1;
            if (!closing) face_seen[gc.orbit] = 1;
            seq.push_back(p);
            dfs(g, hits_q(gc) || hits_q(qcell_face(f0)));
            seq.clear();
            if (!closing) face_seen[gc.orbit] = 0;
            n_crossed = 0;
            crossed[arr.curve_of(e)] = 0;
        }
        leave(f0);
        break;
    }
    case CellKind::vertex: {
        const int v = m.vertex_lift(p);
        const auto& ring = m.vertex_darts(v);
        const int half = static_cast<int>(ring.size()) / 2;
        const auto cs = arr.curves_at_vertex(ring[0]);
        for (int i = 0; i < half; ++i) {
            const Dart y = ring[i];
            const int f0 = m.face_of_corner(y);
            const int g = m.face_of_corner(m.sigma_pow(y, half));
            enter(f0);
            const CellRef gc = qcell_face(g);
            const int after = static_cast<int>(cs.size());
            const bool closing = after == n && g == m.tau_face(f0);
            if (closing || !face_seen[gc.orbit]) {
                for (CurveId k : cs) crossed[k] = 1;
                n_crossed = after;
                if (!closing) face_seen[gc.orbit] = 1;
                seq.push_back(p);
                dfs(g, hits_q(gc) || hits_q(qcell_face(f0)));
                seq.clear();
                if (!closing) face_seen[gc.orbit] = 0;
                n_crossed = 0;
                for (CurveId k : cs) crossed[k] = 0;
            }
            leave(f0);
        }
        break;
    }
    }
    return found;
}

CanonicalForm canonical_form(const Arrangement& arr) {
    const auto& m = arr.map();
    const Dart D = m.size();
    std::vector<std::int32_t> best;
    std::vector<std::int32_t> code;
    std::vector<Dart> inverse(D);
    for (Dart s = 0; s < D; ++s) {
        const auto order = bfs_relabeling(m, s);
        for (Dart d = 0; d < D; ++d) inverse[order[d]] = d;
        code.assign(1, D);
        for (Dart x = 0; x < D; ++x) code.push_back(order[m.sigma(inverse[x])]);
        for (Dart x = 0; x < D; ++x) code.push_back(order[m.alpha(inverse[x])]);
        for (Dart x = 0; x < D; ++x) code.push_back(order[m.tau(inverse[x])]);
        std::vector<int> rename(arr.size(), -1);
        int next = 0;
        for (Dart x = 0; x < D; ++x) {
            int& r = rename[arr.curve_of(inverse[x])];
            if (r < 0) r = next++;
            code.push_back(r);
        }
        if (best.empty() || code < best) best = code;
    }
    if (best.empty()) best.assign(1, 0);
    CanonicalForm out(best.size() * sizeof(std::int32_t), '\0');
    std::memcpy(out.data(), best.data(), out.size());
    return out;
}

bool iso(const Arrangement& a, const Arrangement& b) {
    return a.size() == b.size() && a.map().size() == b.map().size() && canonical_form(a) == canonical_form(b);
}

Arrangement wiring_arrangement(int n, const std::vector<WiringStep>& steps) {
    if (n < 0) throw Error("negative wire count");
    if (n == 0) return {};
    if (n == 1) {
        if (!steps.empty()) throw Error("a single wire cannot cross");
        auto map = CombMap::build({3, 2, 1, 0}, {1, 0, 3, 2}, {2, 3, 0, 1});
        return Arrangement(std::move(map), {0, 0, 0, 0});
    }

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> wires_at;          // per crossing: wires bottom to top before it
    std::vector<std::vector<int>> visits(n);         // per wire: crossings in order
    std::vector<std::vector<int>> position(n);       // per wire: index of the crossing in wires_at
    std::vector<std::vector<char>> met(n, std::vector<char>(n, 0));
    for (const auto& s : steps) {
        if (s.size < 2 || s.level < 0 || s.level + s.size > n) throw Error("wiring step out of range");
        std::vector<int> group(perm.begin() + s.level, perm.begin() + s.level + s.size);
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                if (met[group[a]][group[b]]) throw Error("wires cross twice");
                met[group[a]][group[b]] = met[group[b]][group[a]] = 1;
            }
        const int v = static_cast<int>(wires_at.size());
        wires_at.push_back(group);
        for (int w : group) visits[w].push_back(v);
        std::reverse(perm.begin() + s.level, perm.begin() + s.level + s.size);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!met[a][b]) throw Error("wires " + std::to_string(a) + " and " + std::to_string(b) + " never cross");

    // darts of wire w, segment i: base + 4i + {forward, reverse, tau forward, tau reverse}
    std::vector<Dart> base(n + 1, 0);
    for (int w = 0; w < n; ++w) base[w + 1] = base[w] + 4 * static_cast<Dart>(visits[w].size());
    const Dart D = base[n];
    std::vector<Dart> sigma(D, kNoDart), alpha(D), tau(D);
    std::vector<CurveId> labels(D);
    for (int w = 0; w < n; ++w) {
        for (Dart i = 0; i < static_cast<Dart>(visits[w].size()); ++i) {
            const Dart f = base[w] + 4 * i;
            alpha[f] = f + 1;
            alpha[f + 1] = f;
            alpha[f + 2] = f + 3;
            alpha[f + 3] = f + 2;
            tau[f] = f + 2;
            tau[f + 2] = f;
            tau[f + 1] = f + 3;
            tau[f + 3] = f + 1;
            for (int k = 0; k < 4; ++k) labels[f + k] = w;
        }
    }
    auto out_dart = [&](int w, int v) {
        auto it = std::find(visits[w].begin(), visits[w].end(), v);
        return base[w] + 4 * static_cast<Dart>(it - visits[w].begin());
    };
    auto back_dart = [&](int w, int v) {
        auto it = std::find(visits[w].begin(), visits[w].end(), v);
        auto i = static_cast<Dart>(it - visits[w].begin());
        if (i > 0) return base[w] + 4 * (i - 1) + 1;
        // arriving from the antipodal copy of the last crossing
        return base[w] + 4 * (static_cast<Dart>(visits[w].size()) - 1) + 3;
    };
    for (int v = 0; v < static_cast<int>(wires_at.size()); ++v) {
        std::vector<Dart> ring;
        for (int w : wires_at[v]) ring.push_back(back_dart(w, v));
        for (int w : wires_at[v]) ring.push_back(out_dart(w, v));
        const std::size_t k = ring.size();
        for (std::size_t i = 0; i < k; ++i) {
            sigma[ring[i]] = ring[(i + 1) % k];
            // sigma(tau x) = tau(sigma^-1 x)
            sigma[tau[ring[i]]] = tau[ring[(i + k - 1) % k]];
        }
    }
    auto map = CombMap::build(std::move(sigma), std::move(alpha), std::move(tau));
    return Arrangement(std::move(map), std::move(labels));
}

std::vector<std::vector<int>> simple_wiring_words(int n) {
    std::vector<std::vector<int>> words;
    if (n < 2) {
        words.emplace_back();
        return words;
    }
    const int length = n * (n - 1) / 2;
    std::vector<int> perm(n), word;
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::function<void()> dfs = [&]() {
        if (static_cast<int>(word.size()) == length) {
            words.push_back(word);
            return;
        }
        for (int k = 0; k + 1 < n; ++k) {
            if (perm[k] > perm[k + 1]) continue;
            // commuting neighbours appear in increasing order only
            if (!word.empty() && std::abs(word.back() - k) >= 2 && k < word.back()) continue;
            std::swap(perm[k], perm[k + 1]);
            word.push_back(k);
            dfs();
            word.pop_back();
            std::swap(perm[k], perm[k + 1]);
        }
    };
    dfs();
    return words;
}

std::vector<Arrangement> enumerate_simple(int n) {
    if (n < 1 || n > 6) throw Error("enumeration supports 1 <= n <= 6");
    std::vector<Arrangement> out;
    std::set<CanonicalForm> seen;
    for (const auto& word : simple_wiring_words(n)) {
        std::vector<WiringStep> steps;
        for (int k : word) steps.push_back({k, 2});
        auto arr = canonical_relabel(wiring_arrangement(n, steps));
        if (seen.insert(canonical_form(arr)).second) out.push_back(std::move(arr));
    }
    return out;
}

Arrangement random_arrangement(int n, std::uint64_t seed, RandomMode mode) {
    if (n < 1) throw Error("random arrangement needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<WiringStep> steps;
    auto run_from = [&](int k) {
        int len = 1;
        while (k + len < n && perm[k + len - 1] < perm[k + len]) ++len;
        return len;
    };
    bool first = true;
    while (true) {
        std::vector<int> open;
        for (int k = 0; k + 1 < n; ++k)
            if (perm[k] < perm[k + 1]) open.push_back(k);
        if (open.empty()) break;
        WiringStep s;
        if (mode == RandomMode::merged && first && n >= 3) {
            s.level = 0;
            s.size = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
        } else {
            s.level = open[rng() % open.size()];
            const int longest = run_from(s.level);
            s.size = 2;
            if (mode == RandomMode::merged && longest > 2 && rng() % 2 == 0)
                s.size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(longest - 1));
        }
        first = false;
        steps.push_back(s);
        std::reverse(perm.begin() + s.level, perm.begin() + s.level + s.size);
    }
    return canonical_relabel(wiring_arrangement(n, steps));
}

}  // namespace levi
