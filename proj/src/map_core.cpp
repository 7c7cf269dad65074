#include "levi/map_core.hpp"

#include "levi/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace levi {

std::string to_string(CellKind kind) {
    switch (kind) {
    case CellKind::vertex: return "vertex";
    case CellKind::edge: return "edge";
    case CellKind::face: return "face";
    }
    return "?";
}

std::string to_string(const CellRef& cell) {
    return to_string(cell.kind) + "#" + std::to_string(cell.orbit);
}

namespace {

bool is_permutation_of_range(const std::vector<Dart>& p) {
    std::vector<char> seen(p.size(), 0);
    for (Dart x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

void check_involution(const std::vector<Dart>& p, const std::string& name) {
    if (!is_permutation_of_range(p)) throw InvalidMap(name + " not a permutation");
    for (std::size_t d = 0; d < p.size(); ++d) {
        if (p[d] == static_cast<Dart>(d)) throw InvalidMap(name + " not fixed-point free");
        if (p[p[d]] != static_cast<Dart>(d)) throw InvalidMap(name + " not an involution");
    }
}

}  // namespace

Dart CombMap::sigma_pow(Dart d, int k) const {
    int deg = degree(d);
    k %= deg;
    if (k < 0) k += deg;
    const auto& ring = vertex_darts_[vertex_id_[d]];
    // ring is in sigma order; locate d once instead of stepping k times
    auto it = std::find(ring.begin(), ring.end(), d);
    auto i = static_cast<int>(it - ring.begin());
    return ring[(i + k) % deg];
}

CombMap CombMap::build(std::vector<Dart> sigma, std::vector<Dart> alpha, std::vector<Dart> tau) {
    if (sigma.size() != alpha.size() || sigma.size() != tau.size())
        throw InvalidMap("permutations act on different dart ranges");
    CombMap m;
    if (sigma.empty()) return m;
    if (!is_permutation_of_range(sigma)) throw InvalidMap("sigma not a permutation");
    check_involution(alpha, "alpha");
    check_involution(tau, "tau");
    const auto n = static_cast<Dart>(sigma.size());
    std::vector<Dart> sigma_inv(n);
    for (Dart d = 0; d < n; ++d) sigma_inv[sigma[d]] = d;
    for (Dart d = 0; d < n; ++d) {
        if (tau[alpha[d]] != alpha[tau[d]]) throw InvalidMap("tau and alpha do not commute");
        if (tau[sigma[d]] != sigma_inv[tau[d]]) throw InvalidMap("tau does not reverse sigma");
    }
    m.sigma_ = std::move(sigma);
    m.alpha_ = std::move(alpha);
    m.tau_ = std::move(tau);
    m.sigma_inv_ = std::move(sigma_inv);
    m.index();

    // connectivity over sigma and alpha
    std::vector<char> seen(n, 0);
    std::vector<Dart> stack{0};
    seen[0] = 1;
    Dart reached = 1;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (Dart e : {m.sigma_[d], m.alpha_[d], m.sigma_inv_[d]}) {
            if (!seen[e]) {
                seen[e] = 1;
                ++reached;
                stack.push_back(e);
            }
        }
    }
    if (reached != n) throw InvalidMap("map is not connected");

    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.tau_vertex(v) == v) throw InvalidMap("tau fixes a vertex");
    for (Dart d = 0; d < n; ++d)
        if (m.edge_of(m.tau_[d]) == m.edge_of(d)) throw InvalidMap("tau fixes an edge");
    for (int f = 0; f < m.face_count(); ++f)
        if (m.tau_face(f) == f) throw InvalidMap("tau fixes a face");
    int chi = m.vertex_count() - m.edge_count() + m.face_count();
    if (chi != 2)
        throw InvalidMap("cover euler characteristic is " + std::to_string(chi) + ", expected 2");
    return m;
}

void CombMap::index() {
    const auto n = size();
    vertex_id_.assign(n, -1);
    face_id_.assign(n, -1);
    face_pos_.assign(n, -1);
    vertex_darts_.clear();
    face_darts_.clear();
    for (Dart d = 0; d < n; ++d) {
        if (vertex_id_[d] < 0) {
            const int id = static_cast<int>(vertex_darts_.size());
            auto& ring = vertex_darts_.emplace_back();
            Dart e = d;
            do {
                vertex_id_[e] = id;
                ring.push_back(e);
                e = sigma_[e];
            } while (e != d);
        }
        if (face_id_[d] < 0) {
            const int id = static_cast<int>(face_darts_.size());
            auto& walk = face_darts_.emplace_back();
            Dart e = d;
            do {
                face_id_[e] = id;
                face_pos_[e] = static_cast<int>(walk.size());
                walk.push_back(e);
                e = phi(e);
            } while (e != d);
        }
    }
}

CellRef CombMap::vertex_cell(Dart d) const {
    const auto& a = vertex_darts_[vertex_id_[d]];
    const auto& b = vertex_darts_[vertex_id_[tau_[d]]];
    return {CellKind::vertex, std::min(a.front(), b.front())};
}

CellRef CombMap::edge_cell(Dart d) const {
    return {CellKind::edge, std::min(edge_of(d), edge_of(tau_[d]))};
}

CellRef CombMap::face_cell(Dart d) const {
    const auto& a = face_darts_[face_id_[d]];
    const auto& b = face_darts_[tau_face(face_id_[d])];
    return {CellKind::face, std::min(a.front(), b.front())};
}

CellTable cells(const CombMap& map) {
    CellTable t;
    if (map.empty()) {
        t.faces.push_back({CellKind::face, kNoDart});
        return t;
    }
    t.cover_vertices = map.vertex_count();
    t.cover_edges = map.edge_count();
    t.cover_faces = map.face_count();
    for (int v = 0; v < map.vertex_count(); ++v) {
        auto c = map.vertex_cell(map.vertex_darts(v).front());
        if (c.orbit == map.vertex_darts(v).front()) t.vertices.push_back(c);
    }
    for (Dart d = 0; d < map.size(); ++d) {
        auto c = map.edge_cell(d);
        if (c.orbit == d) t.edges.push_back(c);
    }
    for (int f = 0; f < map.face_count(); ++f) {
        auto c = map.face_cell(map.face_darts(f).front());
        if (c.orbit == map.face_darts(f).front()) t.faces.push_back(c);
    }
    std::sort(t.vertices.begin(), t.vertices.end());
    std::sort(t.faces.begin(), t.faces.end());
    return t;
}

bool is_contractible(const CombMap& map, std::span<const Dart> walk) {
    if (walk.empty()) return true;
    bool flipped = false;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        Dart cur = walk[i];
        Dart next = walk[(i + 1) % walk.size()];
        if (cur < 0 || cur >= map.size() || next < 0 || next >= map.size())
            throw MalformedWalk("dart out of range");
        int head = map.vertex_of(map.alpha(cur));
        int origin = map.vertex_of(next);
        if (origin == head) continue;
        if (origin == map.tau_vertex(head)) {
            flipped = !flipped;
            continue;
        }
        throw MalformedWalk("step " + std::to_string(i) + " is not incident to the next");
    }
    return !flipped;
}

SplitResult split_edge(const CombMap& map, Dart d) {
    const Dart n = map.size();
    auto sigma = std::vector<Dart>(map.sigma_array().begin(), map.sigma_array().end());
    auto alpha = std::vector<Dart>(map.alpha_array().begin(), map.alpha_array().end());
    auto tau = std::vector<Dart>(map.tau_array().begin(), map.tau_array().end());
    sigma.resize(n + 4);
    alpha.resize(n + 4);
    tau.resize(n + 4);

    auto cut = [&](Dart a, Dart back, Dart fwd) {
        Dart b = alpha[a];
        alpha[a] = back;
        alpha[back] = a;
        alpha[b] = fwd;
        alpha[fwd] = b;
        sigma[back] = fwd;
        sigma[fwd] = back;
    };
    const Dart td = map.tau(d);
    cut(d, n, n + 1);
    cut(td, n + 2, n + 3);
    tau[n] = n + 2;
    tau[n + 2] = n;
    tau[n + 1] = n + 3;
    tau[n + 3] = n + 1;

    SplitResult r;
    r.map = CombMap::build(std::move(sigma), std::move(alpha), std::move(tau));
    r.back = n;
    r.forward = n + 1;
    r.vertex = r.map.vertex_cell(n);
    return r;
}

SplitResult split_edge(const CombMap& map, const CellRef& edge) {
    return split_edge(map, edge.orbit);
}

ChordResult add_chord(const CombMap& map, const CellRef& face, Dart corner_a, Dart corner_b) {
    const Dart n = map.size();
    if (corner_a < 0 || corner_a >= n || corner_b < 0 || corner_b >= n) throw CornersNotCofacial();
    const int f = map.face_of_corner(corner_a);
    if (f != map.face_of_corner(corner_b)) throw CornersNotCofacial();
    if (map.face_cell(map.sigma(corner_a)) != face) throw CornersNotCofacial();

    auto sigma = std::vector<Dart>(map.sigma_array().begin(), map.sigma_array().end());
    auto alpha = std::vector<Dart>(map.alpha_array().begin(), map.alpha_array().end());
    auto tau = std::vector<Dart>(map.tau_array().begin(), map.tau_array().end());
    sigma.resize(n + 4);
    alpha.resize(n + 4);
    tau.resize(n + 4);

    const Dart g1 = n, g2 = n + 1, t1 = n + 2, t2 = n + 3;
    auto insert_after = [&](Dart y, Dart g) {
        sigma[g] = sigma[y];
        sigma[y] = g;
    };
    auto insert_before = [&](Dart z, Dart g) {
        Dart y = z;
        while (sigma[y] != z) y = sigma[y];
        insert_after(y, g);
    };
    insert_after(corner_a, g1);
    insert_after(corner_a == corner_b ? g1 : corner_b, g2);
    // tau(g) must satisfy sigma(tau g) = tau(sigma^-1 g)
    insert_before(map.tau(corner_a), t1);
    insert_before(corner_a == corner_b ? t1 : map.tau(corner_b), t2);
    alpha[g1] = g2;
    alpha[g2] = g1;
    alpha[t1] = t2;
    alpha[t2] = t1;
    tau[g1] = t1;
    tau[t1] = g1;
    tau[g2] = t2;
    tau[t2] = g2;

    ChordResult r;
    r.map = CombMap::build(std::move(sigma), std::move(alpha), std::move(tau));
    r.first = g1;
    r.second = g2;
    r.edge = r.map.edge_cell(g1);
    return r;
}

DissolveResult dissolve_vertex(const CombMap& map, Dart d) {
    if (map.degree(d) != 2) throw InvalidMap("dissolve_vertex needs a degree-2 vertex");
    const Dart n = map.size();
    const Dart a = d, b = map.sigma(d);
    if (map.alpha(a) == b) throw InvalidMap("cannot dissolve the vertex of a loop");
    std::vector<char> removed(n, 0);
    for (Dart x : {a, b, map.tau(a), map.tau(b)}) removed[x] = 1;

    auto sigma = std::vector<Dart>(map.sigma_array().begin(), map.sigma_array().end());
    auto alpha = std::vector<Dart>(map.alpha_array().begin(), map.alpha_array().end());
    auto tau = std::vector<Dart>(map.tau_array().begin(), map.tau_array().end());
    for (Dart x : {a, map.tau(a)}) {
        Dart y = sigma[x];
        Dart xa = alpha[x], ya = alpha[y];
        alpha[xa] = ya;
        alpha[ya] = xa;
    }

    DissolveResult r;
    r.old_to_new.assign(n, kNoDart);
    Dart next = 0;
    for (Dart x = 0; x < n; ++x)
        if (!removed[x]) r.old_to_new[x] = next++;
    std::vector<Dart> s2(next), a2(next), t2(next);
    for (Dart x = 0; x < n; ++x) {
        if (removed[x]) continue;
        s2[r.old_to_new[x]] = r.old_to_new[sigma[x]];
        a2[r.old_to_new[x]] = r.old_to_new[alpha[x]];
        t2[r.old_to_new[x]] = r.old_to_new[tau[x]];
    }
    r.map = CombMap::build(std::move(s2), std::move(a2), std::move(t2));
    return r;
}

std::vector<Dart> bfs_relabeling(const CombMap& map, Dart start) {
    const Dart n = map.size();
    std::vector<Dart> order(n, kNoDart);
    if (n == 0) return order;
    Dart next = 0;
    std::deque<Dart> queue{start};
    order[start] = next++;
    while (!queue.empty()) {
        Dart d = queue.front();
        queue.pop_front();
        for (Dart e : {map.sigma(d), map.alpha(d), map.tau(d)}) {
            if (order[e] == kNoDart) {
                order[e] = next++;
                queue.push_back(e);
            }
        }
    }
    return order;
}

CombMap relabel(const CombMap& map, std::span<const Dart> old_to_new) {
    const Dart n = map.size();
    std::vector<Dart> s(n), a(n), t(n);
    for (Dart d = 0; d < n; ++d) {
        s[old_to_new[d]] = old_to_new[map.sigma(d)];
        a[old_to_new[d]] = old_to_new[map.alpha(d)];
        t[old_to_new[d]] = old_to_new[map.tau(d)];
    }
    return CombMap::build(std::move(s), std::move(a), std::move(t));
}

}  // namespace levi
