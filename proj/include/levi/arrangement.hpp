#pragma once

#include "levi/map_core.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace levi {

using CurveId = int;

/// A pseudoline arrangement: a cover map whose edges carry curve labels.
/// Labels are stored per dart; both darts of an edge and its antipodal edge
/// share a label. The arrangement with no pseudolines has an empty map.
class Arrangement {
public:
    Arrangement() = default;
    /// Does not validate; see validate().
    Arrangement(CombMap map, std::vector<CurveId> dart_curve);

    const CombMap& map() const noexcept { return map_; }
    int size() const noexcept { return n_; }
    CurveId curve_of(Dart d) const { return curve_[d]; }
    CurveId curve_of_edge(const CellRef& edge) const { return curve_[edge.orbit]; }
    const std::vector<CurveId>& dart_curves() const noexcept { return curve_; }

    /// Distinct curves passing through the cover vertex of d, in rotation order
    /// starting at d.
    std::vector<CurveId> curves_at_vertex(Dart d) const;
    /// Cover cycle of a curve, starting at its smallest dart, continuing straight
    /// through every vertex. Requires the straight-through property.
    std::vector<Dart> curve_cycle(CurveId c) const;

    friend bool operator==(const Arrangement& a, const Arrangement& b) {
        return a.map_ == b.map_ && a.curve_ == b.curve_;
    }

private:
    CombMap map_;
    std::vector<CurveId> curve_;
    int n_ = 0;
};

struct Violation {
    std::string kind;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<std::vector<int>> pair_crossings;  // n x n; diagonal is 0
    std::vector<Violation> violations;

    bool pairs_ok() const;
};

ValidationReport validate(const Arrangement& arr);

/// Quotient vertices at which both curves pass. Throws SameCurve if a == b.
int crossing_count(const Arrangement& arr, CurveId a, CurveId b);

std::set<CurveId> curves_through(const Arrangement& arr, const CellRef& cell);

std::optional<CurveId> shared_curve(const Arrangement& arr, const CellRef& p, const CellRef& q);

struct DualLink {
    CellRef from;  // quotient face on the side of `via`
    CellRef to;    // quotient face on the side of alpha(via)
    CellRef edge;
    Dart via = kNoDart;
    CurveId curve = 0;
};

struct DualGraph {
    std::vector<CellRef> nodes;  // quotient faces, sorted
    std::vector<DualLink> links;  // one per quotient edge, sorted by edge
    /// For each quotient vertex (sorted), its darts in rotation order. The corner
    /// after dart y leads into face_cell(sigma(y)).
    std::vector<std::pair<CellRef, std::vector<Dart>>> corners;

    std::vector<std::size_t> links_of(const CellRef& face) const;
};

DualGraph dual_graph(const Arrangement& arr);

/// Quotient cells addressed by CLI ids: kind-wise position in sorted order.
CellRef cell_by_index(const Arrangement& arr, CellKind kind, int index);
int cell_index(const Arrangement& arr, const CellRef& cell);
std::string cell_name(const Arrangement& arr, const CellRef& cell);
/// Parses `face:<id>`, `edge:<id>` or `vertex:<id>`; throws Error on bad input.
CellRef parse_cell(const Arrangement& arr, const std::string& text);

/// Dart relabeling by breadth-first traversal from dart 0; labels carried along.
Arrangement canonical_relabel(const Arrangement& arr);
Arrangement relabel(const Arrangement& arr, std::span<const Dart> old_to_new);

}  // namespace levi
