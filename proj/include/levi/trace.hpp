#pragma once

// The moving curve during an extension, kept off the map.
//
// A trace stores one half of the curve's lift to the double cover: a sequence
// of passages running from some point x to its antipode tau(x). The full lift
// is the half followed by its tau image. Passages:
//   face    an interior point of face_of(dart), used to pin an anchor in a face
//   edge    a crossing of dart's edge at `pos` from origin(dart), going from the
//           face right of dart to the face on its left
//   vertex  a transversal pass through a vertex from wedge `dart` to wedge `out`
// A wedge y is the corner between y and sigma(y).

#include "levi/arrangement.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace levi {

enum class PassageKind : std::uint8_t { face, edge, vertex };
enum class Anchor : std::uint8_t { none, p, q };

// Placeholder positions for new crossings that must sit nearer to one endpoint
// of the edge than every existing crossing. Resolved by settle().
inline constexpr double kNearOrigin = -1.0;
inline constexpr double kNearHead = 2.0;

struct Passage {
    PassageKind kind = PassageKind::face;
    Dart dart = kNoDart;
    Dart out = kNoDart;
    double pos = 0.5;
    Anchor anchor = Anchor::none;

    static Passage marker(Dart d, Anchor a = Anchor::none) {
        return {PassageKind::face, d, kNoDart, 0.5, a};
    }
    static Passage cross(Dart d, double pos, Anchor a = Anchor::none) {
        return {PassageKind::edge, d, kNoDart, pos, a};
    }
    static Passage through(Dart in, Dart out, Anchor a = Anchor::none) {
        return {PassageKind::vertex, in, out, 0.5, a};
    }

    friend bool operator==(const Passage&, const Passage&) = default;
};

struct Trace {
    std::vector<Passage> half;

    std::optional<std::size_t> anchor_index(Anchor a) const;
};

/// Cover face the curve occupies just before / just after the passage.
int before_face(const CombMap& map, const Passage& p);
int after_face(const CombMap& map, const Passage& p);

Passage tau_passage(const CombMap& map, const Passage& p);
std::vector<Passage> lift(const CombMap& map, const Trace& trace);

/// Resolves placeholder positions and respaces the crossings on every cover
/// edge evenly, keeping their order. The lift must be tau-symmetric.
void settle(const CombMap& map, std::vector<Passage>& lift);

/// Replaces `count` passages of the lift starting at index `first` (cyclic)
/// with `repl`, mirrors the edit on the antipodal copy, and settles. count may
/// be zero (insertion before `first`). Requires count <= half length.
Trace splice(const CombMap& map, const std::vector<Passage>& lift, std::size_t first,
             std::size_t count, const std::vector<Passage>& repl);

/// Curves crossed by one passage (none for a face marker).
std::vector<CurveId> curves_crossed(const Arrangement& arr, const Passage& p);
/// Crossings of the quotient curve with each existing curve.
std::vector<int> crossing_counts(const Arrangement& arr, const Trace& trace);
int total_crossings(const Arrangement& arr, const Trace& trace);
bool parity_odd(const std::vector<int>& counts);

/// Throws InvalidTrace unless the lift is a simple closed curve in general
/// position: consecutive passages share faces, vertex passages are
/// transversal, crossings on an edge are distinct and interior, at most one
/// vertex passage per vertex, and the chords inside every face do not cross.
void check_trace(const CombMap& map, const Trace& trace);
bool is_valid_trace(const CombMap& map, const Trace& trace);

/// Boundary coordinate of a point where the curve enters / leaves a face.
/// A face with k boundary darts has coordinates in [0, k); dart i of the face
/// walk covers [i, i+1] and the corner before it sits at i.
double entry_coord(const CombMap& map, const Passage& p);
double exit_coord(const CombMap& map, const Passage& p);

/// Crossings of the lift on one cover edge, as coordinates along the edge's
/// smaller dart, sorted.
std::vector<double> edge_points(const CombMap& map, const std::vector<Passage>& lift, Dart d);

/// Regions of the faces cut by the lift. Each cover face boundary is split into
/// gaps by the chord endpoints; gaps joined by a chord side form one region.
class Subdivision {
public:
    Subdivision(const CombMap& map, const std::vector<Passage>& lift);

    int region_count() const noexcept { return regions_; }
    int region_face(int r) const { return region_face_[r]; }
    /// Region touching boundary coordinate x of cover face f (x not a point).
    int region_at(int f, double x) const;
    bool face_has_chords(int f) const { return !points_[f].empty(); }
    /// Lift indices of passages whose outgoing chord bounds region r.
    const std::vector<std::size_t>& chords_of(int r) const { return chords_[r]; }

private:
    int gap_at(int f, double x) const;

    std::vector<std::vector<double>> points_;
    std::vector<int> gap_base_;
    std::vector<int> region_of_gap_;
    std::vector<int> region_face_;
    std::vector<std::vector<std::size_t>> chords_;
    int regions_ = 0;
};

}  // namespace levi
