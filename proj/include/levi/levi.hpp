#pragma once

// Insertion of a new pseudoline through two prescribed cells.
//
// The driver seeds a curve through p that crosses every pseudoline once,
// pushes a finger out to q, and then removes bigons until every pseudoline is
// crossed once again, keeping the crossings at p and q. The finished trace is
// cut into the map.

#include "levi/trace.hpp"

#include <optional>
#include <vector>

namespace levi {

struct SeedOptions {
    std::optional<CurveId> follow;  // curve to run alongside; default lowest eligible
    bool flip_side = false;         // run along the other side of that curve
};

Trace seed_curve(const Arrangement& arr, const CellRef& p, const SeedOptions& options = {});

/// Extends the trace so that it passes through q, tagging the passage at q.
/// Throws Unreachable if no finger can reach q.
Trace route_to_q(const Arrangement& arr, const Trace& trace, const CellRef& q);

/// A bigon between the trace and a curve: the lift arc between two consecutive
/// crossings with `curve` and the shorter arc of that curve between the same
/// points. Only innermost bigons (no other crossing on the curve arc) whose
/// trace arc avoids the anchors are produced.
struct Bigon {
    CurveId curve = 0;
    std::size_t first = 0;  // lift index of the opening crossing
    std::size_t count = 0;  // passages in the trace arc, both crossings included
    std::vector<Passage> gamma_arc;
    std::vector<Dart> alpha_arc;  // darts of the curve arc, in the direction of travel
    double t_first = 0, t_last = 0;
    bool forward = true;  // travel direction along the curve's cover cycle
    bool outer_right = true;  // the replacement follows the right side of alpha_arc
};

/// Lowest curve not through an anchor that is crossed three or more times,
/// first qualifying bigon along the trace.
std::optional<Bigon> find_reducible_bigon(const Arrangement& arr, const Trace& trace);
/// First innermost bigon on one curve, ignoring whether the curve meets an anchor.
std::optional<Bigon> find_bigon_on(const Arrangement& arr, const Trace& trace, CurveId curve);

/// Reroutes the trace arc of the bigon along the outside of the curve arc.
/// Throws StaleBigon if the certificate does not match the trace.
Trace remove_bigon(const Arrangement& arr, const Trace& trace, const Bigon& bigon);

/// Reduces the crossings with a curve through one anchor to the single
/// crossing at that anchor, by one step. Throws NoProgress when neither an
/// anchor-free bigon nor the paired reroute around the anchor applies.
Trace anchored_reduce(const Arrangement& arr, const Trace& trace, Anchor anchor, CurveId curve);

enum class StepKind { bigon, anchored };

struct StepRecord {
    StepKind kind = StepKind::bigon;
    CurveId curve = 0;
    int total_before = 0;
    int total_after = 0;
    int curve_before = 0;
    int curve_after = 0;
    bool parity_odd = true;
};

struct NormalizeStats {
    int initial_total = 0;
    int step_budget = 0;
    std::vector<StepRecord> steps;
};

/// Removes bigons until every curve is crossed once. Throws NoProgress if it
/// stalls or exceeds (initial total - n) / 2 steps.
Trace normalize(const Arrangement& arr, const Trace& trace, NormalizeStats* stats = nullptr);

struct AuditLog {
    int mutations = 0;
    int euler_violations = 0;  // quotient Euler characteristic other than 1
    int tau_violations = 0;    // maps breaking a deck-transformation identity
};

struct FinalizeResult {
    Arrangement arrangement;  // canonically relabeled; the new curve has id n
    CellRef p_cell;           // cells on the new curve holding the anchors
    CellRef q_cell;
};

/// Cuts the trace into the map. Throws InvalidTrace unless the trace is simple
/// and crosses every curve exactly once.
FinalizeResult finalize(const Arrangement& arr, const Trace& trace, AuditLog* audit = nullptr);

struct ExtendOptions {
    SeedOptions seed;
    bool audit = false;
};

struct ExtendResult {
    Arrangement arrangement;
    CellRef p_cell;
    CellRef q_cell;
    Trace seeded;
    Trace routed;
    Trace normalized;
    NormalizeStats stats;
    AuditLog audit;
};

/// Throws SamePoint if p == q and SameLine if some pseudoline contains both.
Arrangement extend(const Arrangement& arr, const CellRef& p, const CellRef& q);
ExtendResult extend_detailed(const Arrangement& arr, const CellRef& p, const CellRef& q,
                             const ExtendOptions& options = {});

/// The arrangement of one pseudoline: one marker vertex, one edge, one face.
Arrangement one_line_arrangement();

}  // namespace levi
