#pragma once

// Combinatorial maps on the sphere double cover of the projective plane.
//
// A map is three permutations of darts:
//   sigma  next dart counterclockwise around the origin vertex
//   alpha  the reversal of a dart (fixed-point free involution)
//   tau    the antipodal deck transformation (fixed-point free involution)
// with tau*alpha = alpha*tau and tau*sigma = sigma^-1*tau. Vertices are sigma
// orbits, edges alpha orbits, faces orbits of phi = sigma*alpha. The face of a
// dart lies on its right. A corner is named by the dart y it follows: the wedge
// between y and sigma(y), which belongs to face_of(sigma(y)).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace levi {

using Dart = std::int32_t;
inline constexpr Dart kNoDart = -1;

enum class CellKind : std::uint8_t { vertex, edge, face };

std::string to_string(CellKind kind);

/// A cell of the quotient surface. `orbit` is the smallest dart over the cell
/// and its antipodal image, so it is the same for both lifts.
struct CellRef {
    CellKind kind = CellKind::face;
    Dart orbit = kNoDart;

    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

std::string to_string(const CellRef& cell);

class CombMap {
public:
    /// The empty map. Used only for the arrangement with no pseudolines.
    CombMap() = default;

    /// Validates every map invariant and indexes the orbits.
    /// Throws InvalidMap naming the violated identity.
    static CombMap build(std::vector<Dart> sigma, std::vector<Dart> alpha, std::vector<Dart> tau);

    bool empty() const noexcept { return sigma_.empty(); }
    Dart size() const noexcept { return static_cast<Dart>(sigma_.size()); }

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart tau(Dart d) const { return tau_[d]; }
    Dart phi(Dart d) const { return sigma_[alpha_[d]]; }
    Dart sigma_pow(Dart d, int k) const;

    int degree(Dart d) const { return static_cast<int>(vertex_darts_[vertex_id_[d]].size()); }
    /// The dart opposite d in the rotation at its vertex.
    Dart straight(Dart d) const { return sigma_pow(d, degree(d) / 2); }

    int vertex_of(Dart d) const { return vertex_id_[d]; }
    int face_of(Dart d) const { return face_id_[d]; }
    Dart edge_of(Dart d) const { return d < alpha_[d] ? d : alpha_[d]; }
    int face_of_corner(Dart y) const { return face_id_[sigma_[y]]; }
    /// Antipodal image of the corner following y.
    Dart tau_corner(Dart y) const { return tau_[sigma_[y]]; }

    int vertex_count() const noexcept { return static_cast<int>(vertex_darts_.size()); }
    int face_count() const noexcept { return static_cast<int>(face_darts_.size()); }
    int edge_count() const noexcept { return size() / 2; }

    /// Darts of a cover vertex in sigma order, starting at its smallest dart.
    const std::vector<Dart>& vertex_darts(int v) const { return vertex_darts_[v]; }
    /// Boundary walk of a cover face in phi order, starting at its smallest dart.
    const std::vector<Dart>& face_darts(int f) const { return face_darts_[f]; }
    /// Position of d within face_darts(face_of(d)).
    int face_index(Dart d) const { return face_pos_[d]; }

    int tau_vertex(int v) const { return vertex_id_[tau_[vertex_darts_[v][0]]]; }
    int tau_face(int f) const { return face_id_[alpha_[tau_[face_darts_[f][0]]]]; }

    CellRef vertex_cell(Dart d) const;
    CellRef edge_cell(Dart d) const;
    CellRef face_cell(Dart d) const;
    /// Cover lift of a quotient cell containing its orbit dart.
    int vertex_lift(const CellRef& c) const { return vertex_id_[c.orbit]; }
    int face_lift(const CellRef& c) const { return face_id_[c.orbit]; }

    std::span<const Dart> sigma_array() const noexcept { return sigma_; }
    std::span<const Dart> alpha_array() const noexcept { return alpha_; }
    std::span<const Dart> tau_array() const noexcept { return tau_; }

    friend bool operator==(const CombMap& a, const CombMap& b) {
        return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_ && a.tau_ == b.tau_;
    }

private:
    void index();

    std::vector<Dart> sigma_, sigma_inv_, alpha_, tau_;
    std::vector<int> vertex_id_, face_id_, face_pos_;
    std::vector<std::vector<Dart>> vertex_darts_, face_darts_;
};

struct CellTable {
    std::vector<CellRef> vertices;  // quotient cells sorted by orbit dart
    std::vector<CellRef> edges;
    std::vector<CellRef> faces;
    int cover_vertices = 0;
    int cover_edges = 0;
    int cover_faces = 0;

    int quotient_euler() const {
        return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
               static_cast<int>(faces.size());
    }
    int cover_euler() const { return cover_vertices - cover_edges + cover_faces; }
};

/// Orbit partitions and the quotient pairing. The empty map has one face.
CellTable cells(const CombMap& map);

/// True iff the lift of a closed quotient walk returns to its start rather than
/// to the antipode. A walk is a sequence of darts; each dart's origin must be the
/// previous dart's head or its antipode (the choice of lift is free per step).
/// Throws MalformedWalk otherwise.
bool is_contractible(const CombMap& map, std::span<const Dart> walk);

struct SplitResult {
    CombMap map;
    CellRef vertex;
    Dart back = kNoDart;     // new dart at the split vertex pointing to origin(d)
    Dart forward = kNoDart;  // new dart at the split vertex pointing to the old head of d
};

/// Subdivides the edge of d (and its antipodal edge) with a degree-2 vertex.
/// New darts are appended as [back, forward, tau(back), tau(forward)].
SplitResult split_edge(const CombMap& map, Dart d);
SplitResult split_edge(const CombMap& map, const CellRef& edge);

struct ChordResult {
    CombMap map;
    CellRef edge;
    Dart first = kNoDart;   // inserted after cornerA
    Dart second = kNoDart;  // inserted after cornerB
};

/// Splits a face with a new edge between two of its corners, mirrored on the
/// antipodal face. New darts are appended as [first, second, tau(first), tau(second)].
/// Throws CornersNotCofacial unless both corners lie on the same lift of `face`.
ChordResult add_chord(const CombMap& map, const CellRef& face, Dart corner_a, Dart corner_b);

struct DissolveResult {
    CombMap map;
    std::vector<Dart> old_to_new;  // kNoDart for removed darts
};

/// Removes a degree-2 vertex (and its antipode), merging its two edges.
DissolveResult dissolve_vertex(const CombMap& map, Dart d);

/// Breadth-first relabeling from `start`, exploring sigma, alpha, tau in that
/// order. Returns old -> new ids.
std::vector<Dart> bfs_relabeling(const CombMap& map, Dart start = 0);
CombMap relabel(const CombMap& map, std::span<const Dart> old_to_new);

}  // namespace levi
