#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stablemaps {

using SurfaceId = std::uint32_t;

/// Optional embedding annotation on a surface component.  `unset` is the
/// default for states produced by transitions; directions only become
/// meaningful on states built by the realizability constructors.
enum class SurfaceDirection { unset, inward, outward };

/// A closed curve of cuspidal points on a singular surface, carrying an even
/// number of swallowtail points.  A circuit with zero swallowtails is a plain
/// cuspidal curve; each swallowtail subdivides it into fold/cusp arcs.
struct CuspCircuit {
    int swallowtails = 0;

    bool operator==(const CuspCircuit&) const = default;
    auto operator<=>(const CuspCircuit&) const = default;
};

/// One connected component of the singular set: a closed oriented surface of
/// the given genus decorated with cuspidal circuits.  Circuits are kept
/// sorted by ascending swallowtail count; sites address them by index into
/// that order.
struct SurfaceComponent {
    SurfaceId id = 0;
    int genus = 0;
    std::vector<CuspCircuit> circuits; // sorted ascending by swallowtails
    SurfaceDirection direction = SurfaceDirection::unset;
    std::optional<SurfaceId> parent;   // immediately enclosing surface, if tracked

    bool operator==(const SurfaceComponent&) const = default;

    int zero_circuits() const;             // circuits with no swallowtails
    int circuits_with_at_least(int s) const;
};

/// Combinatorial model of the singular set of a stable map S^3 -> R^3.
/// Surfaces are kept sorted by ascending id and ids are unique.  The singular
/// set of a stable map is never empty, so a valid state has at least one
/// surface.
struct MapState {
    std::vector<SurfaceComponent> surfaces;

    bool operator==(const MapState&) const = default;

    const SurfaceComponent* find(SurfaceId id) const;
    SurfaceComponent* find(SurfaceId id);
    /// Smallest id strictly greater than every id in use (1 for no surfaces).
    SurfaceId fresh_id() const;
};

/// The four integer invariants tracked by the calculus, in the fixed order
/// (I_E, I_C, I_G, I_S).  I_V is determined by I_E and exposed as iv().
struct InvariantTuple {
    int ie = 0; // number of singular surfaces
    int ic = 0; // number of cuspidal curves (0-swallowtail circuits)
    int ig = 0; // total genus of the singular set
    int is = 0; // number of swallowtail points

    /// Number of connected components of the regular-fiber complement; always
    /// one more than the surface count for maps from the 3-sphere.
    int iv() const { return ie + 1; }

    bool operator==(const InvariantTuple&) const = default;
    auto operator<=>(const InvariantTuple&) const = default;
};

/// One structural defect found by validate().
struct Violation {
    std::string rule;                   // stable machine-readable tag
    std::optional<SurfaceId> surface;
    std::optional<int> circuit;         // index within the surface
    std::string message;
};

/// The base point of the calculus: the standard projection restricted to the
/// unit sphere.  Its singular set is a single fold sphere, so the invariants
/// are (1, 0, 0, 0).
MapState canonical_projection();

/// Read the invariant tuple off a state.  Throws ValidationError when the
/// state is malformed (see validate()).
InvariantTuple invariants(const MapState& state);

/// Check every structural invariant and report all defects: non-empty,
/// unique sorted ids, non-negative genus, sorted circuits, even swallowtail
/// counts, parents resolving to existing surfaces with no cycles.
std::vector<Violation> validate(const MapState& state);

/// Key identifying a state up to renaming of surface ids: the multiset of
/// (genus, circuit profile) pairs, flattened into a vector.  Directions and
/// parents are ignored; transitions never produce them.
std::vector<int> canonical_key(const MapState& state);

struct CanonicalKeyHash {
    std::size_t operator()(const std::vector<int>& key) const;
};

/// Parse the `mapstate v1` text format.  Throws ParseError on malformed
/// input and ValidationError when the parsed state fails validate().
MapState parse_state(std::istream& in);
MapState parse_state_text(const std::string& text);
MapState load_state(const std::string& path);

/// Write the `mapstate v1` text format.  Every field is written explicitly,
/// so write -> parse is the identity.
void write_state(std::ostream& out, const MapState& state);
std::string state_text(const MapState& state);
void save_state(const std::string& path, const MapState& state);

std::string to_string(const InvariantTuple& t); // "(ie, ic, ig, is)"
/// Parse "ie,ic,ig,is" (optionally parenthesised) into a tuple.
InvariantTuple parse_tuple(const std::string& text);

} // namespace stablemaps
