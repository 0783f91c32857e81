#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stablemaps/state.hpp"

namespace stablemaps {

/// The eleven codimension-one transitions, in the fixed order used for
/// enumeration, search tie-breaking and serialization.
enum class TransitionKind {
    L,     // lips: births a fold sphere
    BMinusG, // beaks, genus variant merging two cuspidal curves
    BZeroG,  // beaks, genus variant preserving the curve count
    BPlusG,  // beaks, genus variant splitting a cuspidal curve
    BV,    // beaks, component variant splitting a surface
    PG,    // pinch, genus variant removing a cuspidal curve
    PV,    // pinch, component variant splitting a surface
    A3E,   // swallowtail pair on an embedded circle
    A3H2C, // swallowtail pair on a handle, consuming two cuspidal curves
    A3HC,  // swallowtail pair on a handle, consuming one cuspidal curve
    A3H0,  // swallowtail pair on a handle, consuming no cuspidal curve
};

inline constexpr std::array<TransitionKind, 11> all_kinds = {
    TransitionKind::L,     TransitionKind::BMinusG, TransitionKind::BZeroG,
    TransitionKind::BPlusG, TransitionKind::BV,     TransitionKind::PG,
    TransitionKind::PV,    TransitionKind::A3E,     TransitionKind::A3H2C,
    TransitionKind::A3HC,  TransitionKind::A3H0,
};

/// Crossing direction of a transition in a generic path of maps.  The table
/// of increments below is stated for positive crossings; negative crossings
/// negate it exactly.
enum class StepDirection { positive, negative };

/// Effect of one crossing on the invariant tuple, in tuple order.
struct IncrementVector {
    int d_ie = 0;
    int d_ic = 0;
    int d_ig = 0;
    int d_is = 0;

    bool operator==(const IncrementVector&) const = default;
    IncrementVector operator-() const { return {-d_ie, -d_ic, -d_ig, -d_is}; }
};

/// Signed crossing counts of a path, one per transition kind: positive
/// crossings count +1, negative crossings -1.
struct TransitionCounts {
    int ell = 0;       // L
    int b_minus_g = 0; // B-g
    int b_zero_g = 0;  // B0g
    int b_plus_g = 0;  // B+g
    int b_v = 0;       // Bv
    int p_g = 0;       // Pg
    int p_v = 0;       // Pv
    int a3e = 0;       // A3e
    int a3h2c = 0;     // A3h2c
    int a3hc = 0;      // A3hc
    int a3h0 = 0;      // A3h0

    bool operator==(const TransitionCounts&) const = default;
    TransitionCounts& operator+=(const TransitionCounts& o);
    int& slot(TransitionKind kind);
    int slot(TransitionKind kind) const;
};

/// Where a transition acts.  Which fields are meaningful depends on the kind
/// and direction; applicable_sites() returns fully resolved sites and apply()
/// rejects any site it would not have produced.
///
///   surface   primary surface acted on
///   surface2  second surface for the merges Bv- and Pv-
///   circuit   index of the primary circuit within its surface
///   circuit2  index of the second circuit (same surface unless surface2 set)
///   g1        genus kept by the first fragment of a surface split
///   keep      circuit indices kept by the first fragment of a split
///   s1        swallowtails kept by the first circuit of a B0g or A3h0 split
///
/// B0g and A3h0 reconnect two arcs of the cuspidal edges of one surface and
/// so act on circuits that carry swallowtails: either two such circuits merge
/// into one (site names circuit and circuit2) or one splits in two (site
/// names circuit and s1).  B0g preserves the swallowtail total and trades a
/// handle; A3h0 keeps the genus and creates or cancels one swallowtail pair
/// at the junction.
struct Site {
    std::optional<SurfaceId> surface;
    std::optional<SurfaceId> surface2;
    std::optional<int> circuit;
    std::optional<int> circuit2;
    std::optional<int> g1;
    std::optional<std::vector<int>> keep;
    std::optional<int> s1;

    bool operator==(const Site&) const = default;
};

/// One crossing in a plan: a transition kind, a direction, and a site.
struct PlanStep {
    TransitionKind kind = TransitionKind::L;
    StepDirection direction = StepDirection::positive;
    Site site;

    bool operator==(const PlanStep&) const = default;
};

using StepList = std::vector<PlanStep>;

/// Increment of a single crossing.  Values for positive crossings:
///
///   kind    d_ie d_ic d_ig d_is      kind    d_ie d_ic d_ig d_is
///   L        +1   +1   0    0        Pv       +1   -1   0    0
///   B-g       0   -1  -1    0        A3e       0    0   0   +2
///   B0g       0    0  -1    0        A3h2c     0   -2   0   +2
///   B+g       0   +1  -1    0        A3hc      0   -1   0   +2
///   Bv       +1   +1   0    0        A3h0      0    0   0   +2
///   Pg        0   -1  -1    0
IncrementVector increment_of(TransitionKind kind, StepDirection direction);

/// Total increment of a path with the given signed crossing counts; linear
/// in the counts.
IncrementVector aggregate(const TransitionCounts& counts);

/// Signed crossing counts of a step list.
TransitionCounts counts_of(const StepList& steps);

/// Number of sites at which (kind, direction) applies to the state.  Split
/// transitions admit exponentially many sites, so the count is exact but the
/// sites are materialised lazily via nth_site().
std::uint64_t site_count(const MapState& state, TransitionKind kind,
                         StepDirection direction);

/// The n-th site in the fixed enumeration order, 0 <= n < site_count.
Site nth_site(const MapState& state, TransitionKind kind,
              StepDirection direction, std::uint64_t n);

/// All sites in enumeration order.  Intended for small states; throws
/// DomainError when the count exceeds the given cap.
std::vector<Site> applicable_sites(const MapState& state, TransitionKind kind,
                                   StepDirection direction,
                                   std::uint64_t cap = 1u << 20);

/// One representative site per distinct successor state, in enumeration
/// order of the representatives.  Used by the search layers; the successor
/// of each representative is literally equal (not merely isomorphic) to the
/// successor of every site it stands for.
std::vector<Site> distinct_effect_sites(const MapState& state,
                                        TransitionKind kind,
                                        StepDirection direction);

/// Apply one crossing at a fully specified site.  Throws GuardError when the
/// guard fails, ReferenceError when the site does not resolve, and accepts
/// exactly the sites applicable_sites() would return.  The input state is
/// not modified.
MapState apply(const MapState& state, TransitionKind kind,
               StepDirection direction, const Site& site);

/// Complete a partial site: every omitted field is filled with the first
/// admissible value in enumeration order, every given field is kept and
/// checked.  Throws ReferenceError / GuardError when no applicable site
/// matches the given fields.
Site resolve_site(const MapState& state, TransitionKind kind,
                  StepDirection direction, const Site& partial);

/// Result of replaying a step list against a state.
struct PathTrace {
    MapState final_state;
    std::vector<InvariantTuple> tuple_history; // length steps + 1
    TransitionCounts counts;
    StepList resolved_steps;                   // every site fully resolved
};

/// Resolve and apply each step in order, recording the tuple after every
/// crossing.  Throws when any step fails to resolve or apply.
PathTrace run_plan(const MapState& initial, const StepList& steps);

/// Serialized spellings: "L  B-g  B0g  B+g  Bv  Pg  Pv  A3e  A3h2c  A3hc  A3h0".
std::string to_string(TransitionKind kind);
std::string to_string(StepDirection direction); // "+" / "-"
TransitionKind parse_kind(const std::string& text);
StepDirection parse_direction(const std::string& text);

/// Parse the `plan v1` text format: one step per line,
///   <kind> <+|-> [surface=<id>] [surface2=<id>] [circuit=<idx>]
///                [circuit2=<idx>] [g1=<int>] [keep=<idx,...>] [s1=<int>]
/// with '#' comments and blank lines ignored.  Sites may be partial; fields
/// must be valid for the kind and direction.
StepList parse_plan(std::istream& in);
StepList parse_plan_text(const std::string& text);
StepList load_plan(const std::string& path);

/// Write the `plan v1` format, spelling out every field present on each site.
void write_plan(std::ostream& out, const StepList& steps);
void write_plan_step(std::ostream& out, const PlanStep& step);
std::string plan_text(const StepList& steps);
void save_plan(const std::string& path, const StepList& steps);

} // namespace stablemaps
