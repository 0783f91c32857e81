#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>

#include "stablemaps/state.hpp"
#include "stablemaps/transitions.hpp"

namespace stablemaps {

/// Every invariant tuple realized by some state reachable from the canonical
/// projection in at most max_steps crossings.  Exhaustive: states are
/// explored breadth-first and deduplicated up to surface renaming, which
/// preserves the set of reachable tuples.
std::set<InvariantTuple> enumerate_reachable(int max_steps);

/// Record of one random walk from the canonical projection.
struct WalkTrace {
    std::uint64_t seed = 0;
    StepList steps;                            // fully resolved sites
    std::vector<InvariantTuple> tuple_history; // length steps + 1
    TransitionCounts counts;
    MapState final_state;
};

/// Walk `steps` crossings from the canonical projection, choosing uniformly
/// at random among every applicable (kind, direction, site) triple at each
/// state.  Driven by a fixed in-house generator, so a given seed yields the
/// same trace on every platform.  At least one transition applies to every
/// valid state, so the walk never gets stuck.
WalkTrace random_walk(std::uint64_t seed, int steps);

/// Serialize a trace as a `plan v1` step list preceded by comment lines
/// carrying the seed and the tuple history.
void write_trace(std::ostream& out, const WalkTrace& trace);
std::string trace_text(const WalkTrace& trace);

} // namespace stablemaps
