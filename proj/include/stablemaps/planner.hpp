#pragma once

#include <optional>
#include <vector>

#include "stablemaps/state.hpp"
#include "stablemaps/transitions.hpp"

namespace stablemaps {

/// A transition sequence from the canonical projection together with the
/// tuple it is expected to reach.
struct Plan {
    StepList steps;
    InvariantTuple expected_final;
};

/// Closed-form plan reaching a swallowtail-free map whose singular surfaces
/// have exactly the prescribed genera (m surfaces, genera[i] on the i-th).
/// Reaches (m, q + m - 1, q, 0) where q is the total genus: m - 1 lips
/// crossings birth the spheres, then each surface absorbs its genus through
/// negative pinch crossings.  Requires a non-empty genus list with
/// non-negative entries.
Plan plan_prescribed(const std::vector<int>& genera);

/// Closed-form plan targeting a map with swallowtails but no cuspidal
/// curves, (2n + 1, 0, q, 2n + 2q): n lips + n component pinches + n
/// swallowtail births, then q negative genus pinches and q handle
/// swallowtail births that trade each cuspidal curve for a swallowtail pair.
/// The expected tuple always satisfies the global identity for the step
/// counts.  The plan replays from canonical_projection() whenever n >= 1 or
/// q = 0; with n = 0 and q >= 1 the first handle birth has no admissible
/// site (no circuit carries swallowtails yet), and in fact no state with
/// tuple (1, 0, 1, 2) is reachable at all: its two swallowtails would have
/// to sit on a single circuit, which the reconnection parity rules out.
/// Requires n >= 0 and q >= 0.
Plan plan_fold_free_cusps(int n, int q);

/// Breadth-first search over states reachable from the canonical projection,
/// deduplicated up to surface renaming, expanding kinds, directions and
/// sites in their fixed enumeration order.  Returns the first plan found
/// whose endpoint has the target invariants — a shortest one — or nullopt
/// when the target is not reached within max_steps crossings.
std::optional<Plan> bfs_plan(const InvariantTuple& target, int max_steps);

} // namespace stablemaps
