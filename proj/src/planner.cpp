#include "stablemaps/planner.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>
#include <vector>

#include "stablemaps/errors.hpp"

namespace stablemaps {

namespace {

// Admissible lower bound on the number of crossings needed to move the
// invariants from `from` to `to`: one crossing changes I_E by at most 1,
// I_C by at most 2, I_G by at most 1 and I_S by exactly 0 or 2.  Returns
// nullopt when no number of crossings suffices (odd swallowtail change).
std::optional<int> steps_lower_bound(const InvariantTuple& from,
                                     const InvariantTuple& to) {
    if ((to.is - from.is) % 2 != 0) return std::nullopt;
    int bound = std::abs(to.ie - from.ie);
    bound = std::max(bound, (std::abs(to.ic - from.ic) + 1) / 2);
    bound = std::max(bound, std::abs(to.ig - from.ig));
    bound = std::max(bound, std::abs(to.is - from.is) / 2);
    return bound;
}

// Targets no reachable state can realize, whatever the budget: every state
// keeps at least one surface, non-negative invariants and an even number of
// swallowtail points, and a swallowtail-free state always has odd
// I_E + I_C + I_G (the parity law checked exhaustively by the test suite).
bool target_impossible(const InvariantTuple& t) {
    if (t.ie < 1 || t.ic < 0 || t.ig < 0 || t.is < 0) return true;
    if (t.is % 2 != 0) return true;
    if (t.is == 0 && (t.ie + t.ic + t.ig) % 2 == 0) return true;
    return false;
}

} // namespace

Plan plan_prescribed(const std::vector<int>& genera) {
    if (genera.empty())
        throw DomainError("prescribed genera: need at least one surface");
    for (const int g : genera)
        if (g < 0) throw DomainError("prescribed genera must be non-negative");

    const int m = static_cast<int>(genera.size());
    int q = 0;

    Plan plan;
    for (int i = 1; i < m; ++i)
        plan.steps.push_back({TransitionKind::L, StepDirection::positive, {}});
    for (int i = 0; i < m; ++i) {
        q += genera[i];
        for (int j = 0; j < genera[i]; ++j) {
            Site site;
            site.surface = static_cast<SurfaceId>(i + 1);
            plan.steps.push_back(
                {TransitionKind::PG, StepDirection::negative, site});
        }
    }
    plan.expected_final = {m, q + m - 1, q, 0};
    return plan;
}

Plan plan_fold_free_cusps(int n, int q) {
    if (n < 0 || q < 0)
        throw DomainError("fold-free cusps: n and q must be non-negative");

    Plan plan;
    for (int i = 0; i < n; ++i)
        plan.steps.push_back({TransitionKind::L, StepDirection::positive, {}});
    for (int i = 0; i < n; ++i)
        plan.steps.push_back({TransitionKind::PV, StepDirection::positive, {}});
    for (int i = 0; i < n; ++i)
        plan.steps.push_back({TransitionKind::A3E, StepDirection::positive, {}});
    for (int i = 0; i < q; ++i)
        plan.steps.push_back({TransitionKind::PG, StepDirection::negative, {}});
    for (int i = 0; i < q; ++i)
        plan.steps.push_back({TransitionKind::A3HC, StepDirection::positive, {}});
    plan.expected_final = {2 * n + 1, 0, q, 2 * n + 2 * q};
    return plan;
}

std::optional<Plan> bfs_plan(const InvariantTuple& target, int max_steps) {
    if (max_steps < 0) throw DomainError("max_steps must be non-negative");

    const MapState start = canonical_projection();
    if (invariants(start) == target) return Plan{{}, target};
    if (target_impossible(target)) return std::nullopt;

    struct Node {
        MapState state;
        int parent;
        PlanStep step;
        int depth;
    };
    std::vector<Node> nodes;
    nodes.push_back({start, -1, {}, 0});
    std::unordered_set<std::vector<int>, CanonicalKeyHash> visited;
    visited.insert(canonical_key(start));

    auto reconstruct = [&](int index) {
        Plan plan;
        plan.expected_final = target;
        for (int i = index; i > 0; i = nodes[i].parent)
            plan.steps.push_back(nodes[i].step);
        std::reverse(plan.steps.begin(), plan.steps.end());
        return plan;
    };

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const MapState state = nodes[i].state; // nodes may reallocate below
        const int depth = nodes[i].depth;
        if (depth >= max_steps) continue;
        const auto bound = steps_lower_bound(invariants(state), target);
        if (!bound || depth + *bound > max_steps) continue;

        for (const auto kind : all_kinds) {
            for (const auto dir :
                 {StepDirection::positive, StepDirection::negative}) {
                for (const auto& site : distinct_effect_sites(state, kind, dir)) {
                    MapState next = apply(state, kind, dir, site);
                    auto key = canonical_key(next);
                    if (!visited.insert(std::move(key)).second) continue;
                    nodes.push_back({std::move(next),
                                     static_cast<int>(i),
                                     {kind, dir, site},
                                     depth + 1});
                    if (invariants(nodes.back().state) == target)
                        return reconstruct(static_cast<int>(nodes.size()) - 1);
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace stablemaps
