#include "stablemaps/explorer.hpp"

#include <array>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "stablemaps/errors.hpp"
#include "stablemaps/rng.hpp"

namespace stablemaps {

std::set<InvariantTuple> enumerate_reachable(int max_steps) {
    if (max_steps < 0) throw DomainError("max_steps must be non-negative");

    std::set<InvariantTuple> tuples;
    std::unordered_set<std::vector<int>, CanonicalKeyHash> visited;
    std::deque<std::pair<MapState, int>> frontier;

    const MapState start = canonical_projection();
    visited.insert(canonical_key(start));
    tuples.insert(invariants(start));
    frontier.emplace_back(start, 0);

    while (!frontier.empty()) {
        auto [state, depth] = std::move(frontier.front());
        frontier.pop_front();
        if (depth == max_steps) continue;

        for (const auto kind : all_kinds) {
            for (const auto dir :
                 {StepDirection::positive, StepDirection::negative}) {
                for (const auto& site : distinct_effect_sites(state, kind, dir)) {
                    MapState next = apply(state, kind, dir, site);
                    auto key = canonical_key(next);
                    if (!visited.insert(std::move(key)).second) continue;
                    tuples.insert(invariants(next));
                    frontier.emplace_back(std::move(next), depth + 1);
                }
            }
        }
    }
    return tuples;
}

WalkTrace random_walk(std::uint64_t seed, int steps) {
    if (steps < 0) throw DomainError("steps must be non-negative");

    SplitMix64 rng(seed);
    WalkTrace trace;
    trace.seed = seed;
    trace.final_state = canonical_projection();
    trace.tuple_history.push_back(invariants(trace.final_state));

    for (int step = 0; step < steps; ++step) {
        // Count the applicable sites of every (kind, direction) block, then
        // draw uniformly over the disjoint union.
        std::uint64_t total = 0;
        std::array<std::uint64_t, 22> blocks{};
        std::size_t slot = 0;
        for (const auto kind : all_kinds)
            for (const auto dir :
                 {StepDirection::positive, StepDirection::negative}) {
                blocks[slot] = site_count(trace.final_state, kind, dir);
                total += blocks[slot];
                ++slot;
            }
        // At least L+ always applies, so total >= 1.
        std::uint64_t pick = rng.below(total);

        slot = 0;
        for (const auto kind : all_kinds) {
            for (const auto dir :
                 {StepDirection::positive, StepDirection::negative}) {
                if (pick >= blocks[slot]) {
                    pick -= blocks[slot];
                    ++slot;
                    continue;
                }
                const Site site = nth_site(trace.final_state, kind, dir, pick);
                trace.final_state = apply(trace.final_state, kind, dir, site);
                trace.tuple_history.push_back(invariants(trace.final_state));
                trace.counts.slot(kind) +=
                    dir == StepDirection::positive ? 1 : -1;
                trace.steps.push_back({kind, dir, site});
                slot = blocks.size();
                break;
            }
            if (slot == blocks.size()) break;
        }
    }
    return trace;
}

void write_trace(std::ostream& out, const WalkTrace& trace) {
    out << "plan v1\n";
    out << "# seed " << trace.seed << "\n";
    out << "# steps " << trace.steps.size() << "\n";
    out << "# tuple 0 = " << to_string(trace.tuple_history.at(0)) << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        write_plan_step(out, trace.steps[i]);
        out << "# tuple " << i + 1 << " = "
            << to_string(trace.tuple_history.at(i + 1)) << "\n";
    }
}

std::string trace_text(const WalkTrace& trace) {
    std::ostringstream out;
    write_trace(out, trace);
    return out.str();
}

} // namespace stablemaps
