// Acceptance gate: one line per criterion, exit 0 only when all pass.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stablemaps/calculus.hpp"
#include "stablemaps/errors.hpp"
#include "stablemaps/explorer.hpp"
#include "stablemaps/fixtures.hpp"
#include "stablemaps/planner.hpp"
#include "stablemaps/realizability.hpp"
#include "stablemaps/state.hpp"
#include "stablemaps/transitions.hpp"

using namespace stablemaps;

namespace {

constexpr auto pos = StepDirection::positive;
constexpr auto neg = StepDirection::negative;
using K = TransitionKind;
using clock_type = std::chrono::steady_clock;

int failures = 0;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(int criterion, bool ok, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
              << " - " << what << "\n";
    if (!ok) ++failures;
}

std::string timed(double elapsed) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << elapsed << "s";
    return out.str();
}

long long tuple_sum(const InvariantTuple& t) {
    return static_cast<long long>(t.ie) + t.ic + t.ig + t.is;
}

// 1. The increment table: all eleven kinds, both directions, exact values.
void criterion_increments() {
    const auto start = clock_type::now();
    struct Row {
        K kind;
        IncrementVector inc;
    };
    const std::vector<Row> table = {
        {K::L, {1, 1, 0, 0}},      {K::BMinusG, {0, -1, -1, 0}},
        {K::BZeroG, {0, 0, -1, 0}}, {K::BPlusG, {0, 1, -1, 0}},
        {K::BV, {1, 1, 0, 0}},     {K::PG, {0, -1, -1, 0}},
        {K::PV, {1, -1, 0, 0}},    {K::A3E, {0, 0, 0, 2}},
        {K::A3H2C, {0, -2, 0, 2}}, {K::A3HC, {0, -1, 0, 2}},
        {K::A3H0, {0, 0, 0, 2}},
    };
    int checks = 0;
    bool ok = table.size() == all_kinds.size();
    for (const auto& row : table) {
        ok = ok && increment_of(row.kind, pos) == row.inc;
        ++checks;
        ok = ok && increment_of(row.kind, neg) == -row.inc;
        ++checks;
    }
    const double elapsed = seconds_since(start);
    ok = ok && checks == 22 && elapsed < 1.0;
    report(1, ok, "increment table, " + std::to_string(checks) +
                      " checks (" + timed(elapsed) + ")");
}

// 2 and 3 (walk half): componentwise bookkeeping and the global identity on
// 10,000 seeded walks of length <= 30.
void criteria_walks() {
    const auto start = clock_type::now();
    const InvariantTuple f0{1, 0, 0, 0};
    bool bookkeeping = true;
    bool identity = true;
    int walks = 0;
    for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
        const int length = static_cast<int>(seed % 31);
        const WalkTrace trace = random_walk(seed, length);
        const InvariantTuple& fin = trace.tuple_history.back();
        const IncrementVector agg = aggregate(trace.counts);
        bookkeeping = bookkeeping && fin.ie - f0.ie == agg.d_ie &&
                      fin.ic - f0.ic == agg.d_ic &&
                      fin.ig - f0.ig == agg.d_ig &&
                      fin.is - f0.is == agg.d_is;
        identity =
            identity && tuple_sum(fin) == identity_rhs(trace.counts);
        ++walks;
        if (!bookkeeping) break;
    }
    const double elapsed = seconds_since(start);
    report(2, bookkeeping && walks == 10000 && elapsed < 30.0,
           "exact bookkeeping on " + std::to_string(walks) +
               " seeded walks (" + timed(elapsed) + ")");

    // 3. Identity on the walks plus the closed-form constructions.
    bool constructions = true;
    std::vector<std::vector<int>> profiles;
    std::vector<int> current;
    // All genus lists with 1..5 surfaces, entries 0..3, total genus <= 5.
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth >= 1) profiles.push_back(current);
        if (depth == 5) return;
        for (int g = 0; g <= 3; ++g) {
            int sum = g;
            for (const int h : current) sum += h;
            if (sum > 5) continue;
            current.push_back(g);
            self(self, depth + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    for (const auto& genera : profiles) {
        const int m = static_cast<int>(genera.size());
        int q = 0;
        for (const int g : genera) q += g;
        const Plan plan = plan_prescribed(genera);
        const PathReport r = make_report(canonical_projection(), plan.steps);
        constructions = constructions &&
                        plan.expected_final ==
                            InvariantTuple{m, q + m - 1, q, 0} &&
                        r.final_tuple == plan.expected_final &&
                        r.identity_holds && r.bookkeeping_holds;
    }
    std::size_t fold_free_cases = 0;
    for (int n = 0; n <= 3; ++n)
        for (int q = 0; q <= 3; ++q) {
            const Plan plan = plan_fold_free_cusps(n, q);
            constructions =
                constructions &&
                plan.expected_final ==
                    InvariantTuple{2 * n + 1, 0, q, 2 * n + 2 * q} &&
                identity_rhs(counts_of(plan.steps)) ==
                    tuple_sum(plan.expected_final);
            if (n >= 1 || q == 0) {
                const PathReport r =
                    make_report(canonical_projection(), plan.steps);
                constructions = constructions &&
                                r.final_tuple == plan.expected_final &&
                                r.identity_holds;
            }
            ++fold_free_cases;
        }
    report(3, identity && constructions,
           "global identity on the walks, " +
               std::to_string(profiles.size()) + " prescribed-genus plans, " +
               std::to_string(fold_free_cases) + " fold-free plans");
}

// 4. Exhaustive depth-6 enumeration with the parity audit.
void criterion_parity() {
    const auto start = clock_type::now();
    const std::set<InvariantTuple> tuples = enumerate_reachable(6);
    bool ok = !tuples.empty();
    for (const auto& t : tuples) {
        ok = ok && t.ie >= 1 && t.is >= 0 && t.is % 2 == 0;
        if (t.is == 0) ok = ok && (t.ie + t.ic + t.ig) % 2 != 0;
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 120.0;
    report(4, ok, "parity audit of " + std::to_string(tuples.size()) +
                      " depth-6 reachable tuples (" + timed(elapsed) + ")");
}

// 5. The nine crossing-count paths and their frozen a3hc - b0g values.
void criterion_count_fixtures() {
    const std::vector<int> expected = {0, 0, 2, 0, 2, 0, 0, -2, -2};
    const auto& fixtures = crossing_count_fixtures();
    bool ok = fixtures.size() == expected.size();

    MapState start;
    SurfaceComponent s;
    s.id = 1;
    s.genus = 2;
    s.circuits = {{0}, {0}, {2}, {4}};
    start.surfaces.push_back(s);

    for (std::size_t i = 0; ok && i < fixtures.size(); ++i) {
        const TransitionCounts counts = counts_of(fixtures[i].steps);
        const int value = counts.a3hc - counts.b_zero_g;
        ok = value == expected[i] && value == fixtures[i].a3hc_minus_b0g;
        try {
            run_plan(start, fixtures[i].steps); // every path must replay
        } catch (const Error&) {
            ok = false;
        }
    }
    report(5, ok, "nine counting paths reproduce (0,0,2,0,2,0,0,-2,-2)");
}

// 6. The worked sequences: lips-then-pinch, and the swallowtail chain whose
// ends differ by two cuspidal curves and no swallowtails.
void criterion_sequences() {
    bool ok = true;
    const MapState base = canonical_projection();
    const PathReport two =
        make_report(base, {{K::L, pos, {}}, {K::PG, neg, {}}});
    ok = ok && two.final_tuple == InvariantTuple{2, 2, 1, 0};

    const PathTrace t1 = run_plan(base, {{K::A3E, pos, {}}});
    const PathTrace t2 = run_plan(t1.final_state, {{K::PG, neg, {}}});
    const PathTrace t3 = run_plan(t2.final_state, {{K::PG, neg, {}}});
    const InvariantTuple w1 = t1.tuple_history.back();
    const InvariantTuple w3 = t3.tuple_history.back();
    ok = ok && w3.ic == w1.ic + 2 && w3.is == w1.is;
    report(6, ok, "worked sequences: (2,2,1,0) endpoint and the cusp chain");
}

// 7. Fold feasibility with witnesses, plus the even-sum exclusion.
void criterion_fold() {
    bool ok = true;
    for (const int n : {1, 3, 5})
        ok = ok && fold_feasible(genus_list(construct_concentric(n)));
    for (int g1 = 1; g1 <= 3; ++g1) {
        ok = ok && fold_feasible(genus_list(construct_nested_pairs({g1})));
        for (int g2 = 1; g2 <= 3; ++g2)
            ok = ok &&
                 fold_feasible(genus_list(construct_nested_pairs({g1, g2})));
    }
    ok = ok && !fold_feasible({0, 0});
    ok = ok && !bfs_plan({2, 0, 0, 0}, 8).has_value();
    report(7, ok, "fold feasibility witnesses and the (2,0,0,0) exclusion");
}

// 8. Unreachability of odd swallowtail counts; the base point needs no steps.
void criterion_unreachable() {
    bool ok = !bfs_plan({1, 0, 0, 1}, 8).has_value();
    const auto self = bfs_plan({1, 0, 0, 0}, 8);
    ok = ok && self.has_value() && self->steps.empty();
    report(8, ok, "odd swallowtail target unreachable, base target trivial");
}

} // namespace

int main() {
    try {
        criterion_increments();
        criteria_walks();
        criterion_parity();
        criterion_count_fixtures();
        criterion_sequences();
        criterion_fold();
        criterion_unreachable();
    } catch (const std::exception& e) {
        std::cout << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
