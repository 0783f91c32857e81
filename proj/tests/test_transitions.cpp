#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "stablemaps/errors.hpp"
#include "stablemaps/state.hpp"
#include "stablemaps/transitions.hpp"

using namespace stablemaps;

namespace {

constexpr auto pos = StepDirection::positive;
constexpr auto neg = StepDirection::negative;
using K = TransitionKind;

SurfaceComponent surf(SurfaceId id, int genus, std::vector<int> sws) {
    SurfaceComponent s;
    s.id = id;
    s.genus = genus;
    for (int sw : sws) s.circuits.push_back({sw});
    return s;
}

MapState state_of(std::vector<SurfaceComponent> surfaces) {
    return MapState{std::move(surfaces)};
}

Site site_c(int circuit) {
    Site s;
    s.circuit = circuit;
    return s;
}

Site site_cc(int circuit, int circuit2) {
    Site s;
    s.circuit = circuit;
    s.circuit2 = circuit2;
    return s;
}

Site site_cs(int circuit, int s1) {
    Site s;
    s.circuit = circuit;
    s.s1 = s1;
    return s;
}

// States exercising every transition's site families.
std::vector<MapState> coherence_grid() {
    return {
        canonical_projection(),
        state_of({surf(1, 0, {0})}),
        state_of({surf(1, 0, {0}), surf(2, 0, {0})}),
        state_of({surf(1, 2, {0, 0, 2, 4})}),
        state_of({surf(1, 1, {0, 2})}),
        state_of({surf(1, 0, {2, 2})}),
        state_of({surf(1, 1, {8})}),
        state_of({surf(1, 3, {0, 0, 0})}),
        state_of({surf(1, 0, {}), surf(2, 1, {0, 4}), surf(3, 0, {2})}),
        state_of({surf(1, 0, {2, 6})}),
        state_of({surf(1, 2, {2, 2, 4})}),
    };
}

IncrementVector tuple_delta(const MapState& before, const MapState& after) {
    const InvariantTuple a = invariants(before);
    const InvariantTuple b = invariants(after);
    return {b.ie - a.ie, b.ic - a.ic, b.ig - a.ig, b.is - a.is};
}

} // namespace

TEST_CASE("increment table is frozen for all 22 crossings") {
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
    REQUIRE(table.size() == all_kinds.size());
    for (const auto& row : table) {
        CAPTURE(to_string(row.kind));
        CHECK(increment_of(row.kind, pos) == row.inc);
        CHECK(increment_of(row.kind, neg) == -row.inc);
    }
}

TEST_CASE("kind and direction spellings round trip") {
    const std::vector<std::string> names = {"L",  "B-g", "B0g",   "B+g",
                                            "Bv", "Pg",  "Pv",    "A3e",
                                            "A3h2c", "A3hc", "A3h0"};
    REQUIRE(names.size() == all_kinds.size());
    for (std::size_t i = 0; i < all_kinds.size(); ++i) {
        CHECK(to_string(all_kinds[i]) == names[i]);
        CHECK(parse_kind(names[i]) == all_kinds[i]);
    }
    CHECK(to_string(pos) == "+");
    CHECK(to_string(neg) == "-");
    CHECK(parse_direction("+") == pos);
    CHECK(parse_direction("-") == neg);
    CHECK_THROWS_AS(parse_kind("B0G"), ParseError);
    CHECK_THROWS_AS(parse_kind(""), ParseError);
    CHECK_THROWS_AS(parse_direction("+-"), ParseError);
}

TEST_CASE("aggregate is linear in the signed counts") {
    const StepList steps = {
        {K::L, pos, {}},    {K::PG, neg, {}},   {K::A3E, pos, {}},
        {K::A3HC, pos, {}}, {K::BZeroG, neg, {}}, {K::L, neg, {}},
        {K::A3E, pos, {}},
    };
    const TransitionCounts c = counts_of(steps);
    CHECK(c.ell == 0); // one positive and one negative lips crossing
    CHECK(c.a3e == 2);
    CHECK(c.b_zero_g == -1);

    IncrementVector sum;
    for (const auto& s : steps) {
        const IncrementVector v = increment_of(s.kind, s.direction);
        sum = {sum.d_ie + v.d_ie, sum.d_ic + v.d_ic, sum.d_ig + v.d_ig,
               sum.d_is + v.d_is};
    }
    CHECK(aggregate(c) == sum);
}

TEST_CASE("exactly three crossings apply to the canonical projection") {
    const MapState f0 = canonical_projection();
    for (K kind : all_kinds)
        for (auto dir : {pos, neg}) {
            CAPTURE(to_string(kind) + to_string(dir));
            const bool expected = (kind == K::L && dir == pos) ||
                                  (kind == K::PG && dir == neg) ||
                                  (kind == K::A3E && dir == pos);
            CHECK((site_count(f0, kind, dir) > 0) == expected);
        }
}

TEST_CASE("lips crossings birth and erase fold spheres") {
    const MapState f0 = canonical_projection();
    const MapState grown = apply(f0, K::L, pos, {});
    MapState expected = state_of({surf(1, 0, {}), surf(2, 0, {0})});
    expected.surfaces[0].direction = SurfaceDirection::inward; // untouched
    CHECK(grown == expected);

    Site back;
    back.surface = 2;
    CHECK(apply(grown, K::L, neg, back) == f0);

    Site wrong;
    wrong.surface = 1; // no cuspidal curve on the base sphere
    CHECK_THROWS_AS(apply(grown, K::L, neg, wrong), GuardError);
    CHECK_THROWS_AS(apply(f0, K::L, neg, back), ReferenceError); // no id 2
}

TEST_CASE("genus beaks merge and split cuspidal curves") {
    const MapState two = state_of({surf(1, 1, {0, 0})});
    Site s = site_cc(0, 1);
    s.surface = 1;
    const MapState one = apply(two, K::BMinusG, pos, s);
    CHECK(one == state_of({surf(1, 0, {0})}));

    Site undo = site_c(0);
    undo.surface = 1;
    CHECK(apply(one, K::BMinusG, neg, undo) == two);

    // B+g is the mirror image: split with genus loss, merge with genus gain.
    const MapState split = apply(two, K::BPlusG, pos, undo);
    CHECK(split == state_of({surf(1, 0, {0, 0, 0})}));
    CHECK(apply(split, K::BPlusG, neg, s) == two);

    // Guards: genus and swallowtail-free circuits.
    CHECK_THROWS_AS(apply(state_of({surf(1, 0, {0, 0})}), K::BMinusG, pos, s),
                    GuardError);
    Site swapped = site_cc(1, 0);
    swapped.surface = 1;
    CHECK_THROWS_AS(apply(two, K::BMinusG, pos, swapped), GuardError);
    Site edged = site_cc(0, 1);
    edged.surface = 1;
    CHECK_THROWS_AS(
        apply(state_of({surf(1, 1, {0, 2})}), K::BMinusG, pos, edged),
        GuardError);
}

TEST_CASE("B0g reconnects swallowtail-bearing circuits across a handle") {
    // Merge: two edge circuits become one, genus drops.
    const MapState before = state_of({surf(1, 1, {2, 4})});
    Site merge = site_cc(0, 1);
    merge.surface = 1;
    const MapState merged = apply(before, K::BZeroG, pos, merge);
    CHECK(merged == state_of({surf(1, 0, {6})}));

    // Split: the inverse crossing restores the state exactly.
    Site split = site_cs(0, 2);
    split.surface = 1;
    CHECK(apply(merged, K::BZeroG, neg, split) == before);

    // Positive splits exist too, and need genus.
    const MapState eight = state_of({surf(1, 1, {8})});
    Site s4 = site_cs(0, 4);
    s4.surface = 1;
    CHECK(apply(eight, K::BZeroG, pos, s4) == state_of({surf(1, 0, {4, 4})}));
    CHECK_THROWS_AS(apply(state_of({surf(1, 0, {8})}), K::BZeroG, pos, s4),
                    GuardError);

    // No swallowtails, no B0g: cuspidal curves cannot reconnect this way.
    const MapState plains = state_of({surf(1, 2, {0, 0})});
    for (auto dir : {pos, neg}) CHECK(site_count(plains, K::BZeroG, dir) == 0);
    Site curves = site_cc(0, 1);
    curves.surface = 1;
    CHECK_THROWS_AS(apply(plains, K::BZeroG, pos, curves), GuardError);

    // Split sites must cut between swallowtails: s1 even, both pieces >= 2.
    Site odd = site_cs(0, 3);
    odd.surface = 1;
    CHECK_THROWS_AS(apply(eight, K::BZeroG, pos, odd), GuardError);
    Site lopsided = site_cs(0, 6);
    lopsided.surface = 1;
    CHECK_THROWS_AS(apply(eight, K::BZeroG, pos, lopsided), GuardError);

    // The site shape is merge xor split.
    Site both = site_cc(0, 1);
    both.s1 = 2;
    both.surface = 1;
    CHECK_THROWS_AS(apply(before, K::BZeroG, pos, both), ReferenceError);
    Site neither;
    neither.surface = 1;
    neither.circuit = 0;
    CHECK_THROWS_AS(apply(before, K::BZeroG, pos, neither), ReferenceError);
}

TEST_CASE("component beaks split a surface and pinch the curve into both") {
    const MapState start = state_of({surf(1, 2, {0, 0, 2})});
    Site s;
    s.surface = 1;
    s.circuit = 0;
    s.g1 = 1;
    s.keep = std::vector<int>{2};
    const MapState after = apply(start, K::BV, pos, s);
    CHECK(after == state_of({surf(2, 1, {0, 2}), surf(3, 1, {0, 0})}));

    // Merge direction: one curve from each side is joined into a fresh one.
    const MapState pair = state_of({surf(1, 0, {0}), surf(2, 1, {0, 0})});
    Site m;
    m.surface = 1;
    m.surface2 = 2;
    m.circuit = 0;
    m.circuit2 = 0;
    CHECK(apply(pair, K::BV, neg, m) == state_of({surf(3, 1, {0, 0})}));

    // keep must avoid the split circuit and stay sorted.
    Site bad = s;
    bad.keep = std::vector<int>{0};
    CHECK_THROWS_AS(apply(start, K::BV, pos, bad), GuardError);
    bad.keep = std::vector<int>{2, 1};
    CHECK_THROWS_AS(apply(start, K::BV, pos, bad), GuardError);
    bad.keep = std::vector<int>{9};
    CHECK_THROWS_AS(apply(start, K::BV, pos, bad), ReferenceError);
    Site badg = s;
    badg.g1 = 3;
    CHECK_THROWS_AS(apply(start, K::BV, pos, badg), GuardError);
}

TEST_CASE("pinches trade cuspidal curves against handles and components") {
    const MapState torus = state_of({surf(1, 1, {0})});
    Site c0 = site_c(0);
    c0.surface = 1;
    CHECK(apply(torus, K::PG, pos, c0) == state_of({surf(1, 0, {})}));
    Site bare;
    bare.surface = 1;
    CHECK(apply(state_of({surf(1, 0, {})}), K::PG, neg, bare) == torus);

    // Pv consumes the curve while splitting; its inverse merges and births
    // a curve on the fresh surface.
    const MapState split_me = state_of({surf(1, 1, {0, 2})});
    Site sv;
    sv.surface = 1;
    sv.circuit = 0;
    sv.g1 = 0;
    sv.keep = std::vector<int>{};
    CHECK(apply(split_me, K::PV, pos, sv) ==
          state_of({surf(2, 0, {}), surf(3, 1, {2})}));

    const MapState merge_me = state_of({surf(1, 0, {}), surf(2, 0, {2})});
    Site mv;
    mv.surface = 1;
    mv.surface2 = 2;
    CHECK(apply(merge_me, K::PV, neg, mv) == state_of({surf(3, 0, {0, 2})}));
    Site flipped;
    flipped.surface = 2;
    flipped.surface2 = 1;
    CHECK_THROWS_AS(apply(merge_me, K::PV, neg, flipped), GuardError);
}

TEST_CASE("swallowtail crossings create and cancel pairs on circuits") {
    const MapState f0 = canonical_projection();
    Site bare;
    bare.surface = 1;
    const MapState lipsed = apply(f0, K::A3E, pos, bare);
    MapState expected = state_of({surf(1, 0, {2})});
    expected.surfaces[0].direction = SurfaceDirection::inward; // untouched
    CHECK(lipsed == expected);
    Site c0 = site_c(0);
    c0.surface = 1;
    CHECK(apply(lipsed, K::A3E, neg, c0) == f0);
    CHECK_THROWS_AS(
        apply(state_of({surf(1, 0, {4})}), K::A3E, neg, c0), GuardError);

    // A3h2c: two cuspidal curves fuse around a new pair.
    const MapState curves = state_of({surf(1, 0, {0, 0})});
    const MapState paired = state_of({surf(1, 0, {2})});
    Site cc = site_cc(0, 1);
    cc.surface = 1;
    CHECK(apply(curves, K::A3H2C, pos, cc) == paired);
    CHECK(apply(paired, K::A3H2C, neg, c0) == curves);

    // A3hc: a cuspidal curve is absorbed by an edge circuit.
    const MapState mixed = state_of({surf(1, 0, {0, 4})});
    CHECK(apply(mixed, K::A3HC, pos, cc) == state_of({surf(1, 0, {6})}));
    CHECK(apply(state_of({surf(1, 0, {6})}), K::A3HC, neg, c0) == mixed);
    CHECK_THROWS_AS(
        apply(state_of({surf(1, 0, {0, 2})}), K::A3HC, neg, site_cc(0, 1)),
        ReferenceError); // circuit2 is not an A3hc- field
}

TEST_CASE("A3h0 merges or splits edge circuits around a new pair") {
    const MapState two = state_of({surf(1, 0, {2, 2})});
    Site m = site_cc(0, 1);
            m.surface = 1;
    CHECK(apply(two, K::A3H0, pos, m) == state_of({surf(1, 0, {6})}));

    Site back = site_cs(0, 2);
    back.surface = 1;
    CHECK(apply(state_of({surf(1, 0, {6})}), K::A3H0, neg, back) == two);

    // Positive split: one circuit with a pair becomes two, each keeping one.
    const MapState one = state_of({surf(1, 0, {2})});
    Site sp = site_cs(0, 2);
    sp.surface = 1;
    CHECK(apply(one, K::A3H0, pos, sp) == two);
    // Negative merge undoes it.
    CHECK(apply(two, K::A3H0, neg, m) == one);

    // Negative splits need three pairs on the circuit.
    CHECK(site_count(state_of({surf(1, 0, {4})}), K::A3H0, neg) == 0);
    CHECK_THROWS_AS(
        apply(state_of({surf(1, 0, {4})}), K::A3H0, neg, back), GuardError);
    // Plain circuits never reconnect through A3h0.
    CHECK(site_count(state_of({surf(1, 2, {0, 0})}), K::A3H0, pos) == 0);
}

TEST_CASE("transitions preserve directions and prune dangling parents") {
    MapState state = state_of({surf(1, 0, {}), surf(2, 0, {0}), surf(3, 1, {0})});
    state.surfaces[0].direction = SurfaceDirection::inward;
    state.surfaces[2].direction = SurfaceDirection::outward;
    state.surfaces[1].parent = 1;
    state.surfaces[2].parent = 2;

    Site pg = site_c(0);
    pg.surface = 3;
    const MapState pinched = apply(state, K::PG, pos, pg);
    CHECK(pinched.find(1)->direction == SurfaceDirection::inward);
    CHECK(pinched.find(3)->direction == SurfaceDirection::outward);
    CHECK(pinched.find(3)->parent == 2);

    Site drop;
    drop.surface = 2;
    const MapState erased = apply(state, K::L, neg, drop);
    CHECK(erased.find(3) != nullptr);
    CHECK(!erased.find(3)->parent); // parent pointed at the erased sphere
}

TEST_CASE("site enumeration, application and resolution agree on a grid") {
    for (const auto& state : coherence_grid()) {
        CAPTURE(state_text(state));
        for (K kind : all_kinds)
            for (auto dir : {pos, neg}) {
                CAPTURE(to_string(kind) + to_string(dir));
                const auto sites = applicable_sites(state, kind, dir);
                CHECK(sites.size() == site_count(state, kind, dir));

                std::set<std::vector<int>> successor_keys;
                for (std::size_t i = 0; i < sites.size(); ++i) {
                    CHECK(nth_site(state, kind, dir, i) == sites[i]);
                    for (std::size_t j = i + 1; j < sites.size(); ++j)
                        CHECK(!(sites[i] == sites[j]));

                    const MapState next = apply(state, kind, dir, sites[i]);
                    CHECK(validate(next).empty());
                    CHECK(tuple_delta(state, next) == increment_of(kind, dir));
                    successor_keys.insert(canonical_key(next));
                }

                if (!sites.empty())
                    CHECK(resolve_site(state, kind, dir, {}) == sites.front());
                else
                    CHECK_THROWS_AS(resolve_site(state, kind, dir, {}),
                                    GuardError);

                std::set<std::vector<int>> distinct_keys;
                for (const auto& site : distinct_effect_sites(state, kind, dir))
                    distinct_keys.insert(
                        canonical_key(apply(state, kind, dir, site)));
                CHECK(distinct_keys == successor_keys);
            }
    }
}

TEST_CASE("site counts follow the closed-form block sizes") {
    // Bv+ on one surface: plains * (genus + 1) * 2^(circuits - 1).
    const MapState s = state_of({surf(1, 2, {0, 0, 2, 4})});
    CHECK(site_count(s, K::BV, pos) == 2u * 3u * 8u);
    CHECK(site_count(s, K::PV, pos) == 2u * 3u * 8u);
    // B0g on it: one merge pair ({2},{4}) plus the {4} split (2,2).
    CHECK(site_count(s, K::BZeroG, pos) == 2);
    CHECK(site_count(s, K::BZeroG, neg) == 2);
    // A3h0-: the merge pair plus nothing (no circuit has three pairs).
    CHECK(site_count(s, K::A3H0, neg) == 1);
    // A3h0+: the merge pair, {2} -> (2,2), {4} -> (2,4).
    CHECK(site_count(s, K::A3H0, pos) == 3);

    // The splitter state space is exact but guarded against overflow.
    MapState wide = state_of({surf(1, 0, {})});
    for (int i = 0; i < 70; ++i) wide.surfaces[0].circuits.push_back({0});
    CHECK_THROWS_AS(site_count(wide, K::BV, pos), DomainError);
}

TEST_CASE("resolve_site honours partial fields") {
    const MapState s = state_of({surf(1, 2, {0, 0, 2, 4})});

    SUBCASE("bare sites take the first enumerated completion") {
        const Site r = resolve_site(s, K::BZeroG, pos, {});
        CHECK(r.surface == 1);
        CHECK(r.circuit == 2);
        CHECK(r.circuit2 == 3); // merge precedes split
    }

    SUBCASE("a named circuit keeps the merge preference") {
        const Site r = resolve_site(s, K::BZeroG, neg, site_c(3));
        CHECK(r.circuit == 2);
        CHECK(r.circuit2 == 3);
    }

    SUBCASE("s1 selects the split family and the first circuit that fits") {
        Site partial;
        partial.s1 = 2;
        const Site r = resolve_site(s, K::BZeroG, neg, partial);
        CHECK(r.circuit == 3); // only the 4-circuit splits as (2,2)
        CHECK(r.s1 == 2);
        CHECK(!r.circuit2);
    }

    SUBCASE("a lone edge circuit resolves to its split") {
        const MapState t = state_of({surf(1, 0, {2})});
        const Site r = resolve_site(t, K::A3H0, pos, {});
        CHECK(r.circuit == 0);
        CHECK(r.s1 == 2);
    }

    SUBCASE("fixed fields are validated, not silently replaced") {
        CHECK_THROWS_AS(resolve_site(s, K::BZeroG, pos, site_c(0)),
                        GuardError); // circuit 0 is plain
        Site odd;
        odd.s1 = 3;
        CHECK_THROWS_AS(resolve_site(s, K::BZeroG, pos, odd), GuardError);
        Site foreign;
        foreign.surface = 9;
        CHECK_THROWS_AS(resolve_site(s, K::BZeroG, pos, foreign),
                        ReferenceError);
        Site off_field;
        off_field.g1 = 1;
        CHECK_THROWS_AS(resolve_site(s, K::BZeroG, pos, off_field),
                        ReferenceError); // g1 is not a B0g field
    }

    SUBCASE("surface-only resolution picks that surface's first site") {
        const MapState multi =
            state_of({surf(1, 0, {}), surf(2, 1, {0, 4}), surf(3, 0, {2})});
        Site on3;
        on3.surface = 3;
        const Site r = resolve_site(multi, K::A3H0, pos, on3);
        CHECK(r.surface == 3);
        CHECK(r.s1 == 2);
        Site on1;
        on1.surface = 1;
        CHECK_THROWS_AS(resolve_site(multi, K::A3H0, pos, on1), GuardError);
    }
}

TEST_CASE("run_plan records tuples, counts and resolved sites") {
    const StepList plan = {
        {K::L, pos, {}},
        {K::PG, neg, {}},
        {K::A3E, pos, {}},
    };
    const PathTrace trace = run_plan(canonical_projection(), plan);
    REQUIRE(trace.tuple_history.size() == 4);
    CHECK(trace.tuple_history[0] == InvariantTuple{1, 0, 0, 0});
    CHECK(trace.tuple_history[1] == InvariantTuple{2, 1, 0, 0});
    CHECK(trace.tuple_history[2] == InvariantTuple{2, 2, 1, 0});
    CHECK(trace.tuple_history[3] == InvariantTuple{2, 2, 1, 2});
    CHECK(invariants(trace.final_state) == trace.tuple_history.back());
    CHECK(trace.counts.ell == 1);
    CHECK(trace.counts.p_g == -1);
    CHECK(trace.counts.a3e == 1);
    REQUIRE(trace.resolved_steps.size() == 3);
    CHECK(trace.resolved_steps[1].site.surface == 1); // filled in by resolve

    const StepList bad = {{K::BZeroG, pos, {}}};
    CHECK_THROWS_AS(run_plan(canonical_projection(), bad), GuardError);
}

TEST_CASE("plan text round trips every site field") {
    StepList steps = {
        {K::L, pos, {}},
        {K::PG, neg, {}},
        {K::A3E, pos, {}},
    };
    Site bv;
    bv.surface = 1;
    bv.circuit = 0;
    bv.g1 = 2;
    bv.keep = std::vector<int>{1, 3};
    steps.push_back({K::BV, pos, bv});
    Site pv;
    pv.surface = 2;
    pv.surface2 = 3;
    steps.push_back({K::PV, neg, pv});
    Site b0g;
    b0g.surface = 1;
    b0g.circuit = 0;
    b0g.s1 = 4;
    steps.push_back({K::BZeroG, neg, b0g});

    const std::string text = plan_text(steps);
    CHECK(parse_plan_text(text) == steps);
    CHECK(plan_text(parse_plan_text(text)) == text);
}

TEST_CASE("plan parser accepts comments and empty keep lists") {
    const StepList steps = parse_plan_text(
        "plan v1\n"
        "# reach (2,2,1,0)\n"
        "L +\n"
        "\n"
        "Pg - surface=2   # pinched on the new sphere\n"
        "Bv + circuit=0 keep= g1=0\n");
    REQUIRE(steps.size() == 3);
    CHECK(steps[0] == PlanStep{K::L, pos, {}});
    CHECK(steps[1].site.surface == 2);
    REQUIRE(steps[2].site.keep);
    CHECK(steps[2].site.keep->empty());
    CHECK(steps[2].site.g1 == 0);
}

TEST_CASE("plan parser rejects malformed steps") {
    CHECK_THROWS_AS(parse_plan_text(""), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v2\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nXq +\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nL\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nL *\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nL + surface\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nL + surface=x\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nL + colour=3\n"), ParseError);
    CHECK_THROWS_AS(
        parse_plan_text("plan v1\nPg - surface=1 surface=2\n"), ParseError);
    // Fields are checked against the kind and direction at parse time.
    CHECK_THROWS_AS(parse_plan_text("plan v1\nL + surface=1\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nA3e + circuit=0\n"), ParseError);
    CHECK_THROWS_AS(parse_plan_text("plan v1\nPg + g1=1\n"), ParseError);
}

TEST_CASE("blocked reconnections cannot sneak through other kinds") {
    // After a bare swallowtail birth the only circuit has one pair; no
    // reconnection can fire, so the pair cannot be traded for a handle.
    const MapState lipsed = apply(canonical_projection(), K::A3E, pos,
                                  resolve_site(canonical_projection(), K::A3E,
                                               pos, {}));
    CHECK(site_count(lipsed, K::BZeroG, pos) == 0);
    CHECK(site_count(lipsed, K::BZeroG, neg) == 0);
    CHECK(site_count(lipsed, K::A3H0, neg) == 0);
    // The one A3h0+ site splits the pair, it cannot self-increment.
    const auto sites = applicable_sites(lipsed, K::A3H0, pos);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].s1 == 2);
}
