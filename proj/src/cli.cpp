#include "stablemaps/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stablemaps/calculus.hpp"
#include "stablemaps/errors.hpp"
#include "stablemaps/explorer.hpp"
#include "stablemaps/fixtures.hpp"
#include "stablemaps/planner.hpp"
#include "stablemaps/realizability.hpp"
#include "stablemaps/state.hpp"
#include "stablemaps/transitions.hpp"

namespace stablemaps::cli {

namespace {

std::vector<int> parse_csv_ints(const std::string& text, const std::string& what) {
    if (text.empty()) throw ParseError(what + " must not be empty");
    std::vector<int> values;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            values.push_back(static_cast<int>(v));
        } catch (const std::exception&) {
            throw ParseError("expected an integer in " + what + ", got '" +
                             item + "'");
        }
    }
    return values;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << text;
}

bool report_laws_hold(const PathReport& report) {
    if (!report.bookkeeping_holds || !report.delta_identity_holds) return false;
    if (report.anchored && !report.identity_holds) return false;
    if (!crossing_parity(report)) return false;
    if (report.final_tuple.is == 0 &&
        !swallowtail_free_parity(report.final_tuple))
        return false;
    return true;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Invariant calculus for singular sets of stable maps from the "
                 "3-sphere to 3-space"};
    app.name("stablemaps");
    app.require_subcommand(1);

    // invariants
    std::string state_path;
    auto* cmd_invariants =
        app.add_subcommand("invariants", "Read the invariant tuple off a state file");
    cmd_invariants->add_option("state", state_path, "mapstate v1 file")
        ->required();

    // apply
    std::string apply_state, apply_plan, apply_out;
    auto* cmd_apply = app.add_subcommand(
        "apply", "Replay a plan against a state and report the final tuple");
    cmd_apply->add_option("state", apply_state, "mapstate v1 file")->required();
    cmd_apply->add_option("plan", apply_plan, "plan v1 file")->required();
    cmd_apply->add_option("--out", apply_out, "write the final state here");

    // verify
    std::string verify_state, verify_plan;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Replay a plan and check every law that applies to it");
    cmd_verify->add_option("state", verify_state, "mapstate v1 file")->required();
    cmd_verify->add_option("plan", verify_plan, "plan v1 file")->required();

    // plan
    std::string plan_target, plan_out;
    int plan_max_steps = 12;
    auto* cmd_plan = app.add_subcommand(
        "plan", "Search for a shortest plan reaching a target tuple");
    cmd_plan->add_option("--target", plan_target, "target tuple ie,ic,ig,is")
        ->required();
    cmd_plan->add_option("--max-steps", plan_max_steps,
                         "search depth cap (default 12)");
    cmd_plan->add_option("--out", plan_out, "write the plan here");

    // plan-prescribed
    std::string prescribed_genera, prescribed_out;
    auto* cmd_prescribed = app.add_subcommand(
        "plan-prescribed",
        "Closed-form plan for a swallowtail-free map with prescribed genera");
    cmd_prescribed
        ->add_option("--genera", prescribed_genera, "comma-separated genera")
        ->required();
    cmd_prescribed->add_option("--out", prescribed_out, "write the plan here");

    // plan-fold-free
    int ff_n = 0, ff_q = 0;
    std::string ff_out;
    auto* cmd_fold_free = app.add_subcommand(
        "plan-fold-free",
        "Closed-form plan for a map with swallowtails but no cuspidal curves");
    cmd_fold_free->add_option("--n", ff_n, "sphere pairs to add")->required();
    cmd_fold_free->add_option("--q", ff_q, "total genus")->required();
    cmd_fold_free->add_option("--out", ff_out, "write the plan here");

    // enumerate
    int enum_max_steps = 0;
    bool enum_st_free = false;
    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "List every invariant tuple reachable within a step budget");
    cmd_enumerate->add_option("--max-steps", enum_max_steps, "step budget")
        ->required();
    cmd_enumerate->add_flag("--swallowtail-free", enum_st_free,
                            "only tuples with no swallowtail points");

    // walk
    std::uint64_t walk_seed = 0;
    int walk_steps = 0;
    bool walk_check = false;
    std::string walk_out;
    auto* cmd_walk = app.add_subcommand(
        "walk", "Random walk over applicable transitions, reproducible by seed");
    cmd_walk->add_option("--seed", walk_seed, "generator seed")->required();
    cmd_walk->add_option("--steps", walk_steps, "number of crossings")->required();
    cmd_walk->add_flag("--check", walk_check,
                       "check bookkeeping and identity along the walk");
    cmd_walk->add_option("--out", walk_out, "write the trace here");

    // check-fold
    std::string fold_genera, fold_pairs;
    int fold_concentric = 0;
    auto* cmd_fold = app.add_subcommand(
        "check-fold", "Fold-map feasibility of a genus list, with witnesses");
    auto* opt_genera =
        cmd_fold->add_option("--genera", fold_genera, "comma-separated genera");
    auto* opt_concentric = cmd_fold->add_option(
        "--concentric", fold_concentric, "witness: odd count of fold spheres");
    auto* opt_pairs = cmd_fold->add_option(
        "--nested-pairs", fold_pairs,
        "witness: genus list, one nested pair per entry");
    opt_genera->excludes(opt_concentric)->excludes(opt_pairs);
    opt_concentric->excludes(opt_pairs);

    // fixtures
    auto* cmd_fixtures = app.add_subcommand(
        "fixtures", "Run the built-in worked examples and report each check");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_invariants->parsed()) {
            const MapState state = load_state(state_path);
            const InvariantTuple t = invariants(state);
            out << "invariants=" << to_string(t) << "\n";
            out << "iv=" << t.iv() << "\n";
            return 0;
        }

        if (cmd_apply->parsed()) {
            const MapState state = load_state(apply_state);
            const StepList steps = load_plan(apply_plan);
            const PathTrace trace = run_plan(state, steps);
            out << "steps=" << trace.resolved_steps.size() << "\n";
            out << "final=" << to_string(trace.tuple_history.back()) << "\n";
            if (!apply_out.empty())
                save_state(apply_out, trace.final_state);
            else
                write_state(out, trace.final_state);
            return 0;
        }

        if (cmd_verify->parsed()) {
            const MapState state = load_state(verify_state);
            const StepList steps = load_plan(verify_plan);
            const PathReport report = make_report(state, steps);
            write_report(out, report);
            return report_laws_hold(report) ? 0 : 1;
        }

        if (cmd_plan->parsed()) {
            const InvariantTuple target = parse_tuple(plan_target);
            if (plan_max_steps < 0)
                throw DomainError("--max-steps must be non-negative");
            const auto plan = bfs_plan(target, plan_max_steps);
            if (!plan) {
                out << "unreachable within " << plan_max_steps << " steps\n";
                return 1;
            }
            out << "length=" << plan->steps.size() << "\n";
            write_plan(out, plan->steps);
            if (!plan_out.empty()) save_plan(plan_out, plan->steps);
            return 0;
        }

        if (cmd_prescribed->parsed() || cmd_fold_free->parsed()) {
            Plan plan;
            if (cmd_prescribed->parsed())
                plan = plan_prescribed(
                    parse_csv_ints(prescribed_genera, "--genera"));
            else
                plan = plan_fold_free_cusps(ff_n, ff_q);

            // The step counts must account for the expected tuple; replay
            // and check the path laws whenever the plan has a realization
            // (all fold-free plans except n = 0 with q >= 1).
            const IncrementVector delta = aggregate(counts_of(plan.steps));
            const InvariantTuple f0 = invariants(canonical_projection());
            if (plan.expected_final.ie != f0.ie + delta.d_ie ||
                plan.expected_final.ic != f0.ic + delta.d_ic ||
                plan.expected_final.ig != f0.ig + delta.d_ig ||
                plan.expected_final.is != f0.is + delta.d_is)
                throw Error("construction counts do not reach " +
                            to_string(plan.expected_final));
            if (cmd_prescribed->parsed() || ff_n >= 1 || ff_q == 0) {
                const PathReport report =
                    make_report(canonical_projection(), plan.steps);
                if (report.final_tuple != plan.expected_final ||
                    !report_laws_hold(report))
                    throw Error("construction reached " +
                                to_string(report.final_tuple) +
                                " instead of " +
                                to_string(plan.expected_final));
            }
            out << "final=" << to_string(plan.expected_final) << "\n";
            write_plan(out, plan.steps);
            const std::string& path =
                cmd_prescribed->parsed() ? prescribed_out : ff_out;
            if (!path.empty()) save_plan(path, plan.steps);
            return 0;
        }

        if (cmd_enumerate->parsed()) {
            if (enum_max_steps < 0)
                throw DomainError("--max-steps must be non-negative");
            for (const auto& t : enumerate_reachable(enum_max_steps)) {
                if (enum_st_free && t.is != 0) continue;
                out << to_string(t) << "\n";
            }
            return 0;
        }

        if (cmd_walk->parsed()) {
            if (walk_steps < 0)
                throw DomainError("--steps must be non-negative");
            const WalkTrace trace = random_walk(walk_seed, walk_steps);
            out << trace_text(trace);
            out << "final=" << to_string(trace.tuple_history.back()) << "\n";
            if (!walk_out.empty()) save_text(walk_out, trace_text(trace));
            if (walk_check) {
                const PathReport report =
                    make_report(canonical_projection(), trace.steps);
                const bool same_walk =
                    report.final_tuple == trace.tuple_history.back() &&
                    report.counts == trace.counts;
                out << "checked=" << trace.steps.size() << " steps\n";
                return (same_walk && report_laws_hold(report)) ? 0 : 1;
            }
            return 0;
        }

        if (cmd_fold->parsed()) {
            NestingForest forest;
            bool have_forest = false;
            std::vector<int> genera;
            if (opt_concentric->count()) {
                forest = construct_concentric(fold_concentric);
                have_forest = true;
                genera = genus_list(forest);
            } else if (opt_pairs->count()) {
                forest = construct_nested_pairs(
                    parse_csv_ints(fold_pairs, "--nested-pairs"));
                have_forest = true;
                genera = genus_list(forest);
            } else if (opt_genera->count()) {
                genera = parse_csv_ints(fold_genera, "--genera");
            } else {
                throw DomainError(
                    "check-fold needs --genera, --concentric or --nested-pairs");
            }

            const bool feasible = fold_feasible(genera);
            out << "feasible=" << (feasible ? "true" : "false") << "\n";
            if (have_forest) write_state(out, forest);
            return feasible ? 0 : 1;
        }

        if (cmd_fixtures->parsed()) return run_fixtures(out) ? 0 : 1;
    } catch (const stablemaps::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no command given\n";
    return 2;
}

} // namespace stablemaps::cli
