#pragma once

#include <iosfwd>
#include <string>

#include "stablemaps/state.hpp"
#include "stablemaps/transitions.hpp"

namespace stablemaps {

/// Everything the calculus can say about one path of maps: the endpoint
/// invariants, the signed crossing counts, both sides of the global identity
/// and of its difference form, and whether the componentwise bookkeeping
/// (final - initial == aggregate(counts)) checks out.
struct PathReport {
    InvariantTuple initial;
    InvariantTuple final_tuple;
    TransitionCounts counts;

    bool anchored = false; // initial == (1, 0, 0, 0)
    long long lhs = 0;     // ie + ig + ic + is at the endpoint (anchored only)
    long long rhs = 0;     // closed form in the counts (anchored only)
    bool identity_holds = false;

    long long delta_lhs = 0; // change of ie + ig + ic + is along the path
    long long delta_rhs = 0; // same closed form minus the constant term
    bool delta_identity_holds = false;

    bool bookkeeping_holds = false;
};

/// Right-hand side of the global identity for a path that starts at the
/// canonical projection:
///
///   ie + ig + ic + is
///     = 1 + 2*(ell + b_v - b_minus_g - p_g + a3e + a3h0) + a3hc - b_zero_g
///
/// The value is affine in the counts; identity_rhs returns it in full,
/// constant term included.
long long identity_rhs(const TransitionCounts& counts);

/// Replay the steps from `initial` and fill in every field of PathReport.
PathReport make_report(const MapState& initial, const StepList& steps);

/// The global identity for an anchored path.  Throws DomainError when the
/// report is not anchored at (1, 0, 0, 0); the identity's constant term is
/// only meaningful from the base point.
bool check_identity(const PathReport& report);

/// Parity constraint on the crossing counts of a path whose endpoint is free
/// of swallowtails: a3hc - b_zero_g must be even.  Vacuously true when the
/// endpoint has swallowtails.
bool crossing_parity(const PathReport& report);

/// For a map without swallowtail points, ie + ig + ic is odd.  Throws
/// DomainError when t.is != 0.
bool swallowtail_free_parity(const InvariantTuple& t);

/// For a fold map (no cusps at all), ie + ig is odd.  Throws DomainError
/// when t.ic != 0 or t.is != 0.
bool fold_parity(const InvariantTuple& t);

/// Render a report as stable `key=value` lines (used by the CLI verbatim).
void write_report(std::ostream& out, const PathReport& report);
std::string report_text(const PathReport& report);

} // namespace stablemaps
