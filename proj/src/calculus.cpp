#include "stablemaps/calculus.hpp"

#include <sstream>

#include "stablemaps/errors.hpp"

namespace stablemaps {

long long identity_rhs(const TransitionCounts& c) {
    return 1 +
           2 * static_cast<long long>(c.ell + c.b_v - c.b_minus_g - c.p_g +
                                      c.a3e + c.a3h0) +
           c.a3hc - c.b_zero_g;
}

PathReport make_report(const MapState& initial, const StepList& steps) {
    const PathTrace trace = run_plan(initial, steps);

    PathReport report;
    report.initial = trace.tuple_history.front();
    report.final_tuple = trace.tuple_history.back();
    report.counts = trace.counts;

    const auto& f = report.final_tuple;
    const auto& i = report.initial;
    report.anchored = i == InvariantTuple{1, 0, 0, 0};
    report.lhs = static_cast<long long>(f.ie) + f.ig + f.ic + f.is;
    report.rhs = identity_rhs(report.counts);
    report.identity_holds = report.anchored && report.lhs == report.rhs;

    report.delta_lhs = report.lhs - (static_cast<long long>(i.ie) + i.ig +
                                     i.ic + i.is);
    report.delta_rhs = report.rhs - 1;
    report.delta_identity_holds = report.delta_lhs == report.delta_rhs;

    const IncrementVector agg = aggregate(report.counts);
    report.bookkeeping_holds =
        f.ie - i.ie == agg.d_ie && f.ic - i.ic == agg.d_ic &&
        f.ig - i.ig == agg.d_ig && f.is - i.is == agg.d_is;
    return report;
}

bool check_identity(const PathReport& report) {
    if (!report.anchored)
        throw DomainError(
            "the global identity is anchored at the canonical projection; "
            "this path starts at " +
            to_string(report.initial));
    return report.lhs == report.rhs;
}

bool crossing_parity(const PathReport& report) {
    if (report.final_tuple.is != 0) return true;
    return (report.counts.a3hc - report.counts.b_zero_g) % 2 == 0;
}

bool swallowtail_free_parity(const InvariantTuple& t) {
    if (t.is != 0)
        throw DomainError("parity law for swallowtail-free maps called on " +
                          to_string(t));
    return (t.ie + t.ig + t.ic) % 2 != 0;
}

bool fold_parity(const InvariantTuple& t) {
    if (t.ic != 0 || t.is != 0)
        throw DomainError("fold parity law called on a map with cusps: " +
                          to_string(t));
    return (t.ie + t.ig) % 2 != 0;
}

void write_report(std::ostream& out, const PathReport& report) {
    const auto& c = report.counts;
    out << "initial=" << to_string(report.initial) << "\n";
    out << "final=" << to_string(report.final_tuple) << "\n";
    out << "iv=" << report.final_tuple.iv() << "\n";
    out << "counts L=" << c.ell << " B-g=" << c.b_minus_g
        << " B0g=" << c.b_zero_g << " B+g=" << c.b_plus_g << " Bv=" << c.b_v
        << " Pg=" << c.p_g << " Pv=" << c.p_v << " A3e=" << c.a3e
        << " A3h2c=" << c.a3h2c << " A3hc=" << c.a3hc << " A3h0=" << c.a3h0
        << "\n";
    out << "bookkeeping=" << (report.bookkeeping_holds ? "true" : "false")
        << "\n";
    out << "delta_lhs=" << report.delta_lhs << "\n";
    out << "delta_rhs=" << report.delta_rhs << "\n";
    out << "delta_identity=" << (report.delta_identity_holds ? "true" : "false")
        << "\n";
    if (report.anchored) {
        out << "lhs=" << report.lhs << "\n";
        out << "rhs=" << report.rhs << "\n";
        out << "identity=" << (report.identity_holds ? "true" : "false")
            << "\n";
    }
    if (report.final_tuple.is == 0) {
        out << "count_parity="
            << ((c.a3hc - c.b_zero_g) % 2 == 0 ? "true" : "false") << "\n";
        out << "tuple_parity="
            << (swallowtail_free_parity(report.final_tuple) ? "true" : "false")
            << "\n";
    }
}

std::string report_text(const PathReport& report) {
    std::ostringstream out;
    write_report(out, report);
    return out.str();
}

} // namespace stablemaps
