#include "stablemaps/transitions.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "stablemaps/errors.hpp"

namespace stablemaps {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 checked_u64(u128 v) {
    if (v > static_cast<u128>(std::uint64_t{1} << 62))
        throw DomainError("site space too large to enumerate");
    return static_cast<u64>(v);
}

u64 pow2_checked(int k) {
    if (k < 0) return 1;
    if (k >= 62) throw DomainError("site space too large to enumerate");
    return u64{1} << k;
}

u64 choose2(u64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Lexicographic unranking of the n-th pair (a, b) with 0 <= a < b < m.
std::pair<int, int> unrank_pair(u64 n, int m) {
    for (int a = 0; a + 1 < m; ++a) {
        const u64 c = static_cast<u64>(m - 1 - a);
        if (n < c) return {a, a + 1 + static_cast<int>(n)};
        n -= c;
    }
    throw DomainError("pair index out of range");
}

// Circuit layout of a surface.  Circuits are sorted ascending, so the zero
// circuits occupy a prefix and the heavier circuits a suffix.
struct Roles {
    int k = 0;   // total circuits
    int z = 0;   // swallowtail-free circuits, indices [0, z)
    int e2 = 0;  // circuits with >= 2 swallowtails, indices [z, k)
    int eq2 = 0; // circuits with exactly 2, indices [z, z + eq2)
    int e4 = 0;  // circuits with >= 4, indices [k - e4, k)
    int g = 0;
};

Roles roles_of(const SurfaceComponent& s) {
    Roles r;
    r.k = static_cast<int>(s.circuits.size());
    for (const auto& c : s.circuits) {
        if (c.swallowtails == 0) ++r.z;
        if (c.swallowtails == 2) ++r.eq2;
        if (c.swallowtails >= 4) ++r.e4;
    }
    r.e2 = r.k - r.z;
    r.g = s.genus;
    return r;
}

// Number of ways to split `total` swallowtails over two circuits (s1,
// total - s1) with even s1 and 2 <= s1 <= total - s1.  Slot j encodes
// s1 = 2(j + 1).
u64 even_splits(int total) {
    if (total < 4) return 0;
    return static_cast<u64>(total / 4);
}

// Swallowtails on the merged circuit / to distribute over a split, for the
// two reconnection transitions.  B0g preserves the total; A3h0 adds or
// removes one swallowtail pair.
int reconnect_total(TransitionKind kind, bool pos, int sw) {
    if (kind == TransitionKind::BZeroG) return sw;
    return pos ? sw + 2 : sw - 2;
}

void insert_circuit(SurfaceComponent& s, int swallowtails) {
    CuspCircuit c{swallowtails};
    s.circuits.insert(
        std::upper_bound(s.circuits.begin(), s.circuits.end(), c), c);
}

std::vector<CuspCircuit> circuits_without(const SurfaceComponent& s,
                                          std::vector<int> drop) {
    std::sort(drop.begin(), drop.end());
    std::vector<CuspCircuit> out;
    for (int i = 0; i < static_cast<int>(s.circuits.size()); ++i)
        if (!std::binary_search(drop.begin(), drop.end(), i))
            out.push_back(s.circuits[i]);
    return out;
}

// Remove surfaces by id; nesting links into removed surfaces are dropped,
// since a transition that consumes a surface scrambles the nesting nearby.
MapState remove_surfaces(const MapState& state, std::vector<SurfaceId> ids) {
    MapState out = state;
    std::erase_if(out.surfaces, [&](const SurfaceComponent& s) {
        return std::find(ids.begin(), ids.end(), s.id) != ids.end();
    });
    for (auto& s : out.surfaces)
        if (s.parent &&
            std::find(ids.begin(), ids.end(), *s.parent) != ids.end())
            s.parent.reset();
    return out;
}

std::string site_what(TransitionKind kind, StepDirection dir) {
    return to_string(kind) + " " + to_string(dir);
}

// --- field masks ------------------------------------------------------

enum FieldBit : unsigned {
    f_surface = 1u << 0,
    f_surface2 = 1u << 1,
    f_circuit = 1u << 2,
    f_circuit2 = 1u << 3,
    f_g1 = 1u << 4,
    f_keep = 1u << 5,
    f_s1 = 1u << 6,
};

unsigned allowed_fields(TransitionKind kind, StepDirection dir) {
    const bool pos = dir == StepDirection::positive;
    switch (kind) {
    case TransitionKind::L:
        return pos ? 0u : f_surface;
    case TransitionKind::BMinusG:
        return pos ? (f_surface | f_circuit | f_circuit2)
                   : (f_surface | f_circuit);
    case TransitionKind::BZeroG:
        return f_surface | f_circuit | f_circuit2 | f_s1;
    case TransitionKind::BPlusG:
        return pos ? (f_surface | f_circuit)
                   : (f_surface | f_circuit | f_circuit2);
    case TransitionKind::BV:
        return pos ? (f_surface | f_circuit | f_g1 | f_keep)
                   : (f_surface | f_surface2 | f_circuit | f_circuit2);
    case TransitionKind::PG:
        return pos ? (f_surface | f_circuit) : f_surface;
    case TransitionKind::PV:
        return pos ? (f_surface | f_circuit | f_g1 | f_keep)
                   : (f_surface | f_surface2);
    case TransitionKind::A3E:
        return pos ? f_surface : (f_surface | f_circuit);
    case TransitionKind::A3H2C:
        return pos ? (f_surface | f_circuit | f_circuit2)
                   : (f_surface | f_circuit);
    case TransitionKind::A3HC:
        return pos ? (f_surface | f_circuit | f_circuit2)
                   : (f_surface | f_circuit);
    case TransitionKind::A3H0:
        return f_surface | f_circuit | f_circuit2 | f_s1;
    }
    throw Error("corrupt transition kind");
}

unsigned fields_present(const Site& site) {
    unsigned m = 0;
    if (site.surface) m |= f_surface;
    if (site.surface2) m |= f_surface2;
    if (site.circuit) m |= f_circuit;
    if (site.circuit2) m |= f_circuit2;
    if (site.g1) m |= f_g1;
    if (site.keep) m |= f_keep;
    if (site.s1) m |= f_s1;
    return m;
}

const char* field_name(unsigned bit) {
    switch (bit) {
    case f_surface: return "surface";
    case f_surface2: return "surface2";
    case f_circuit: return "circuit";
    case f_circuit2: return "circuit2";
    case f_g1: return "g1";
    case f_keep: return "keep";
    case f_s1: return "s1";
    }
    return "?";
}

void check_fields(TransitionKind kind, StepDirection dir, const Site& site) {
    const unsigned extra = fields_present(site) & ~allowed_fields(kind, dir);
    if (extra)
        for (unsigned bit = 1; bit <= f_s1; bit <<= 1)
            if (extra & bit)
                throw ReferenceError("field '" + std::string(field_name(bit)) +
                                     "' does not apply to " + site_what(kind, dir));
}

// --- site resolution helpers ------------------------------------------

const SurfaceComponent& need_surface(const MapState& state, const Site& site,
                                     TransitionKind kind, StepDirection dir) {
    if (!site.surface)
        throw ReferenceError(site_what(kind, dir) + " needs a surface");
    const SurfaceComponent* s = state.find(*site.surface);
    if (!s)
        throw ReferenceError("no surface with id " +
                             std::to_string(*site.surface));
    return *s;
}

int need_index(const SurfaceComponent& s, const std::optional<int>& idx,
               const std::string& what) {
    if (!idx) throw ReferenceError("missing " + what);
    if (*idx < 0 || *idx >= static_cast<int>(s.circuits.size()))
        throw ReferenceError(what + " " + std::to_string(*idx) +
                             " out of range on surface " + std::to_string(s.id));
    return *idx;
}

void guard(bool ok, const std::string& message) {
    if (!ok) throw GuardError(message);
}

int sw_at(const SurfaceComponent& s, int idx) {
    return s.circuits[idx].swallowtails;
}

// Shared circuit surgery of the B0g and A3h0 crossings.  The site names
// `circuit` plus exactly one of `circuit2` (merge two swallowtail-bearing
// circuits into one) or `s1` (split one such circuit in two, the first piece
// keeping s1 swallowtails).  B0g preserves the swallowtail total; A3h0 adds
// (positive) or removes (negative) one pair at the reconnection point.
void reconnect_circuits(const SurfaceComponent& s, const Site& site,
                        TransitionKind kind, bool pos, const std::string& what,
                        SurfaceComponent& t) {
    if (site.circuit2 && site.s1)
        throw ReferenceError("site has both circuit2 and s1");
    const int a = need_index(s, site.circuit, "circuit");
    if (site.circuit2) {
        const int b = need_index(s, site.circuit2, "circuit2");
        guard(a < b, what + " needs circuit < circuit2");
        guard(sw_at(s, a) >= 2 && sw_at(s, b) >= 2,
              what + " reconnects circuits that carry swallowtails");
        t.circuits = circuits_without(s, {a, b});
        insert_circuit(t,
                       reconnect_total(kind, pos, sw_at(s, a) + sw_at(s, b)));
        return;
    }
    if (!site.s1) throw ReferenceError("missing circuit2 or s1");
    const int s1 = *site.s1;
    guard(sw_at(s, a) >= 2,
          what + " reconnects circuits that carry swallowtails");
    const int total = reconnect_total(kind, pos, sw_at(s, a));
    guard(s1 >= 2 && s1 % 2 == 0 && 2 * s1 <= total,
          what + " needs even s1 with 2 <= s1 <= " + std::to_string(total) +
              " - s1");
    t.circuits = circuits_without(s, {a});
    insert_circuit(t, s1);
    insert_circuit(t, total - s1);
}

} // namespace

// --- increments and counts ---------------------------------------------

IncrementVector increment_of(TransitionKind kind, StepDirection direction) {
    IncrementVector v;
    switch (kind) {
    case TransitionKind::L: v = {1, 1, 0, 0}; break;
    case TransitionKind::BMinusG: v = {0, -1, -1, 0}; break;
    case TransitionKind::BZeroG: v = {0, 0, -1, 0}; break;
    case TransitionKind::BPlusG: v = {0, 1, -1, 0}; break;
    case TransitionKind::BV: v = {1, 1, 0, 0}; break;
    case TransitionKind::PG: v = {0, -1, -1, 0}; break;
    case TransitionKind::PV: v = {1, -1, 0, 0}; break;
    case TransitionKind::A3E: v = {0, 0, 0, 2}; break;
    case TransitionKind::A3H2C: v = {0, -2, 0, 2}; break;
    case TransitionKind::A3HC: v = {0, -1, 0, 2}; break;
    case TransitionKind::A3H0: v = {0, 0, 0, 2}; break;
    }
    return direction == StepDirection::positive ? v : -v;
}

TransitionCounts& TransitionCounts::operator+=(const TransitionCounts& o) {
    ell += o.ell;
    b_minus_g += o.b_minus_g;
    b_zero_g += o.b_zero_g;
    b_plus_g += o.b_plus_g;
    b_v += o.b_v;
    p_g += o.p_g;
    p_v += o.p_v;
    a3e += o.a3e;
    a3h2c += o.a3h2c;
    a3hc += o.a3hc;
    a3h0 += o.a3h0;
    return *this;
}

int& TransitionCounts::slot(TransitionKind kind) {
    switch (kind) {
    case TransitionKind::L: return ell;
    case TransitionKind::BMinusG: return b_minus_g;
    case TransitionKind::BZeroG: return b_zero_g;
    case TransitionKind::BPlusG: return b_plus_g;
    case TransitionKind::BV: return b_v;
    case TransitionKind::PG: return p_g;
    case TransitionKind::PV: return p_v;
    case TransitionKind::A3E: return a3e;
    case TransitionKind::A3H2C: return a3h2c;
    case TransitionKind::A3HC: return a3hc;
    case TransitionKind::A3H0: return a3h0;
    }
    throw Error("corrupt transition kind");
}

int TransitionCounts::slot(TransitionKind kind) const {
    return const_cast<TransitionCounts*>(this)->slot(kind);
}

IncrementVector aggregate(const TransitionCounts& c) {
    IncrementVector v;
    v.d_ie = c.ell + c.b_v + c.p_v;
    v.d_ic = c.ell - c.b_minus_g + c.b_plus_g + c.b_v - c.p_g - c.p_v -
             2 * c.a3h2c - c.a3hc;
    v.d_ig = -(c.b_minus_g + c.b_zero_g + c.b_plus_g + c.p_g);
    v.d_is = 2 * (c.a3e + c.a3h2c + c.a3hc + c.a3h0);
    return v;
}

TransitionCounts counts_of(const StepList& steps) {
    TransitionCounts c;
    for (const auto& step : steps)
        c.slot(step.kind) += step.direction == StepDirection::positive ? 1 : -1;
    return c;
}

// --- apply ---------------------------------------------------------------

MapState apply(const MapState& state, TransitionKind kind,
               StepDirection direction, const Site& site) {
    check_fields(kind, direction, site);
    const bool pos = direction == StepDirection::positive;
    const std::string what = site_what(kind, direction);
    MapState out = state;

    switch (kind) {
    case TransitionKind::L: {
        if (pos) {
            SurfaceComponent sphere;
            sphere.id = state.fresh_id();
            insert_circuit(sphere, 0);
            out.surfaces.push_back(std::move(sphere));
            return out;
        }
        const auto& s = need_surface(state, site, kind, direction);
        guard(state.surfaces.size() >= 2,
              "L - cannot erase the last singular surface");
        guard(s.genus == 0 && s.circuits.size() == 1 && sw_at(s, 0) == 0,
              "L - needs a sphere carrying exactly one cuspidal curve");
        return remove_surfaces(state, {s.id});
    }

    case TransitionKind::BMinusG: {
        const auto& s = need_surface(state, site, kind, direction);
        auto* t = out.find(s.id);
        if (pos) {
            guard(s.genus >= 1, what + " requires genus >= 1 on surface " +
                                    std::to_string(s.id));
            const int a = need_index(s, site.circuit, "circuit");
            const int b = need_index(s, site.circuit2, "circuit2");
            guard(a < b, what + " needs circuit < circuit2");
            guard(sw_at(s, a) == 0 && sw_at(s, b) == 0,
                  what + " merges two cuspidal curves without swallowtails");
            t->circuits = circuits_without(s, {a, b});
            insert_circuit(*t, 0);
            t->genus -= 1;
            return out;
        }
        const int a = need_index(s, site.circuit, "circuit");
        guard(sw_at(s, a) == 0,
              what + " splits a cuspidal curve without swallowtails");
        t->circuits = circuits_without(s, {a});
        insert_circuit(*t, 0);
        insert_circuit(*t, 0);
        t->genus += 1;
        return out;
    }

    case TransitionKind::BZeroG: {
        const auto& s = need_surface(state, site, kind, direction);
        if (pos)
            guard(s.genus >= 1, what + " requires genus >= 1 on surface " +
                                    std::to_string(s.id));
        auto* t = out.find(s.id);
        reconnect_circuits(s, site, kind, pos, what, *t);
        t->genus += pos ? -1 : 1;
        return out;
    }

    case TransitionKind::BPlusG: {
        const auto& s = need_surface(state, site, kind, direction);
        auto* t = out.find(s.id);
        if (pos) {
            guard(s.genus >= 1, what + " requires genus >= 1 on surface " +
                                    std::to_string(s.id));
            const int a = need_index(s, site.circuit, "circuit");
            guard(sw_at(s, a) == 0,
                  what + " splits a cuspidal curve without swallowtails");
            insert_circuit(*t, 0);
            t->genus -= 1;
            return out;
        }
        const int a = need_index(s, site.circuit, "circuit");
        const int b = need_index(s, site.circuit2, "circuit2");
        guard(a < b, what + " needs circuit < circuit2");
        guard(sw_at(s, a) == 0 && sw_at(s, b) == 0,
              what + " merges two cuspidal curves without swallowtails");
        t->circuits = circuits_without(s, {a, b});
        insert_circuit(*t, 0);
        t->genus += 1;
        return out;
    }

    case TransitionKind::BV:
    case TransitionKind::PV: {
        const bool beaks = kind == TransitionKind::BV;
        if (pos) {
            // Split one surface into two fragments.  For Bv the chosen
            // cuspidal curve is pinched into one curve per fragment; for Pv
            // it is consumed.
            const auto& s = need_surface(state, site, kind, direction);
            const int a = need_index(s, site.circuit, "circuit");
            guard(sw_at(s, a) == 0,
                  what + " splits along a cuspidal curve without swallowtails");
            if (!site.g1) throw ReferenceError("missing g1");
            const int g1 = *site.g1;
            guard(g1 >= 0 && g1 <= s.genus,
                  what + " needs 0 <= g1 <= genus of surface " +
                      std::to_string(s.id));
            if (!site.keep) throw ReferenceError("missing keep");
            const auto& keep = *site.keep;
            for (std::size_t i = 0; i < keep.size(); ++i) {
                if (keep[i] < 0 || keep[i] >= static_cast<int>(s.circuits.size()))
                    throw ReferenceError("keep index out of range");
                guard(keep[i] != a, what + " cannot keep the split circuit");
                if (i > 0)
                    guard(keep[i - 1] < keep[i],
                          what + " needs keep sorted ascending without repeats");
            }

            SurfaceComponent f1, f2;
            f1.id = state.fresh_id();
            f2.id = f1.id + 1;
            f1.genus = g1;
            f2.genus = s.genus - g1;
            for (int i = 0; i < static_cast<int>(s.circuits.size()); ++i) {
                if (i == a) continue;
                const bool kept = std::binary_search(keep.begin(), keep.end(), i);
                insert_circuit(kept ? f1 : f2, sw_at(s, i));
            }
            if (beaks) {
                insert_circuit(f1, 0);
                insert_circuit(f2, 0);
            }
            out = remove_surfaces(state, {s.id});
            out.surfaces.push_back(std::move(f1));
            out.surfaces.push_back(std::move(f2));
            return out;
        }
        // Merge two surfaces into one.
        const auto& s1 = need_surface(state, site, kind, direction);
        if (!site.surface2)
            throw ReferenceError(what + " needs a surface2");
        const SurfaceComponent* s2 = state.find(*site.surface2);
        if (!s2)
            throw ReferenceError("no surface with id " +
                                 std::to_string(*site.surface2));
        guard(s1.id < s2->id, what + " needs surface < surface2");

        SurfaceComponent merged;
        merged.id = state.fresh_id();
        merged.genus = s1.genus + s2->genus;
        std::vector<CuspCircuit> c1 = s1.circuits, c2 = s2->circuits;
        if (beaks) {
            const int a = need_index(s1, site.circuit, "circuit");
            const int b = need_index(*s2, site.circuit2, "circuit2");
            guard(sw_at(s1, a) == 0 && sw_at(*s2, b) == 0,
                  what + " joins cuspidal curves without swallowtails");
            c1 = circuits_without(s1, {a});
            c2 = circuits_without(*s2, {b});
        }
        for (const auto& c : c1) insert_circuit(merged, c.swallowtails);
        for (const auto& c : c2) insert_circuit(merged, c.swallowtails);
        insert_circuit(merged, 0);
        out = remove_surfaces(state, {s1.id, s2->id});
        out.surfaces.push_back(std::move(merged));
        return out;
    }

    case TransitionKind::PG: {
        const auto& s = need_surface(state, site, kind, direction);
        auto* t = out.find(s.id);
        if (pos) {
            guard(s.genus >= 1, what + " requires genus >= 1 on surface " +
                                    std::to_string(s.id));
            const int a = need_index(s, site.circuit, "circuit");
            guard(sw_at(s, a) == 0,
                  what + " consumes a cuspidal curve without swallowtails");
            t->circuits = circuits_without(s, {a});
            t->genus -= 1;
            return out;
        }
        insert_circuit(*t, 0);
        t->genus += 1;
        return out;
    }

    case TransitionKind::A3E: {
        const auto& s = need_surface(state, site, kind, direction);
        auto* t = out.find(s.id);
        if (pos) {
            insert_circuit(*t, 2);
            return out;
        }
        const int a = need_index(s, site.circuit, "circuit");
        guard(sw_at(s, a) == 2,
              what + " removes a circuit carrying exactly one swallowtail pair");
        t->circuits = circuits_without(s, {a});
        return out;
    }

    case TransitionKind::A3H2C: {
        const auto& s = need_surface(state, site, kind, direction);
        auto* t = out.find(s.id);
        if (pos) {
            const int a = need_index(s, site.circuit, "circuit");
            const int b = need_index(s, site.circuit2, "circuit2");
            guard(a < b, what + " needs circuit < circuit2");
            guard(sw_at(s, a) == 0 && sw_at(s, b) == 0,
                  what + " joins two cuspidal curves without swallowtails");
            t->circuits = circuits_without(s, {a, b});
            insert_circuit(*t, 2);
            return out;
        }
        const int a = need_index(s, site.circuit, "circuit");
        guard(sw_at(s, a) == 2,
              what + " splits a circuit carrying exactly one swallowtail pair");
        t->circuits = circuits_without(s, {a});
        insert_circuit(*t, 0);
        insert_circuit(*t, 0);
        return out;
    }

    case TransitionKind::A3HC: {
        const auto& s = need_surface(state, site, kind, direction);
        auto* t = out.find(s.id);
        if (pos) {
            const int a = need_index(s, site.circuit, "circuit");
            const int b = need_index(s, site.circuit2, "circuit2");
            guard(sw_at(s, a) == 0,
                  what + " consumes a cuspidal curve without swallowtails");
            guard(b != a && sw_at(s, b) >= 2,
                  what + " needs a second circuit that carries swallowtails");
            t->circuits = circuits_without(s, {a, b});
            insert_circuit(*t, sw_at(s, b) + 2);
            return out;
        }
        const int a = need_index(s, site.circuit, "circuit");
        guard(sw_at(s, a) >= 4,
              what + " splits a circuit carrying at least two swallowtail pairs");
        t->circuits = circuits_without(s, {a});
        insert_circuit(*t, 0);
        insert_circuit(*t, sw_at(s, a) - 2);
        return out;
    }

    case TransitionKind::A3H0: {
        const auto& s = need_surface(state, site, kind, direction);
        reconnect_circuits(s, site, kind, pos, what, *out.find(s.id));
        return out;
    }
    }
    throw Error("corrupt transition kind");
}

// --- site enumeration ----------------------------------------------------

namespace {

// Sites of (kind, dir) whose primary surface is state.surfaces[idx], in the
// fixed enumeration order.
u64 surface_block(const MapState& state, std::size_t idx, TransitionKind kind,
                  StepDirection dir) {
    const auto& s = state.surfaces[idx];
    const Roles r = roles_of(s);
    const bool pos = dir == StepDirection::positive;

    switch (kind) {
    case TransitionKind::L:
        if (pos) return 0; // global site, handled by the caller
        return (r.g == 0 && r.k == 1 && r.z == 1 && state.surfaces.size() >= 2)
                   ? 1
                   : 0;
    case TransitionKind::BMinusG:
        if (pos) return r.g >= 1 ? choose2(r.z) : 0;
        return r.z;
    case TransitionKind::BZeroG:
        if (pos && r.g < 1) return 0;
        [[fallthrough]];
    case TransitionKind::A3H0: {
        u64 total = choose2(r.e2); // merges of two circuits carrying arcs
        for (const auto& c : s.circuits)
            total += even_splits(reconnect_total(kind, pos, c.swallowtails));
        return total;
    }
    case TransitionKind::BPlusG:
        if (pos) return r.g >= 1 ? static_cast<u64>(r.z) : 0;
        return choose2(r.z);
    case TransitionKind::BV:
    case TransitionKind::PV:
        if (pos) {
            if (r.z == 0) return 0;
            const u128 parts = static_cast<u128>(r.g + 1) * pow2_checked(r.k - 1);
            return checked_u64(static_cast<u128>(r.z) * parts);
        }
        if (kind == TransitionKind::PV)
            return state.surfaces.size() - idx - 1;
        else {
            if (r.z == 0) return 0;
            u128 total = 0;
            for (std::size_t j = idx + 1; j < state.surfaces.size(); ++j)
                total += static_cast<u128>(r.z) *
                         roles_of(state.surfaces[j]).z;
            return checked_u64(total);
        }
    case TransitionKind::PG:
        if (pos) return r.g >= 1 ? static_cast<u64>(r.z) : 0;
        return 1;
    case TransitionKind::A3E:
        if (pos) return 1;
        return r.eq2;
    case TransitionKind::A3H2C:
        if (pos) return choose2(r.z);
        return r.eq2;
    case TransitionKind::A3HC:
        if (pos) return static_cast<u64>(r.z) * r.e2;
        return r.e4;
    }
    throw Error("corrupt transition kind");
}

Site decode_site(const MapState& state, std::size_t idx, TransitionKind kind,
                 StepDirection dir, u64 n) {
    const auto& s = state.surfaces[idx];
    const Roles r = roles_of(s);
    const bool pos = dir == StepDirection::positive;
    Site site;
    site.surface = s.id;

    switch (kind) {
    case TransitionKind::L:
        return site; // negative direction; the surface is the whole site
    case TransitionKind::BMinusG:
        if (pos) {
            const auto [a, b] = unrank_pair(n, r.z);
            site.circuit = a;
            site.circuit2 = b;
        } else {
            site.circuit = static_cast<int>(n);
        }
        return site;
    case TransitionKind::BZeroG:
    case TransitionKind::A3H0: {
        const u64 pairs = choose2(r.e2);
        if (n < pairs) {
            const auto [a, b] = unrank_pair(n, r.e2);
            site.circuit = r.z + a;
            site.circuit2 = r.z + b;
            return site;
        }
        n -= pairs;
        for (int i = 0; i < r.k; ++i) {
            const u64 opts =
                even_splits(reconnect_total(kind, pos, sw_at(s, i)));
            if (n < opts) {
                site.circuit = i;
                site.s1 = 2 * (static_cast<int>(n) + 1);
                return site;
            }
            n -= opts;
        }
        throw DomainError("site index out of range");
    }
    case TransitionKind::BPlusG:
        if (pos) {
            site.circuit = static_cast<int>(n);
        } else {
            const auto [a, b] = unrank_pair(n, r.z);
            site.circuit = a;
            site.circuit2 = b;
        }
        return site;
    case TransitionKind::BV:
    case TransitionKind::PV:
        if (pos) {
            const u64 parts = static_cast<u64>(r.g + 1) * pow2_checked(r.k - 1);
            site.circuit = static_cast<int>(n / parts);
            const u64 rest = n % parts;
            const u64 mask_space = pow2_checked(r.k - 1);
            const int g2 = static_cast<int>(rest / mask_space);
            const u64 moved_mask = rest % mask_space;
            site.g1 = r.g - g2;
            std::vector<int> keep;
            int bit = 0;
            for (int i = 0; i < r.k; ++i) {
                if (i == *site.circuit) continue;
                if (!(moved_mask >> bit & 1)) keep.push_back(i);
                ++bit;
            }
            site.keep = std::move(keep);
            return site;
        }
        if (kind == TransitionKind::PV) {
            site.surface2 = state.surfaces[idx + 1 + n].id;
            return site;
        }
        for (std::size_t j = idx + 1; j < state.surfaces.size(); ++j) {
            const int zj = roles_of(state.surfaces[j]).z;
            const u64 block = static_cast<u64>(r.z) * zj;
            if (n < block) {
                site.surface2 = state.surfaces[j].id;
                site.circuit = static_cast<int>(n / zj);
                site.circuit2 = static_cast<int>(n % zj);
                return site;
            }
            n -= block;
        }
        throw DomainError("site index out of range");
    case TransitionKind::PG:
        if (pos) site.circuit = static_cast<int>(n);
        return site;
    case TransitionKind::A3E:
        if (!pos) site.circuit = r.z + static_cast<int>(n);
        return site;
    case TransitionKind::A3H2C:
        if (pos) {
            const auto [a, b] = unrank_pair(n, r.z);
            site.circuit = a;
            site.circuit2 = b;
        } else {
            site.circuit = r.z + static_cast<int>(n);
        }
        return site;
    case TransitionKind::A3HC:
        if (pos) {
            site.circuit = static_cast<int>(n / r.e2);
            site.circuit2 = r.z + static_cast<int>(n % r.e2);
        } else {
            site.circuit = r.k - r.e4 + static_cast<int>(n);
        }
        return site;
    }
    throw Error("corrupt transition kind");
}

} // namespace

std::uint64_t site_count(const MapState& state, TransitionKind kind,
                         StepDirection direction) {
    if (kind == TransitionKind::L && direction == StepDirection::positive)
        return 1;
    u128 total = 0;
    for (std::size_t i = 0; i < state.surfaces.size(); ++i)
        total += surface_block(state, i, kind, direction);
    return checked_u64(total);
}

Site nth_site(const MapState& state, TransitionKind kind,
              StepDirection direction, std::uint64_t n) {
    if (kind == TransitionKind::L && direction == StepDirection::positive) {
        if (n != 0) throw DomainError("site index out of range");
        return Site{};
    }
    for (std::size_t i = 0; i < state.surfaces.size(); ++i) {
        const u64 block = surface_block(state, i, kind, direction);
        if (n < block) return decode_site(state, i, kind, direction, n);
        n -= block;
    }
    throw DomainError("site index out of range");
}

std::vector<Site> applicable_sites(const MapState& state, TransitionKind kind,
                                   StepDirection direction, std::uint64_t cap) {
    const u64 total = site_count(state, kind, direction);
    if (total > cap)
        throw DomainError("refusing to materialise " + std::to_string(total) +
                          " sites (cap " + std::to_string(cap) + ")");
    std::vector<Site> sites;
    sites.reserve(total);
    for (u64 n = 0; n < total; ++n)
        sites.push_back(nth_site(state, kind, direction, n));
    return sites;
}

std::vector<Site> distinct_effect_sites(const MapState& state,
                                        TransitionKind kind,
                                        StepDirection direction) {
    const bool pos = direction == StepDirection::positive;
    std::vector<Site> out;

    if (kind == TransitionKind::L && pos) {
        out.push_back(Site{});
        return out;
    }

    for (std::size_t idx = 0; idx < state.surfaces.size(); ++idx) {
        const auto& s = state.surfaces[idx];
        const Roles r = roles_of(s);
        auto push = [&](Site site) {
            site.surface = s.id;
            out.push_back(std::move(site));
        };
        // First circuit index per distinct swallowtail count >= floor.
        auto distinct_from = [&](int floor_sw, auto&& fn) {
            int last = -1;
            for (int i = 0; i < r.k; ++i) {
                const int sw = sw_at(s, i);
                if (sw < floor_sw || sw == last) continue;
                last = sw;
                fn(i, sw);
            }
        };

        switch (kind) {
        case TransitionKind::L:
            if (surface_block(state, idx, kind, direction)) push({});
            break;
        case TransitionKind::BMinusG:
            if (pos) {
                if (r.g >= 1 && r.z >= 2)
                    push({.circuit = 0, .circuit2 = 1});
            } else if (r.z >= 1) {
                push({.circuit = 0});
            }
            break;
        case TransitionKind::BZeroG:
        case TransitionKind::A3H0: {
            if (kind == TransitionKind::BZeroG && pos && r.g < 1) break;
            // Merges: one representative per unordered value pair.
            std::set<std::pair<int, int>> seen;
            for (int a = 0; a < r.k; ++a) {
                if (sw_at(s, a) < 2) continue;
                for (int b = a + 1; b < r.k; ++b) {
                    if (sw_at(s, b) < 2) continue;
                    if (seen.insert({sw_at(s, a), sw_at(s, b)}).second)
                        push({.circuit = a, .circuit2 = b});
                }
            }
            // Splits: one representative per distinct (value, s1).
            distinct_from(2, [&](int i, int sw) {
                const int total = reconnect_total(kind, pos, sw);
                for (int s1 = 2; 2 * s1 <= total; s1 += 2)
                    push({.circuit = i, .s1 = s1});
            });
            break;
        }
        case TransitionKind::BPlusG:
            if (pos) {
                if (r.g >= 1 && r.z >= 1) push({.circuit = 0});
            } else if (r.z >= 2) {
                push({.circuit = 0, .circuit2 = 1});
            }
            break;
        case TransitionKind::BV:
        case TransitionKind::PV:
            if (pos) {
                if (r.z == 0) break;
                // One representative per distinct (g1, kept values) split.
                std::set<std::pair<int, std::vector<int>>> seen;
                for (int g2 = 0; g2 <= r.g; ++g2) {
                    const u64 masks = pow2_checked(r.k - 1);
                    for (u64 mask = 0; mask < masks; ++mask) {
                        std::vector<int> keep, kept_values;
                        int bit = 0;
                        for (int i = 0; i < r.k; ++i) {
                            if (i == 0) continue; // circuit 0 is split
                            if (!(mask >> bit & 1)) {
                                keep.push_back(i);
                                kept_values.push_back(sw_at(s, i));
                            }
                            ++bit;
                        }
                        std::sort(kept_values.begin(), kept_values.end());
                        if (!seen.insert({r.g - g2, kept_values}).second)
                            continue;
                        push({.circuit = 0, .g1 = r.g - g2, .keep = keep});
                    }
                }
            } else if (kind == TransitionKind::PV) {
                for (std::size_t j = idx + 1; j < state.surfaces.size(); ++j)
                    push({.surface2 = state.surfaces[j].id});
            } else {
                if (r.z == 0) break;
                for (std::size_t j = idx + 1; j < state.surfaces.size(); ++j)
                    if (roles_of(state.surfaces[j]).z >= 1)
                        push({.surface2 = state.surfaces[j].id,
                              .circuit = 0,
                              .circuit2 = 0});
            }
            break;
        case TransitionKind::PG:
            if (pos) {
                if (r.g >= 1 && r.z >= 1) push({.circuit = 0});
            } else {
                push({});
            }
            break;
        case TransitionKind::A3E:
            if (pos)
                push({});
            else if (r.eq2 >= 1)
                push({.circuit = r.z});
            break;
        case TransitionKind::A3H2C:
            if (pos) {
                if (r.z >= 2) push({.circuit = 0, .circuit2 = 1});
            } else if (r.eq2 >= 1) {
                push({.circuit = r.z});
            }
            break;
        case TransitionKind::A3HC:
            if (pos) {
                if (r.z >= 1)
                    distinct_from(2, [&](int i, int) {
                        push({.circuit = 0, .circuit2 = i});
                    });
            } else {
                distinct_from(4, [&](int i, int) { push({.circuit = i}); });
            }
            break;
        }
    }
    return out;
}

// --- resolve_site ----------------------------------------------------------

namespace {

// First circuit index in [0, k) whose swallowtail count satisfies `pred`,
// or nullopt.
template <typename Pred>
std::optional<int> first_circuit(const SurfaceComponent& s, Pred pred) {
    for (int i = 0; i < static_cast<int>(s.circuits.size()); ++i)
        if (pred(s.circuits[i].swallowtails)) return i;
    return std::nullopt;
}

} // namespace

Site resolve_site(const MapState& state, TransitionKind kind,
                  StepDirection direction, const Site& partial) {
    check_fields(kind, direction, partial);
    const bool pos = direction == StepDirection::positive;
    const std::string what = site_what(kind, direction);

    if (kind == TransitionKind::L && pos) return Site{};

    // Try to complete the partial site on one primary surface; returns the
    // first completion in enumeration order, or nullopt when the surface
    // admits none compatible with the fields already fixed.
    auto complete_on = [&](const SurfaceComponent& s) -> std::optional<Site> {
        const Roles r = roles_of(s);
        Site site = partial;
        site.surface = s.id;
        auto zero_at = [&](int i) {
            return i >= 0 && i < r.k && sw_at(s, i) == 0;
        };
        auto in_range = [&](int i) { return i >= 0 && i < r.k; };

        auto fix_zero = [&](std::optional<int>& slot) {
            if (slot) return zero_at(*slot);
            if (r.z == 0) return false;
            slot = 0;
            return true;
        };
        auto fix_zero_pair = [&]() {
            // circuit < circuit2, both without swallowtails.
            if (site.circuit && site.circuit2)
                return zero_at(*site.circuit) && zero_at(*site.circuit2) &&
                       *site.circuit < *site.circuit2;
            if (site.circuit) {
                if (!zero_at(*site.circuit) || *site.circuit + 1 >= r.z)
                    return false;
                site.circuit2 = *site.circuit + 1;
                return true;
            }
            if (site.circuit2) {
                if (!zero_at(*site.circuit2) || *site.circuit2 == 0)
                    return false;
                site.circuit = 0;
                return true;
            }
            if (r.z < 2) return false;
            site.circuit = 0;
            site.circuit2 = 1;
            return true;
        };

        switch (kind) {
        case TransitionKind::L: // negative
            if (r.g == 0 && r.k == 1 && r.z == 1 && state.surfaces.size() >= 2)
                return site;
            return std::nullopt;
        case TransitionKind::BMinusG:
            if (pos) {
                if (r.g < 1 || !fix_zero_pair()) return std::nullopt;
                return site;
            }
            if (!fix_zero(site.circuit)) return std::nullopt;
            return site;
        case TransitionKind::BZeroG:
        case TransitionKind::A3H0: {
            if (kind == TransitionKind::BZeroG && pos && r.g < 1)
                return std::nullopt;
            if (site.circuit2 && site.s1) return std::nullopt;
            auto arcs_at = [&](int i) {
                return in_range(i) && sw_at(s, i) >= 2;
            };
            auto split_floor = [&](int s1) {
                // Smallest circuit value admitting a split with this s1.
                return 2 * s1 - (kind == TransitionKind::A3H0 ? (pos ? 2 : -2)
                                                              : 0);
            };
            if (site.circuit2) {
                // Merge shape; pick the partner below circuit2 if missing.
                if (!arcs_at(*site.circuit2)) return std::nullopt;
                if (!site.circuit) {
                    if (r.z >= *site.circuit2) return std::nullopt;
                    site.circuit = r.z;
                    return site;
                }
                if (!arcs_at(*site.circuit) || *site.circuit >= *site.circuit2)
                    return std::nullopt;
                return site;
            }
            if (site.s1) {
                // Split shape.
                const int s1 = *site.s1;
                if (s1 < 2 || s1 % 2 != 0) return std::nullopt;
                if (site.circuit) {
                    if (!in_range(*site.circuit) ||
                        sw_at(s, *site.circuit) < split_floor(s1))
                        return std::nullopt;
                    return site;
                }
                if (const auto i = first_circuit(
                        s, [&](int sw) { return sw >= split_floor(s1); })) {
                    site.circuit = *i;
                    return site;
                }
                return std::nullopt;
            }
            if (site.circuit) {
                // Merge with the next circuit carrying arcs if one exists,
                // otherwise the smallest split of this circuit.
                if (!arcs_at(*site.circuit)) return std::nullopt;
                if (r.e2 >= 2) {
                    const int partner = *site.circuit == r.z ? r.z + 1 : r.z;
                    site.circuit2 = std::max(*site.circuit, partner);
                    site.circuit = std::min(*site.circuit, partner);
                    return site;
                }
                if (sw_at(s, *site.circuit) >= split_floor(2)) {
                    site.s1 = 2;
                    return site;
                }
                return std::nullopt;
            }
            if (r.e2 >= 2) {
                site.circuit = r.z;
                site.circuit2 = r.z + 1;
                return site;
            }
            if (const auto i = first_circuit(
                    s, [&](int sw) { return sw >= split_floor(2); })) {
                site.circuit = *i;
                site.s1 = 2;
                return site;
            }
            return std::nullopt;
        }
        case TransitionKind::BPlusG:
            if (pos) {
                if (r.g < 1 || !fix_zero(site.circuit)) return std::nullopt;
                return site;
            }
            if (!fix_zero_pair()) return std::nullopt;
            return site;
        case TransitionKind::BV:
        case TransitionKind::PV:
            if (pos) {
                if (!fix_zero(site.circuit)) return std::nullopt;
                if (site.g1) {
                    if (*site.g1 < 0 || *site.g1 > r.g) return std::nullopt;
                } else {
                    site.g1 = r.g;
                }
                if (site.keep) {
                    const auto& keep = *site.keep;
                    for (std::size_t i = 0; i < keep.size(); ++i) {
                        if (!in_range(keep[i]) || keep[i] == *site.circuit)
                            return std::nullopt;
                        if (i > 0 && keep[i - 1] >= keep[i]) return std::nullopt;
                    }
                } else {
                    std::vector<int> keep;
                    for (int i = 0; i < r.k; ++i)
                        if (i != *site.circuit) keep.push_back(i);
                    site.keep = std::move(keep);
                }
                return site;
            }
            // Merge: needs a partner strictly after this surface.
            for (std::size_t j = 0; j < state.surfaces.size(); ++j) {
                const auto& s2 = state.surfaces[j];
                if (s2.id <= s.id) continue;
                if (site.surface2 && *site.surface2 != s2.id) continue;
                Site cand = site;
                cand.surface2 = s2.id;
                if (kind == TransitionKind::BV) {
                    const Roles r2 = roles_of(s2);
                    if (cand.circuit) {
                        if (!zero_at(*cand.circuit)) return std::nullopt;
                    } else {
                        if (r.z == 0) return std::nullopt;
                        cand.circuit = 0;
                    }
                    if (cand.circuit2) {
                        if (*cand.circuit2 < 0 || *cand.circuit2 >= r2.k ||
                            s2.circuits[*cand.circuit2].swallowtails != 0)
                            continue;
                    } else {
                        if (r2.z == 0) continue;
                        cand.circuit2 = 0;
                    }
                }
                return cand;
            }
            return std::nullopt;
        case TransitionKind::PG:
            if (pos) {
                if (r.g < 1 || !fix_zero(site.circuit)) return std::nullopt;
                return site;
            }
            return site;
        case TransitionKind::A3E:
            if (pos) return site;
            if (site.circuit) {
                if (!in_range(*site.circuit) || sw_at(s, *site.circuit) != 2)
                    return std::nullopt;
                return site;
            }
            if (const auto i = first_circuit(s, [](int sw) { return sw == 2; })) {
                site.circuit = *i;
                return site;
            }
            return std::nullopt;
        case TransitionKind::A3H2C:
            if (pos) {
                if (!fix_zero_pair()) return std::nullopt;
                return site;
            }
            if (site.circuit) {
                if (!in_range(*site.circuit) || sw_at(s, *site.circuit) != 2)
                    return std::nullopt;
                return site;
            }
            if (const auto i = first_circuit(s, [](int sw) { return sw == 2; })) {
                site.circuit = *i;
                return site;
            }
            return std::nullopt;
        case TransitionKind::A3HC:
            if (pos) {
                if (!fix_zero(site.circuit)) return std::nullopt;
                if (site.circuit2) {
                    if (!in_range(*site.circuit2) ||
                        sw_at(s, *site.circuit2) < 2)
                        return std::nullopt;
                    return site;
                }
                if (const auto i =
                        first_circuit(s, [](int sw) { return sw >= 2; })) {
                    site.circuit2 = *i;
                    return site;
                }
                return std::nullopt;
            }
            if (site.circuit) {
                if (!in_range(*site.circuit) || sw_at(s, *site.circuit) < 4)
                    return std::nullopt;
                return site;
            }
            if (const auto i = first_circuit(s, [](int sw) { return sw >= 4; })) {
                site.circuit = *i;
                return site;
            }
            return std::nullopt;
        }
        return std::nullopt;
    };

    if (partial.surface) {
        const SurfaceComponent* s = state.find(*partial.surface);
        if (!s)
            throw ReferenceError("no surface with id " +
                                 std::to_string(*partial.surface));
        if (auto site = complete_on(*s)) return *site;
        throw GuardError(what + " does not apply to surface " +
                         std::to_string(*partial.surface) +
                         " with the given site fields");
    }
    for (const auto& s : state.surfaces)
        if (auto site = complete_on(s)) return *site;
    throw GuardError(what + " has no applicable site in this state");
}

// --- replay ----------------------------------------------------------------

PathTrace run_plan(const MapState& initial, const StepList& steps) {
    PathTrace trace;
    trace.final_state = initial;
    trace.tuple_history.push_back(invariants(initial));
    for (const auto& step : steps) {
        const Site site =
            resolve_site(trace.final_state, step.kind, step.direction, step.site);
        trace.final_state = apply(trace.final_state, step.kind, step.direction, site);
        trace.tuple_history.push_back(invariants(trace.final_state));
        trace.counts.slot(step.kind) +=
            step.direction == StepDirection::positive ? 1 : -1;
        trace.resolved_steps.push_back({step.kind, step.direction, site});
    }
    return trace;
}

// --- spellings and plan format ----------------------------------------------

std::string to_string(TransitionKind kind) {
    switch (kind) {
    case TransitionKind::L: return "L";
    case TransitionKind::BMinusG: return "B-g";
    case TransitionKind::BZeroG: return "B0g";
    case TransitionKind::BPlusG: return "B+g";
    case TransitionKind::BV: return "Bv";
    case TransitionKind::PG: return "Pg";
    case TransitionKind::PV: return "Pv";
    case TransitionKind::A3E: return "A3e";
    case TransitionKind::A3H2C: return "A3h2c";
    case TransitionKind::A3HC: return "A3hc";
    case TransitionKind::A3H0: return "A3h0";
    }
    throw Error("corrupt transition kind");
}

std::string to_string(StepDirection direction) {
    return direction == StepDirection::positive ? "+" : "-";
}

TransitionKind parse_kind(const std::string& text) {
    for (const auto kind : all_kinds)
        if (to_string(kind) == text) return kind;
    throw ParseError("unknown transition kind '" + text + "'");
}

StepDirection parse_direction(const std::string& text) {
    if (text == "+") return StepDirection::positive;
    if (text == "-") return StepDirection::negative;
    throw ParseError("unknown direction '" + text + "'; expected + or -");
}

namespace {

long long parse_plan_int(const std::string& text, const std::string& what) {
    if (text.empty())
        throw ParseError("expected an integer for " + what);
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer for " + what + ", got '" + text +
                         "'");
    }
    if (pos != text.size())
        throw ParseError("expected an integer for " + what + ", got '" + text +
                         "'");
    return value;
}

} // namespace

StepList parse_plan(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty input; expected header 'plan v1'");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "plan v1")
        throw ParseError("bad header '" + line + "'; expected 'plan v1'");

    StepList steps;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);

        std::istringstream tokens(line);
        std::string kind_text;
        if (!(tokens >> kind_text)) continue;

        PlanStep step;
        step.kind = parse_kind(kind_text);
        std::string dir_text;
        if (!(tokens >> dir_text))
            throw ParseError("step '" + kind_text + "' is missing a direction");
        step.direction = parse_direction(dir_text);

        const unsigned allowed = allowed_fields(step.kind, step.direction);
        std::unordered_set<std::string> seen;
        std::string field;
        while (tokens >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected key=value, got '" + field + "'");
            const std::string key = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            if (!seen.insert(key).second)
                throw ParseError("duplicate field '" + key + "'");

            unsigned bit = 0;
            if (key == "surface") bit = f_surface;
            else if (key == "surface2") bit = f_surface2;
            else if (key == "circuit") bit = f_circuit;
            else if (key == "circuit2") bit = f_circuit2;
            else if (key == "g1") bit = f_g1;
            else if (key == "keep") bit = f_keep;
            else if (key == "s1") bit = f_s1;
            else throw ParseError("unknown site field '" + key + "'");
            if (!(allowed & bit))
                throw ParseError("field '" + key + "' does not apply to " +
                                 site_what(step.kind, step.direction));

            switch (bit) {
            case f_surface:
                step.site.surface = static_cast<SurfaceId>(
                    parse_plan_int(value, "surface"));
                break;
            case f_surface2:
                step.site.surface2 = static_cast<SurfaceId>(
                    parse_plan_int(value, "surface2"));
                break;
            case f_circuit:
                step.site.circuit =
                    static_cast<int>(parse_plan_int(value, "circuit"));
                break;
            case f_circuit2:
                step.site.circuit2 =
                    static_cast<int>(parse_plan_int(value, "circuit2"));
                break;
            case f_g1:
                step.site.g1 = static_cast<int>(parse_plan_int(value, "g1"));
                break;
            case f_s1:
                step.site.s1 = static_cast<int>(parse_plan_int(value, "s1"));
                break;
            case f_keep: {
                std::vector<int> keep;
                if (!value.empty()) {
                    std::string item;
                    std::istringstream items(value);
                    while (std::getline(items, item, ','))
                        keep.push_back(
                            static_cast<int>(parse_plan_int(item, "keep")));
                }
                step.site.keep = std::move(keep);
                break;
            }
            }
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

StepList parse_plan_text(const std::string& text) {
    std::istringstream in(text);
    return parse_plan(in);
}

StepList load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open plan file '" + path + "'");
    return parse_plan(in);
}

void write_plan_step(std::ostream& out, const PlanStep& step) {
    out << to_string(step.kind) << " " << to_string(step.direction);
    const auto& s = step.site;
    if (s.surface) out << " surface=" << *s.surface;
    if (s.surface2) out << " surface2=" << *s.surface2;
    if (s.circuit) out << " circuit=" << *s.circuit;
    if (s.circuit2) out << " circuit2=" << *s.circuit2;
    if (s.g1) out << " g1=" << *s.g1;
    if (s.keep) {
        out << " keep=";
        for (std::size_t i = 0; i < s.keep->size(); ++i)
            out << (i ? "," : "") << (*s.keep)[i];
    }
    if (s.s1) out << " s1=" << *s.s1;
    out << "\n";
}

void write_plan(std::ostream& out, const StepList& steps) {
    out << "plan v1\n";
    for (const auto& step : steps) write_plan_step(out, step);
}

std::string plan_text(const StepList& steps) {
    std::ostringstream out;
    write_plan(out, steps);
    return out.str();
}

void save_plan(const std::string& path, const StepList& steps) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write plan file '" + path + "'");
    write_plan(out, steps);
}

} // namespace stablemaps
