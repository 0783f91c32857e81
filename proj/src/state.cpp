#include "stablemaps/state.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "stablemaps/errors.hpp"

namespace stablemaps {

namespace {

long long parse_int_strict(const std::string& text, const std::string& what) {
    long long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ParseError("expected an integer for " + what + ", got '" + text + "'");
    return value;
}

SurfaceId parse_surface_id(const std::string& text, const std::string& what) {
    const long long value = parse_int_strict(text, what);
    if (value < 1 || value > 0xffffffffLL)
        throw ParseError(what + " out of range: " + text);
    return static_cast<SurfaceId>(value);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string direction_name(SurfaceDirection d) {
    switch (d) {
    case SurfaceDirection::unset: return "unset";
    case SurfaceDirection::inward: return "inward";
    case SurfaceDirection::outward: return "outward";
    }
    throw Error("corrupt direction value");
}

SurfaceDirection parse_direction_name(const std::string& text) {
    if (text == "unset") return SurfaceDirection::unset;
    if (text == "inward") return SurfaceDirection::inward;
    if (text == "outward") return SurfaceDirection::outward;
    throw ParseError("unknown direction '" + text + "'");
}

} // namespace

int SurfaceComponent::zero_circuits() const {
    int n = 0;
    for (const auto& c : circuits)
        if (c.swallowtails == 0) ++n;
    return n;
}

int SurfaceComponent::circuits_with_at_least(int s) const {
    int n = 0;
    for (const auto& c : circuits)
        if (c.swallowtails >= s) ++n;
    return n;
}

const SurfaceComponent* MapState::find(SurfaceId id) const {
    for (const auto& s : surfaces)
        if (s.id == id) return &s;
    return nullptr;
}

SurfaceComponent* MapState::find(SurfaceId id) {
    for (auto& s : surfaces)
        if (s.id == id) return &s;
    return nullptr;
}

SurfaceId MapState::fresh_id() const {
    SurfaceId max = 0;
    for (const auto& s : surfaces) max = std::max(max, s.id);
    return max + 1;
}

MapState canonical_projection() {
    SurfaceComponent sphere;
    sphere.id = 1;
    sphere.genus = 0;
    sphere.direction = SurfaceDirection::inward;
    return MapState{{sphere}};
}

std::vector<Violation> validate(const MapState& state) {
    std::vector<Violation> out;
    auto flag = [&](std::string rule, std::optional<SurfaceId> surface,
                    std::optional<int> circuit, std::string message) {
        out.push_back({std::move(rule), surface, circuit, std::move(message)});
    };

    if (state.surfaces.empty())
        flag("non-empty", std::nullopt, std::nullopt,
             "the singular set of a stable map is never empty");

    for (std::size_t i = 0; i < state.surfaces.size(); ++i) {
        const auto& s = state.surfaces[i];
        if (s.id == 0)
            flag("id-positive", s.id, std::nullopt, "surface ids start at 1");
        if (i > 0 && state.surfaces[i - 1].id >= s.id)
            flag("id-order", s.id, std::nullopt,
                 "surface ids must be unique and ascending");
        if (s.genus < 0)
            flag("genus-non-negative", s.id, std::nullopt,
                 "surface " + std::to_string(s.id) + " has negative genus");
        for (std::size_t j = 0; j < s.circuits.size(); ++j) {
            const int sw = s.circuits[j].swallowtails;
            if (sw < 0)
                flag("swallowtails-non-negative", s.id, static_cast<int>(j),
                     "circuit has a negative swallowtail count");
            else if (sw % 2 != 0)
                flag("swallowtails-even", s.id, static_cast<int>(j),
                     "swallowtail points on a circuit come in pairs");
            if (j > 0 && s.circuits[j - 1].swallowtails > sw)
                flag("circuit-order", s.id, static_cast<int>(j),
                     "circuits must be sorted by ascending swallowtail count");
        }
    }

    for (const auto& s : state.surfaces)
        if (s.parent && !state.find(*s.parent))
            flag("parent-exists", s.id, std::nullopt,
                 "surface " + std::to_string(s.id) + " nests in unknown surface " +
                     std::to_string(*s.parent));

    // Parent chains must terminate; walk each chain with a step budget.
    for (const auto& s : state.surfaces) {
        std::unordered_set<SurfaceId> seen{s.id};
        const SurfaceComponent* cur = &s;
        while (cur->parent) {
            const SurfaceComponent* next = state.find(*cur->parent);
            if (!next) break; // already flagged above
            if (!seen.insert(next->id).second) {
                flag("parent-acyclic", s.id, std::nullopt,
                     "nesting parents of surface " + std::to_string(s.id) +
                         " form a cycle");
                break;
            }
            cur = next;
        }
    }

    return out;
}

InvariantTuple invariants(const MapState& state) {
    const auto violations = validate(state);
    if (!violations.empty())
        throw ValidationError("invalid state: " + violations.front().message);

    InvariantTuple t;
    t.ie = static_cast<int>(state.surfaces.size());
    for (const auto& s : state.surfaces) {
        t.ig += s.genus;
        for (const auto& c : s.circuits) {
            if (c.swallowtails == 0)
                ++t.ic;
            else
                t.is += c.swallowtails;
        }
    }
    return t;
}

std::vector<int> canonical_key(const MapState& state) {
    std::vector<std::vector<int>> rows;
    rows.reserve(state.surfaces.size());
    for (const auto& s : state.surfaces) {
        std::vector<int> row;
        row.reserve(s.circuits.size() + 1);
        row.push_back(s.genus);
        for (const auto& c : s.circuits) row.push_back(c.swallowtails);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());

    std::vector<int> key;
    key.push_back(static_cast<int>(rows.size()));
    for (const auto& row : rows) {
        key.push_back(static_cast<int>(row.size()));
        key.insert(key.end(), row.begin(), row.end());
    }
    return key;
}

std::size_t CanonicalKeyHash::operator()(const std::vector<int>& key) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : key) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

MapState parse_state(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty input; expected header 'mapstate v1'");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "mapstate v1")
        throw ParseError("bad header '" + line + "'; expected 'mapstate v1'");

    MapState state;
    SurfaceComponent* current = nullptr;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "surface") {
            if (tokens.size() < 2)
                throw ParseError("surface line needs an id");
            SurfaceComponent s;
            s.id = parse_surface_id(tokens[1], "surface id");
            std::unordered_set<std::string> seen;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                const auto eq = tokens[i].find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected key=value, got '" + tokens[i] + "'");
                const std::string key = tokens[i].substr(0, eq);
                const std::string value = tokens[i].substr(eq + 1);
                if (!seen.insert(key).second)
                    throw ParseError("duplicate key '" + key + "' on surface " +
                                     std::to_string(s.id));
                if (key == "genus") {
                    s.genus = static_cast<int>(parse_int_strict(value, "genus"));
                } else if (key == "direction") {
                    s.direction = parse_direction_name(value);
                } else if (key == "parent") {
                    if (value != "none")
                        s.parent = parse_surface_id(value, "parent");
                } else {
                    throw ParseError("unknown surface key '" + key + "'");
                }
            }
            state.surfaces.push_back(std::move(s));
            current = &state.surfaces.back();
        } else if (tokens[0] == "circuit") {
            if (!current)
                throw ParseError("circuit line before any surface");
            if (tokens.size() != 2)
                throw ParseError("circuit line needs exactly one swallowtail count");
            const long long sw = parse_int_strict(tokens[1], "swallowtail count");
            if (sw < 0 || sw > 1000000)
                throw ParseError("swallowtail count out of range: " + tokens[1]);
            current->circuits.push_back({static_cast<int>(sw)});
        } else {
            throw ParseError("unknown directive '" + tokens[0] + "'");
        }
    }

    for (auto& s : state.surfaces)
        std::sort(s.circuits.begin(), s.circuits.end());
    std::sort(state.surfaces.begin(), state.surfaces.end(),
              [](const SurfaceComponent& a, const SurfaceComponent& b) {
                  return a.id < b.id;
              });

    const auto violations = validate(state);
    if (!violations.empty())
        throw ValidationError("invalid state: " + violations.front().message);
    return state;
}

MapState parse_state_text(const std::string& text) {
    std::istringstream in(text);
    return parse_state(in);
}

MapState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file '" + path + "'");
    return parse_state(in);
}

void write_state(std::ostream& out, const MapState& state) {
    out << "mapstate v1\n";
    for (const auto& s : state.surfaces) {
        out << "surface " << s.id << " genus=" << s.genus
            << " direction=" << direction_name(s.direction) << " parent=";
        if (s.parent)
            out << *s.parent;
        else
            out << "none";
        out << "\n";
        for (const auto& c : s.circuits) out << "circuit " << c.swallowtails << "\n";
    }
}

std::string state_text(const MapState& state) {
    std::ostringstream out;
    write_state(out, state);
    return out.str();
}

void save_state(const std::string& path, const MapState& state) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write state file '" + path + "'");
    write_state(out, state);
}

std::string to_string(const InvariantTuple& t) {
    std::ostringstream out;
    out << "(" << t.ie << "," << t.ic << "," << t.ig << "," << t.is << ")";
    return out.str();
}

InvariantTuple parse_tuple(const std::string& text) {
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);

    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw ParseError("expected four comma-separated invariants, got '" + text +
                         "'");
    InvariantTuple t;
    t.ie = static_cast<int>(parse_int_strict(parts[0], "I_E"));
    t.ic = static_cast<int>(parse_int_strict(parts[1], "I_C"));
    t.ig = static_cast<int>(parse_int_strict(parts[2], "I_G"));
    t.is = static_cast<int>(parse_int_strict(parts[3], "I_S"));
    return t;
}

} // namespace stablemaps
