#ifndef FINSTOCH_SERIALIZE_HPP
#define FINSTOCH_SERIALIZE_HPP

#include "finstoch/disintegration.hpp"
#include "finstoch/dynamics.hpp"
#include "finstoch/kernel.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace finstoch {

using Json = nlohmann::json;

// File formats. Rationals travel as "num/den" strings (integers may be given
// as JSON numbers or bare-integer strings); spaces as
//   {"carrier": ["a", ...], "atoms": [[0,1], ...]}
// kernels as
//   {"dom": <space>, "cod": <space>, "rows": [["1/2", ...], ...]}
// systems as
//   {"space": <space>, "generators": {"t": <kernel> | {"map": {"a": "b", ...}}}}
// Keys are emitted sorted and rationals in lowest terms, so parsing and
// re-serializing a canonically formatted file is byte-identical.

/// Canonical rendering used for all emitted JSON.
inline std::string canonical_dump(const Json& j) {
    return j.dump(2) + "\n";
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
    try {
        if (j.is_number_unsigned())
            return Rational(j.get<std::uint64_t>());
        if (j.is_number_integer()) {
            const auto v = j.get<std::int64_t>();
            if (v < 0)
                throw std::invalid_argument("negative value");
            return Rational(v);
        }
        if (j.is_string())
            return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a rational as \"num/den\" string or integer");
}

inline Json space_to_json(const FinSpace& x) {
    Json j;
    j["carrier"] = x.carrier();
    j["atoms"] = x.atoms();
    return j;
}

inline FinSpace space_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("carrier") || !j.contains("atoms"))
        throw ParseError(where + ": expected an object with \"carrier\" and \"atoms\"");
    std::vector<std::string> carrier;
    for (std::size_t i = 0; i < j["carrier"].size(); ++i) {
        const auto& c = j["carrier"][i];
        if (!c.is_string())
            throw ParseError(where + ".carrier[" + std::to_string(i) + "]: expected a string label");
        carrier.push_back(c.get<std::string>());
    }
    std::vector<std::vector<int>> atoms;
    for (std::size_t a = 0; a < j["atoms"].size(); ++a) {
        std::vector<int> atom;
        for (std::size_t i = 0; i < j["atoms"][a].size(); ++i) {
            const auto& e = j["atoms"][a][i];
            if (!e.is_number_integer())
                throw ParseError(where + ".atoms[" + std::to_string(a) + "][" + std::to_string(i) +
                                 "]: expected a point index");
            atom.push_back(e.get<int>());
        }
        atoms.push_back(std::move(atom));
    }
    try {
        return FinSpace(std::move(carrier), std::move(atoms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline Json kernel_to_json(const Kernel& k) {
    Json j;
    j["dom"] = space_to_json(k.dom());
    j["cod"] = space_to_json(k.cod());
    Json rows = Json::array();
    for (int r = 0; r < k.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < k.cols(); ++c)
            row.push_back(format_rational(k(r, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline Kernel kernel_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("rows"))
        throw ParseError(where + ": expected an object with \"dom\", \"cod\" and \"rows\"");
    FinSpace dom = space_from_json(j["dom"], where + ".dom");
    FinSpace cod = space_from_json(j["cod"], where + ".cod");
    const auto& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != dom.atom_count())
        throw ParseError(where + ".rows: expected " + std::to_string(dom.atom_count()) +
                         " rows (one per domain atom)");
    std::vector<Rational> entries;
    entries.reserve(rows.size() * static_cast<std::size_t>(cod.atom_count()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cod.atom_count())
            throw ParseError(where + ".rows[" + std::to_string(r) + "]: expected " +
                             std::to_string(cod.atom_count()) + " entries (one per codomain atom)");
        Rational sum = 0;
        for (std::size_t c = 0; c < row.size(); ++c) {
            Rational e = rational_from_json(row[c], where + ".rows[" + std::to_string(r) + "][" +
                                                        std::to_string(c) + "]");
            sum += e;
            entries.push_back(std::move(e));
        }
        if (sum != 1)
            throw ParseError(where + ".rows[" + std::to_string(r) + "]: row sums to " +
                             format_rational(sum) + ", not 1");
    }
    return Kernel(std::move(dom), std::move(cod), std::move(entries));
}

/// A measure file is either a full kernel object (domain must be one-point)
/// or, as a shorthand, a bare array of rationals over the atoms of `cod`.
inline State state_from_json(const Json& j, const FinSpace& cod, const std::string& where) {
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != cod.atom_count())
            throw ParseError(where + ": expected " + std::to_string(cod.atom_count()) +
                             " entries (one per atom)");
        std::vector<Rational> entries;
        Rational sum = 0;
        for (std::size_t c = 0; c < j.size(); ++c) {
            Rational e = rational_from_json(j[c], where + "[" + std::to_string(c) + "]");
            sum += e;
            entries.push_back(std::move(e));
        }
        if (sum != 1)
            throw ParseError(where + ": entries sum to " + format_rational(sum) + ", not 1");
        return make_state(cod, std::move(entries));
    }
    State p = kernel_from_json(j, where);
    if (!is_state(p))
        throw ParseError(where + ": a measure must have a one-point domain");
    if (p.cod() != cod)
        throw SpaceMismatch(where + ": measure codomain does not match the expected space");
    return p;
}

inline Json system_to_json(const DynSystem& sys) {
    Json j;
    j["space"] = space_to_json(sys.space());
    Json gens = Json::object();
    for (const auto& [name, k] : sys.generators())
        gens[name] = kernel_to_json(k);
    j["generators"] = std::move(gens);
    return j;
}

inline DynSystem system_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("space") || !j.contains("generators"))
        throw ParseError(where + ": expected an object with \"space\" and \"generators\"");
    FinSpace space = space_from_json(j["space"], where + ".space");
    if (!j["generators"].is_object() || j["generators"].empty())
        throw ParseError(where + ".generators: expected a nonempty object of named generators");
    std::vector<std::pair<std::string, Kernel>> gens;
    for (const auto& [name, gj] : j["generators"].items()) {
        const std::string gwhere = where + ".generators." + name;
        if (gj.is_object() && gj.contains("map")) {
            // Point-map shorthand, elaborated through kernel_from_function.
            std::vector<int> point_map(static_cast<std::size_t>(space.point_count()), -1);
            for (const auto& [from, to] : gj["map"].items()) {
                const auto find = [&](const std::string& label) {
                    for (int p = 0; p < space.point_count(); ++p)
                        if (space.label(p) == label)
                            return p;
                    throw ParseError(gwhere + ".map: unknown point label \"" + label + "\"");
                };
                if (!to.is_string())
                    throw ParseError(gwhere + ".map." + from + ": expected a point label");
                point_map[static_cast<std::size_t>(find(from))] = find(to.get<std::string>());
            }
            for (int p = 0; p < space.point_count(); ++p)
                if (point_map[static_cast<std::size_t>(p)] == -1)
                    throw ParseError(gwhere + ".map: no image for point \"" + space.label(p) + "\"");
            try {
                gens.emplace_back(name, kernel_from_function(point_map, space, space));
            } catch (const NotMeasurable& e) {
                throw ParseError(gwhere + ".map: " + e.what());
            }
        } else {
            Kernel k = kernel_from_json(gj, gwhere);
            if (k.dom() != space || k.cod() != space)
                throw ParseError(gwhere + ": generator must be an endo-kernel of the system space");
            gens.emplace_back(name, std::move(k));
        }
    }
    return DynSystem(std::move(space), std::move(gens));
}

inline Json decomposition_to_json(const Decomposition& d) {
    Json j;
    j["q"] = kernel_to_json(d.q());
    j["k"] = kernel_to_json(d.k());
    j["p"] = kernel_to_json(d.p());
    return j;
}

inline Json parse_text(const std::string& text, const std::string& where) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(where + ": malformed JSON");
    return j;
}

inline Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path);
}

} // namespace finstoch

#endif // FINSTOCH_SERIALIZE_HPP
