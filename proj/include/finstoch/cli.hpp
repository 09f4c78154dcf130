#ifndef FINSTOCH_CLI_HPP
#define FINSTOCH_CLI_HPP

#include "finstoch/disintegration.hpp"
#include "finstoch/dot.hpp"
#include "finstoch/dynamics.hpp"
#include "finstoch/laws.hpp"
#include "finstoch/random.hpp"
#include "finstoch/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace finstoch {

enum class Command { InvSigma, Quotient, CheckErgodic, Decompose, EnumerateErgodic, CheckAxioms, Invert };
enum class Format { Json, Text, Dot };

inline const char* command_name(Command c) {
    switch (c) {
    case Command::InvSigma: return "inv-sigma";
    case Command::Quotient: return "quotient";
    case Command::CheckErgodic: return "check-ergodic";
    case Command::Decompose: return "decompose";
    case Command::EnumerateErgodic: return "enumerate-ergodic";
    case Command::CheckAxioms: return "check-axioms";
    case Command::Invert: return "invert";
    }
    return "?";
}

/// One analysis invocation: what to run, on which files, where to put it.
struct AnalysisRequest {
    Command command = Command::InvSigma;
    std::string system_path;            ///< system JSON; for `invert`, a kernel JSON
    std::string measure_path;           ///< state JSON; required by check-ergodic/decompose/invert
    std::string output_path;            ///< empty = stdout
    Format format = Format::Json;
    std::uint64_t seed = 0;             ///< check-axioms random instance seed
};

/// The result of one analysis: named boolean verdicts, any produced objects,
/// and human-readable notes. Every false verdict is accompanied by a
/// diagnostic carrying a concrete witness.
struct AnalysisReport {
    std::string command;
    std::vector<std::pair<std::string, bool>> verdicts;
    Json artifacts = Json::object();
    std::vector<std::string> diagnostics;
    std::optional<std::string> dot_graph; ///< filled by inv-sigma and quotient

    bool all_true() const {
        for (const auto& [name, ok] : verdicts)
            if (!ok)
                return false;
        return true;
    }

    Json to_json() const {
        Json j;
        j["command"] = command;
        Json v = Json::object();
        for (const auto& [name, ok] : verdicts)
            v[name] = ok;
        j["verdicts"] = std::move(v);
        j["artifacts"] = artifacts;
        j["diagnostics"] = diagnostics;
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "command: " << command << "\n";
        for (const auto& [name, ok] : verdicts)
            out << "verdict " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
        for (const auto& d : diagnostics)
            out << "note: " << d << "\n";
        for (const auto& [key, value] : artifacts.items())
            out << "artifact " << key << ": " << value.dump() << "\n";
        return out.str();
    }
};

namespace detail {

inline std::string point_set_label(const FinSpace& space, const std::vector<int>& points) {
    std::string out = "{";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i)
            out += ",";
        out += space.label(points[i]);
    }
    return out + "}";
}

/// All invariant sets of a system with at most `max_atoms` atoms, as atom
/// index sets, found by brute force over every union of atoms.
inline std::optional<std::vector<std::vector<int>>> brute_force_invariant_sets(const DynSystem& sys,
                                                                               int max_atoms) {
    const int n = sys.space().atom_count();
    if (n > max_atoms)
        return std::nullopt;
    std::vector<std::vector<int>> found;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> points;
        std::vector<int> atom_set;
        for (int a = 0; a < n; ++a)
            if (mask & (1u << a)) {
                atom_set.push_back(a);
                for (int p : sys.space().atom(a))
                    points.push_back(p);
            }
        if (is_invariant_set(points, sys))
            found.push_back(std::move(atom_set));
    }
    return found;
}

} // namespace detail

/// The axiom/property suite behind `check-axioms`: evaluates the structural
/// laws on seeded random instances and on the loaded objects, one verdict per
/// law. Failures carry the instance index that broke the law.
inline AnalysisReport run_axiom_suite(const DynSystem& sys, const std::optional<State>& measure,
                                      std::uint64_t seed) {
    AnalysisReport rep;
    rep.command = command_name(Command::CheckAxioms);
    constexpr int kInstances = 40;
    Rng rng(seed);

    const auto verdict = [&](const std::string& name, bool ok, const std::string& witness) {
        rep.verdicts.emplace_back(name, ok);
        if (!ok)
            rep.diagnostics.push_back(name + " failed: " + witness);
    };

    const FinSpace& space = sys.space();
    const InvariantSigma inv = invariant_sigma(sys);
    const FinSpace space_q = indistinguishability_quotient(space).quotient; // discrete stand-in

    { // comonoid laws on random discrete spaces plus the system's atom space
        int bad_co = -1, bad_cu = -1, bad_cc = -1;
        for (int i = 0; i < kInstances && (bad_co < 0 || bad_cu < 0 || bad_cc < 0); ++i) {
            const FinSpace x = i == 0 ? space_q : random_space(rng, 5, false);
            if (bad_co < 0 && !law_coassociativity(x)) bad_co = i;
            if (bad_cu < 0 && !law_counitality(x)) bad_cu = i;
            if (bad_cc < 0 && !law_cocommutativity(x)) bad_cc = i;
        }
        verdict("comonoid_coassociativity", bad_co < 0, "instance " + std::to_string(bad_co));
        verdict("comonoid_counitality", bad_cu < 0, "instance " + std::to_string(bad_cu));
        verdict("comonoid_cocommutativity", bad_cc < 0, "instance " + std::to_string(bad_cc));
    }

    { // copy respects tensor
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i)
            if (!law_copy_tensor_compat(random_space(rng, 3, false), random_space(rng, 3, false)))
                bad = i;
        verdict("copy_tensor_compatibility", bad < 0, "instance " + std::to_string(bad));
    }

    { // terminality, on the generators and on random kernels
        std::string witness;
        bool ok = true;
        for (const auto& [name, m] : sys.generators())
            if (!law_terminality(m)) {
                ok = false;
                witness = "generator " + name;
                break;
            }
        for (int i = 0; ok && i < kInstances; ++i) {
            const FinSpace a = random_space(rng, 4, true), b = random_space(rng, 4, true);
            if (!law_terminality(random_kernel(rng, a, b))) {
                ok = false;
                witness = "instance " + std::to_string(i);
            }
        }
        verdict("terminality", ok, witness);
    }

    { // tensor is a functor
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            const FinSpace x1 = random_space(rng, 3, true), x2 = random_space(rng, 3, true),
                           x3 = random_space(rng, 3, true);
            const FinSpace y1 = random_space(rng, 3, true), y2 = random_space(rng, 3, true),
                           y3 = random_space(rng, 3, true);
            if (!law_tensor_functoriality(random_kernel(rng, x2, x3), random_kernel(rng, x1, x2),
                                          random_kernel(rng, y2, y3), random_kernel(rng, y1, y2)))
                bad = i;
        }
        verdict("tensor_functoriality", bad < 0, "instance " + std::to_string(bad));
    }

    { // zero-one entries vs the copy diagram
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            const FinSpace a = random_space(rng, 4, false), b = random_space(rng, 4, false);
            const Kernel f = rng.coin() ? random_kernel(rng, a, b) : random_zero_one_kernel(rng, a, b);
            if (!law_determinism_equivalence(f))
                bad = i;
        }
        verdict("determinism_equivalence", bad < 0, "instance " + std::to_string(bad));
    }

    { // deterministic kernels are closed under compose and tensor
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            const FinSpace a = random_space(rng, 4, true), b = random_space(rng, 4, true),
                           c = random_space(rng, 4, true);
            const Kernel f = random_zero_one_kernel(rng, a, b), g = random_zero_one_kernel(rng, b, c);
            if (!is_deterministic(compose(g, f)) || !is_deterministic(tensor(f, g)))
                bad = i;
        }
        verdict("determinism_closure", bad < 0, "instance " + std::to_string(bad));
    }

    { // rows still sum to one after composites of operations
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            const FinSpace a = random_space(rng, 3, true), b = random_space(rng, 3, true);
            const Kernel k = tensor(random_kernel(rng, a, b), random_kernel(rng, b, a));
            const Kernel h = compose(k, tensor(random_kernel(rng, b, a), random_kernel(rng, a, b)));
            for (int r = 0; r < h.rows() && bad < 0; ++r) {
                Rational sum = 0;
                for (int c = 0; c < h.cols(); ++c)
                    sum += h(r, c);
                if (sum != 1)
                    bad = i;
            }
        }
        verdict("stochastic_closure", bad < 0, "instance " + std::to_string(bad));
    }

    { // disintegration laws
        int bad_id = -1, bad_marg = -1, bad_unique = -1, bad_section = -1;
        for (int i = 0; i < kInstances; ++i) {
            const FinSpace a = random_space(rng, 4, true), b = random_space(rng, 4, true);
            const bool det = rng.coin();
            const Kernel f = i == 0 && !sys.generators().empty()
                                 ? sys.generators()[0].second
                                 : (det ? random_zero_one_kernel(rng, a, b) : random_kernel(rng, a, b));
            const State p = i == 0 && measure ? *measure : random_state(rng, f.dom());
            const Kernel c = bayes_invert(f, p);
            const State q = compose(f, p);
            if (bad_id < 0 && !verify_disintegration(f, p, c))
                bad_id = i;
            if (bad_marg < 0 && compose(c, q) != p)
                bad_marg = i;
            // A second valid disintegration differing on q-null rows only.
            std::vector<Rational> e2(c.entries());
            for (int y = 0; y < c.rows(); ++y)
                if (q(0, y).is_zero()) {
                    const auto row = random_probability_row(rng, c.cols());
                    for (int x = 0; x < c.cols(); ++x)
                        e2[static_cast<std::size_t>(y) * static_cast<std::size_t>(c.cols()) +
                           static_cast<std::size_t>(x)] = row[static_cast<std::size_t>(x)];
                }
            const Kernel c2(c.dom(), c.cod(), std::move(e2));
            if (bad_unique < 0 && (!verify_disintegration(f, p, c2) || !as_equal(q, c, c2)))
                bad_unique = i;
            if (bad_section < 0 && f.zero_one() && !inversion_section_check(f, p))
                bad_section = i;
        }
        verdict("disintegration_identity", bad_id < 0, "instance " + std::to_string(bad_id));
        verdict("disintegration_marginal", bad_marg < 0, "instance " + std::to_string(bad_marg));
        verdict("disintegration_as_uniqueness", bad_unique < 0, "instance " + std::to_string(bad_unique));
        verdict("inversion_section", bad_section < 0, "instance " + std::to_string(bad_section));
    }

    { // positivity instances, engineered so the non-vacuous branch is hit
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            const FinSpace a = random_space(rng, 4, true), b = random_space(rng, 4, true);
            const bool engineered = rng.coin();
            const Kernel f = engineered ? random_zero_one_kernel(rng, a, b) : random_kernel(rng, a, b);
            const State p = engineered ? random_zero_one_state(rng, a) : random_state(rng, a);
            if (!positivity_instance(f, p))
                bad = i;
        }
        verdict("positivity", bad < 0, "instance " + std::to_string(bad));
    }

    { // indecomposable exactly when deterministic
        std::string witness;
        bool ok = true;
        for (int i = 0; i < kInstances && ok; ++i) {
            const FinSpace x = i == 0 ? space : random_space(rng, 5, true);
            const int kind = rng.below(3);
            const State p = kind == 0 ? random_state(rng, x) : random_zero_one_state(rng, x);
            const auto d = find_nontrivial_decomposition(p);
            if (d.has_value() == is_deterministic(p)) {
                ok = false;
                witness = "witness parity broken at instance " + std::to_string(i);
            } else if (d && (compose(d->k(), d->q()) != p || is_trivial_decomposition(*d))) {
                ok = false;
                witness = "returned witness invalid at instance " + std::to_string(i);
            }
        }
        verdict("indecomposable_iff_deterministic", ok, witness);
    }

    { // almost-sure equality: equivalence relation + postcomposition congruence
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            const FinSpace x = random_space(rng, 4, true), y = random_space(rng, 4, true);
            const State p = random_state(rng, x);
            const Kernel f = random_kernel(rng, x, y);
            // g agrees with f on the support of p, h is arbitrary.
            std::vector<Rational> ge(f.entries());
            for (int r = 0; r < f.rows(); ++r)
                if (p(0, r).is_zero()) {
                    const auto row = random_probability_row(rng, f.cols());
                    for (int c = 0; c < f.cols(); ++c)
                        ge[static_cast<std::size_t>(r) * static_cast<std::size_t>(f.cols()) +
                           static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c)];
                }
            const Kernel g(f.dom(), f.cod(), std::move(ge));
            const Kernel h = random_kernel(rng, x, y);
            const bool refl = as_equal(p, f, f);
            const bool sym = as_equal(p, f, g) == as_equal(p, g, f);
            const bool trans = !(as_equal(p, f, g) && as_equal(p, g, h)) || as_equal(p, f, h);
            const bool congr = !as_equal(p, f, g) || compose(f, p) == compose(g, p);
            if (!(refl && sym && trans && congr && as_equal(p, f, g)))
                bad = i;
        }
        verdict("as_equal_congruence", bad < 0, "instance " + std::to_string(bad));
    }

    { // the universal cocone is a deterministic invariant observable
        verdict("cocone_deterministic", is_deterministic(inv.cocone), "cocone has a fractional entry");
        verdict("cocone_right_invariant", is_right_invariant(inv.cocone, sys),
                "some generator does not fix the cocone");
    }

    { // invariance is generated: composites of generators fix every cocone
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            Kernel word = identity(space);
            const int len = 1 + rng.below(4);
            for (int s = 0; s < len; ++s)
                word = compose(sys.generators()[static_cast<std::size_t>(
                                                    rng.below(static_cast<int>(sys.generators().size())))]
                                   .second,
                               word);
            if (compose(inv.cocone, word) != inv.cocone)
                bad = i;
        }
        verdict("generator_sufficiency", bad < 0, "instance " + std::to_string(bad));
    }

    if (const auto sets = detail::brute_force_invariant_sets(sys, 12)) {
        // every invariant set is a union of quotient atoms and vice versa
        bool ok = true;
        std::string witness;
        for (const auto& atom_set : *sets) {
            std::vector<int> points;
            for (int a : atom_set)
                for (int p : space.atom(a))
                    points.push_back(p);
            if (!inv.quotient_space.atoms_covering(points)) {
                ok = false;
                witness = "invariant set " + detail::point_set_label(space, points) +
                          " is not a union of quotient atoms";
                break;
            }
        }
        const std::size_t expected = static_cast<std::size_t>(1)
                                     << inv.quotient_space.atom_count();
        if (ok && sets->size() != expected) {
            ok = false;
            witness = "found " + std::to_string(sets->size()) + " invariant sets, expected " +
                      std::to_string(expected);
        }
        verdict("invariant_sets_are_component_unions", ok, witness);
    } else {
        rep.diagnostics.push_back("invariant-set brute force skipped: more than 12 atoms");
    }

    if (sys.deterministic()) {
        { // universal property of the quotient
            int bad = -1;
            for (int i = 0; i < kInstances && bad < 0; ++i) {
                const FinSpace s_cod = random_space(rng, 3, true);
                const Kernel expected = rng.coin()
                                            ? random_kernel(rng, inv.quotient_space, s_cod)
                                            : random_zero_one_kernel(rng, inv.quotient_space, s_cod);
                const Kernel s = compose(expected, inv.cocone);
                const Kernel got = factor_through_quotient(s, sys);
                if (got != expected || compose(got, inv.cocone) != s ||
                    is_deterministic(got) != is_deterministic(s))
                    bad = i;
            }
            verdict("universal_property", bad < 0, "instance " + std::to_string(bad));
        }
        { // orbit space and invariant sigma-algebra are isomorphic
            const OrbitIso orbit = zigzag_quotient(sys);
            const bool ok = orbit.to_orbits.zero_one() && orbit.from_orbits.zero_one() &&
                            compose(orbit.from_orbits, orbit.to_orbits) ==
                                identity(inv.quotient_space) &&
                            compose(orbit.to_orbits, orbit.from_orbits) ==
                                identity(orbit.orbit_space);
            verdict("orbit_quotient_iso", ok, "compositions are not identities");
        }
    } else {
        rep.diagnostics.push_back(
            "universal-property and orbit-quotient laws skipped: system has stochastic generators");
    }

    const bool can_enumerate =
        (sys.generators().size() == 1 && sys.deterministic()) || sys.bijective();
    if (can_enumerate) {
        const auto ergodic = enumerate_ergodic(sys);
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < ergodic.size() && ok; ++i)
            if (!is_ergodic(ergodic[i], sys)) {
                ok = false;
                witness = "enumerated state " + std::to_string(i) + " is not ergodic";
            }
        for (int i = 0; i < 5 && ok; ++i) {
            const State p = random_invariant_mixture(rng, sys);
            const Decomposition d = ergodic_decomposition(p, sys);
            if (compose(d.k(), d.q()) != p || !is_as_ergodic(d.k(), d.q(), sys)) {
                ok = false;
                witness = "decomposition of mixture " + std::to_string(i) + " failed";
            }
        }
        verdict("ergodic_decomposition_theorem", ok, witness);
    } else {
        rep.diagnostics.push_back(
            "ergodic-decomposition law skipped: ergodic states are not enumerable for this system");
    }

    if (const auto sets = detail::brute_force_invariant_sets(sys, 12)) {
        // quotient-route ergodicity agrees with the zero-one criterion
        int bad = -1;
        for (int i = 0; i < kInstances && bad < 0; ++i) {
            State p = random_state(rng, space);
            if (can_enumerate && rng.coin())
                p = random_invariant_mixture(rng, sys);
            else if (measure && i == 0)
                p = *measure;
            bool brute = is_left_invariant(p, sys);
            for (const auto& atom_set : *sets) {
                if (!brute)
                    break;
                Rational m = 0;
                for (int a : atom_set)
                    m += p(0, a);
                if (m != 0 && m != 1)
                    brute = false;
            }
            if (is_ergodic(p, sys) != brute)
                bad = i;
        }
        verdict("ergodicity_zero_one_equivalence", bad < 0, "instance " + std::to_string(bad));
    }

    if (measure) {
        if (!is_left_invariant(*measure, sys))
            rep.diagnostics.push_back(
                "measure is not invariant; decomposition laws were run on synthetic states only");
        else if (sys.deterministic()) {
            const Decomposition d = ergodic_decomposition(*measure, sys);
            verdict("measure_decomposition",
                    compose(d.k(), d.q()) == *measure && is_as_ergodic(d.k(), d.q(), sys),
                    "decomposition of the supplied measure failed");
        }
    }

    rep.artifacts["seed"] = seed;
    rep.artifacts["instances_per_law"] = kInstances;
    return rep;
}

/// Executes one analysis request end to end: loads the referenced files,
/// dispatches on the command, and assembles the report.
inline AnalysisReport run(const AnalysisRequest& req) {
    const bool needs_measure = req.command == Command::CheckErgodic ||
                               req.command == Command::Decompose || req.command == Command::Invert;
    if (req.system_path.empty())
        throw ParseError("a --system file is required");
    if (needs_measure && req.measure_path.empty())
        throw ParseError(std::string("--measure is required for ") + command_name(req.command));

    AnalysisReport rep;
    rep.command = command_name(req.command);

    if (req.command == Command::Invert) {
        const Kernel f = kernel_from_json(parse_file(req.system_path), req.system_path);
        const State p = state_from_json(parse_file(req.measure_path), f.dom(), req.measure_path);
        const Kernel c = bayes_invert(f, p);
        rep.artifacts["inverse"] = kernel_to_json(c);
        rep.artifacts["pushforward"] = kernel_to_json(compose(f, p));
        rep.verdicts.emplace_back("disintegration_valid", verify_disintegration(f, p, c));
        return rep;
    }

    const DynSystem sys = system_from_json(parse_file(req.system_path), req.system_path);

    switch (req.command) {
    case Command::InvSigma:
    case Command::Quotient: {
        const InvariantSigma inv = invariant_sigma(sys);
        Json atoms = Json::array();
        for (int c = 0; c < inv.quotient_space.atom_count(); ++c)
            atoms.push_back(inv.quotient_space.atom_label(c));
        rep.artifacts["atoms"] = std::move(atoms);
        rep.artifacts["cocone"] = kernel_to_json(inv.cocone);
        if (req.command == Command::InvSigma) {
            rep.artifacts["quotient_space"] = space_to_json(inv.quotient_space);
            rep.artifacts["system"] = system_to_json(sys);
        }
        rep.verdicts.emplace_back("cocone_deterministic", is_deterministic(inv.cocone));
        rep.verdicts.emplace_back("cocone_right_invariant", is_right_invariant(inv.cocone, sys));
        rep.diagnostics.push_back(std::to_string(inv.quotient_space.atom_count()) +
                                  " invariant atoms");
        rep.dot_graph = dot_export(inv);
        break;
    }
    case Command::CheckErgodic: {
        const State p = state_from_json(parse_file(req.measure_path), sys.space(), req.measure_path);
        const bool ergodic = is_ergodic(p, sys);
        rep.verdicts.emplace_back("ergodic", ergodic);
        const InvariantSigma inv = invariant_sigma(sys);
        rep.artifacts["quotient_measure"] = kernel_to_json(compose(inv.cocone, p));
        if (!ergodic) {
            if (!is_left_invariant(p, sys)) {
                for (const auto& [name, m] : sys.generators())
                    if (compose(m, p) != p) {
                        rep.diagnostics.push_back("not invariant: generator " + name +
                                                  " moves the measure");
                        break;
                    }
            } else {
                for (int c = 0; c < inv.quotient_space.atom_count(); ++c) {
                    Rational v = 0;
                    for (int a : inv.atom_components[static_cast<std::size_t>(c)])
                        v += p(0, a);
                    if (v != 0 && v != 1) {
                        rep.diagnostics.push_back(
                            "invariant set " + inv.quotient_space.atom_label(c) + " has measure " +
                            format_rational(v));
                        break;
                    }
                }
            }
        }
        break;
    }
    case Command::Decompose: {
        const State p = state_from_json(parse_file(req.measure_path), sys.space(), req.measure_path);
        const Decomposition d = ergodic_decomposition(p, sys);
        rep.artifacts = decomposition_to_json(d);
        rep.verdicts.emplace_back("compose_equals_p", compose(d.k(), d.q()) == p);
        rep.verdicts.emplace_back("as_ergodic", is_as_ergodic(d.k(), d.q(), sys));
        rep.diagnostics.push_back(std::to_string(d.q().cols()) + " ergodic components");
        break;
    }
    case Command::EnumerateErgodic: {
        const auto states = enumerate_ergodic(sys);
        Json list = Json::array();
        bool all_ergodic = true;
        for (const auto& s : states) {
            list.push_back(kernel_to_json(s));
            all_ergodic = all_ergodic && is_ergodic(s, sys);
        }
        rep.artifacts["states"] = std::move(list);
        rep.verdicts.emplace_back("all_ergodic", all_ergodic);
        if (!all_ergodic)
            rep.diagnostics.push_back("an enumerated state failed the ergodicity check");
        break;
    }
    case Command::CheckAxioms: {
        std::optional<State> measure;
        if (!req.measure_path.empty())
            measure = state_from_json(parse_file(req.measure_path), sys.space(), req.measure_path);
        rep = run_axiom_suite(sys, measure, req.seed);
        break;
    }
    case Command::Invert:
        break; // handled above
    }
    return rep;
}

/// Renders a report in the requested format. DOT output only exists for the
/// commands that build the support graph.
inline std::string render(const AnalysisReport& rep, Format format) {
    switch (format) {
    case Format::Json: return canonical_dump(rep.to_json());
    case Format::Text: return rep.to_text();
    case Format::Dot:
        if (!rep.dot_graph)
            throw ParseError("--format dot is only available for inv-sigma and quotient");
        return *rep.dot_graph;
    }
    return {};
}

// Exit codes, also documented in the CLI --help text.
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitSpaceMismatch = 3;
inline constexpr int kExitNotInvariant = 4;
inline constexpr int kExitUnsupportedGenerators = 5;
inline constexpr int kExitNotDeterministicSystem = 6;
inline constexpr int kExitNotMeasurable = 7;
inline constexpr int kExitOtherDomainError = 8;
inline constexpr int kExitInternalError = 9;

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kExitParseError;
    if (dynamic_cast<const SpaceMismatch*>(&e)) return kExitSpaceMismatch;
    if (dynamic_cast<const NotInvariant*>(&e)) return kExitNotInvariant;
    if (dynamic_cast<const UnsupportedGenerators*>(&e)) return kExitUnsupportedGenerators;
    if (dynamic_cast<const NotDeterministicSystem*>(&e)) return kExitNotDeterministicSystem;
    if (dynamic_cast<const NotMeasurable*>(&e)) return kExitNotMeasurable;
    if (dynamic_cast<const Error*>(&e)) return kExitOtherDomainError;
    return kExitInternalError;
}

} // namespace finstoch

#endif // FINSTOCH_CLI_HPP
