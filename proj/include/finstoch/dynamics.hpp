#ifndef FINSTOCH_DYNAMICS_HPP
#define FINSTOCH_DYNAMICS_HPP

#include "finstoch/disintegration.hpp"
#include "finstoch/kernel.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace finstoch {

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

} // namespace detail

/// A dynamical system: a finite space acted on by the monoid generated by a
/// named set of endo-kernels. Checks on the monoid action only ever need the
/// generators, so no word machinery is kept.
class DynSystem {
public:
    DynSystem(FinSpace space, std::vector<std::pair<std::string, Kernel>> generators)
        : space_(std::move(space)), generators_(std::move(generators)) {
        deterministic_ = true;
        bijective_ = true;
        for (const auto& [name, g] : generators_) {
            if (g.dom() != space_ || g.cod() != space_)
                throw SpaceMismatch("DynSystem: generator \"" + name +
                                    "\" is not an endo-kernel of the system space");
            if (!g.zero_one()) {
                deterministic_ = false;
                bijective_ = false;
                continue;
            }
            for (int c = 0; c < g.cols() && bijective_; ++c) {
                int ones = 0;
                for (int r = 0; r < g.rows(); ++r)
                    if (g(r, c) == 1)
                        ++ones;
                if (ones != 1)
                    bijective_ = false;
            }
        }
    }

    const FinSpace& space() const { return space_; }
    const std::vector<std::pair<std::string, Kernel>>& generators() const { return generators_; }

    /// True when every generator is a zero-one kernel (an atom-level function).
    bool deterministic() const { return deterministic_; }
    /// True when every generator is a permutation matrix on atoms.
    bool bijective() const { return bijective_; }

private:
    FinSpace space_;
    std::vector<std::pair<std::string, Kernel>> generators_;
    bool deterministic_ = true;
    bool bijective_ = true;
};

/// c: C -> X is left-invariant (a cone) when m o c = c for every generator m.
/// Left-invariant states are the invariant measures of the system.
inline bool is_left_invariant(const Kernel& c, const DynSystem& sys) {
    if (c.cod() != sys.space())
        throw SpaceMismatch("is_left_invariant: kernel must land in the system space");
    for (const auto& [name, m] : sys.generators())
        if (compose(m, c) != c)
            return false;
    return true;
}

/// s: X -> S is right-invariant (a cocone) when s o m = s for every generator
/// m; these are the invariant observables.
inline bool is_right_invariant(const Kernel& s, const DynSystem& sys) {
    if (s.dom() != sys.space())
        throw SpaceMismatch("is_right_invariant: kernel must start at the system space");
    for (const auto& [name, m] : sys.generators())
        if (compose(s, m) != s)
            return false;
    return true;
}

/// A measurable set A is invariant when m(A|x) = 1_A(x) for every generator
/// and every point; for functional generators this is m^{-1}(A) = A. The set
/// is given by carrier indices and must be a union of atoms.
inline bool is_invariant_set(const std::vector<int>& points, const DynSystem& sys) {
    const auto covering = sys.space().atoms_covering(points);
    if (!covering)
        throw NotMeasurable("is_invariant_set: the given point set is not a union of atoms");
    std::vector<bool> inside(static_cast<std::size_t>(sys.space().atom_count()), false);
    for (int a : *covering)
        inside[static_cast<std::size_t>(a)] = true;
    for (const auto& [name, m] : sys.generators())
        for (int c = 0; c < m.rows(); ++c) {
            Rational s = 0;
            for (int b : *covering)
                s += m(c, b);
            if (s != (inside[static_cast<std::size_t>(c)] ? 1 : 0))
                return false;
        }
    return true;
}

/// The system's Markov quotient: the same carrier equipped with the
/// sigma-algebra of invariant sets, together with the universal cocone.
struct InvariantSigma {
    DynSystem system;
    FinSpace quotient_space; ///< same carrier, atoms = minimal invariant sets
    Kernel cocone;           ///< zero-one kernel r(A|x) = 1_A(x), space -> quotient
    std::vector<std::vector<int>> atom_components; ///< atoms of space per quotient atom
};

/// Computes the invariant sigma-algebra. Its atoms are the weakly-connected
/// components of the support graph on atoms, with an edge C -- B whenever
/// some generator moves positive mass from C to B. A union of atoms satisfies
/// the invariance equation exactly when no generator crosses its boundary in
/// either direction, which is component-closure; on functional systems the
/// components are precisely the zig-zag orbit classes.
inline InvariantSigma invariant_sigma(const DynSystem& sys) {
    const int n = sys.space().atom_count();
    detail::UnionFind uf(n);
    for (const auto& [name, m] : sys.generators())
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < n; ++b)
                if (!m(c, b).is_zero())
                    uf.unite(c, b);
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> atom_components;
    for (int a = 0; a < n; ++a) {
        const int root = uf.find(a);
        if (component[static_cast<std::size_t>(root)] == -1) {
            component[static_cast<std::size_t>(root)] = static_cast<int>(atom_components.size());
            atom_components.emplace_back();
        }
        component[static_cast<std::size_t>(a)] = component[static_cast<std::size_t>(root)];
        atom_components[static_cast<std::size_t>(component[static_cast<std::size_t>(a)])].push_back(a);
    }
    const int k = static_cast<int>(atom_components.size());
    std::vector<std::vector<int>> quotient_atoms;
    quotient_atoms.reserve(static_cast<std::size_t>(k));
    for (const auto& comp : atom_components) {
        std::vector<int> pts;
        for (int a : comp)
            for (int p : sys.space().atom(a))
                pts.push_back(p);
        quotient_atoms.push_back(std::move(pts));
    }
    FinSpace quotient(sys.space().carrier(), std::move(quotient_atoms));
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), Rational(0));
    for (int a = 0; a < n; ++a)
        e[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
          static_cast<std::size_t>(component[static_cast<std::size_t>(a)])] = 1;
    Kernel cocone(sys.space(), quotient, std::move(e));
    return InvariantSigma{sys, std::move(quotient), std::move(cocone), std::move(atom_components)};
}

/// Universal property of the quotient: every right-invariant s: X -> S of a
/// deterministic system factors uniquely through the cocone. The returned
/// kernel takes each quotient atom to the common row of s over that
/// component; it is deterministic exactly when s is.
inline Kernel factor_through_quotient(const Kernel& s, const DynSystem& sys) {
    if (!sys.deterministic())
        throw NotDeterministicSystem(
            "factor_through_quotient: the factorization is only guaranteed for deterministic systems");
    if (!is_right_invariant(s, sys))
        throw NotInvariant("factor_through_quotient: kernel is not right-invariant");
    const InvariantSigma inv = invariant_sigma(sys);
    const int cols = s.cols();
    std::vector<Rational> e;
    e.reserve(inv.atom_components.size() * static_cast<std::size_t>(cols));
    for (const auto& comp : inv.atom_components) {
        const int lead = comp[0];
        for (int a : comp)
            for (int c = 0; c < cols; ++c)
                if (s(a, c) != s(lead, c))
                    throw std::logic_error("factor_through_quotient: invariant kernel has rows "
                                           "that disagree on a component");
        for (int c = 0; c < cols; ++c)
            e.push_back(s(lead, c));
    }
    return Kernel(inv.quotient_space, s.cod(), std::move(e));
}

/// An invariant state is ergodic when its pushforward along the universal
/// cocone is deterministic; equivalently, it gives every invariant set
/// measure 0 or 1, i.e. all its mass sits in one quotient atom. Both routes
/// are computed and must agree.
inline bool is_ergodic(const State& p, const DynSystem& sys) {
    if (!is_state(p))
        throw std::invalid_argument("is_ergodic: expected a state");
    if (p.cod() != sys.space())
        throw SpaceMismatch("is_ergodic: state must live on the system space");
    if (!is_left_invariant(p, sys))
        return false;
    const InvariantSigma inv = invariant_sigma(sys);
    const State push = compose(inv.cocone, p);
    const bool quotient_route = is_deterministic(push);
    int full_atoms = 0;
    for (int c = 0; c < push.cols(); ++c)
        if (push(0, c) == 1)
            ++full_atoms;
    if (quotient_route != (full_atoms == 1))
        throw std::logic_error("is_ergodic: quotient and zero-one routes disagree");
    return quotient_route;
}

/// k: Y -> X is q-almost-surely ergodic when it is q-almost-surely invariant
/// and its pushforward along the cocone is q-almost-surely deterministic.
/// Equivalently (and cross-checked): every q-positive row of k is itself an
/// ergodic state.
inline bool is_as_ergodic(const Kernel& k, const State& q, const DynSystem& sys) {
    if (k.cod() != sys.space())
        throw SpaceMismatch("is_as_ergodic: kernel must land in the system space");
    if (!is_state(q) || q.cod() != k.dom())
        throw SpaceMismatch("is_as_ergodic: q must be a state on the domain of k");
    bool as_invariant = true;
    for (const auto& [name, m] : sys.generators())
        if (!as_equal(q, compose(m, k), k)) {
            as_invariant = false;
            break;
        }
    const InvariantSigma inv = invariant_sigma(sys);
    const Kernel push = compose(inv.cocone, k);
    bool as_deterministic = true;
    for (int y = 0; y < k.rows() && as_deterministic; ++y) {
        if (q(0, y).is_zero())
            continue;
        for (int c = 0; c < push.cols(); ++c)
            if (push(y, c) != 0 && push(y, c) != 1) {
                as_deterministic = false;
                break;
            }
    }
    const bool verdict = as_invariant && as_deterministic;
    bool rowwise = true;
    for (int y = 0; y < k.rows() && rowwise; ++y)
        if (!q(0, y).is_zero() && !is_ergodic(row_state(k, y), sys))
            rowwise = false;
    if (verdict != rowwise)
        throw std::logic_error("is_as_ergodic: almost-sure and rowwise routes disagree");
    return verdict;
}

/// Ergodic decomposition of an invariant state p of a deterministic system:
/// pushing p along the cocone gives the mixing measure q on the quotient, and
/// Bayes-inverting the cocone at p gives the kernel of ergodic components.
/// The result satisfies k o q = p exactly and is q-almost-surely ergodic.
inline Decomposition ergodic_decomposition(const State& p, const DynSystem& sys) {
    if (!is_state(p))
        throw std::invalid_argument("ergodic_decomposition: expected a state");
    if (p.cod() != sys.space())
        throw SpaceMismatch("ergodic_decomposition: state must live on the system space");
    if (!sys.deterministic())
        throw NotDeterministicSystem(
            "ergodic_decomposition: the theorem applies to deterministic systems");
    if (!is_left_invariant(p, sys))
        throw NotInvariant("ergodic_decomposition: state is not invariant");
    const InvariantSigma inv = invariant_sigma(sys);
    State q = compose(inv.cocone, p);
    Kernel k = bayes_invert(inv.cocone, p);
    Decomposition d(std::move(q), std::move(k), p);
    if (!is_as_ergodic(d.k(), d.q(), sys))
        throw std::logic_error("ergodic_decomposition: produced kernel is not almost-surely ergodic");
    return d;
}

/// Enumerates the ergodic states of a system with a single functional
/// generator (one state per quotient atom: uniform on the unique cycle inside
/// it) or of a system all of whose generators are permutations (uniform on
/// each orbit). For general stochastic generators the strict-sense ergodic
/// set can be infinite, so those are rejected.
inline std::vector<State> enumerate_ergodic(const DynSystem& sys) {
    const InvariantSigma inv = invariant_sigma(sys);
    const int n = sys.space().atom_count();
    std::vector<State> out;
    out.reserve(inv.atom_components.size());
    if (sys.generators().size() == 1 && sys.deterministic()) {
        const Kernel& t = sys.generators()[0].second;
        const auto step = [&](int a) {
            for (int b = 0; b < n; ++b)
                if (t(a, b) == 1)
                    return b;
            return a; // unreachable: rows of a zero-one kernel have exactly one 1
        };
        for (const auto& comp : inv.atom_components) {
            std::vector<int> visited_at(static_cast<std::size_t>(n), -1);
            std::vector<int> path;
            int a = comp[0];
            while (visited_at[static_cast<std::size_t>(a)] == -1) {
                visited_at[static_cast<std::size_t>(a)] = static_cast<int>(path.size());
                path.push_back(a);
                a = step(a);
            }
            const int start = visited_at[static_cast<std::size_t>(a)];
            const int len = static_cast<int>(path.size()) - start;
            std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
            for (int i = start; i < static_cast<int>(path.size()); ++i)
                e[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])] = Rational(1, len);
            out.push_back(make_state(sys.space(), std::move(e)));
        }
        return out;
    }
    if (sys.bijective()) {
        for (const auto& comp : inv.atom_components) {
            std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
            for (int a : comp)
                e[static_cast<std::size_t>(a)] = Rational(1, static_cast<int>(comp.size()));
            out.push_back(make_state(sys.space(), std::move(e)));
        }
        return out;
    }
    throw UnsupportedGenerators("enumerate_ergodic: needs a single functional generator or a "
                                "set of bijective generators");
}

/// The zig-zag orbit relation of a deterministic system, as a partition of
/// the carrier. Its classes are exactly the atoms of the invariant
/// sigma-algebra.
inline PointRelation zigzag_relation(const DynSystem& sys) {
    if (!sys.deterministic())
        throw NotDeterministicSystem("zigzag_relation: defined for deterministic systems");
    const InvariantSigma inv = invariant_sigma(sys);
    return PointRelation{sys.space(), inv.quotient_space.atoms()};
}

/// The orbit space of a deterministic system together with the isomorphism
/// between it and the invariant sigma-algebra.
struct OrbitIso {
    FinSpace orbit_space; ///< discrete, one point per zig-zag class
    Kernel to_orbits;     ///< invariant sigma-algebra -> orbit space
    Kernel from_orbits;   ///< orbit space -> invariant sigma-algebra, h(A|[x]) = 1_A(x)
};

/// Builds the set-level orbit quotient of a deterministic system and the two
/// zero-one kernels composing to identities both ways: the invariant
/// sigma-algebra is the orbit space as far as kernels can see.
inline OrbitIso zigzag_quotient(const DynSystem& sys) {
    if (!sys.deterministic())
        throw NotDeterministicSystem("zigzag_quotient: defined for deterministic systems");
    const InvariantSigma inv = invariant_sigma(sys);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(inv.quotient_space.atom_count()));
    for (int c = 0; c < inv.quotient_space.atom_count(); ++c)
        labels.push_back(inv.quotient_space.atom_label(c));
    FinSpace orbits = FinSpace::discrete(std::move(labels));
    const int k = inv.quotient_space.atom_count();
    std::vector<Rational> unit_entries(static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
                                       Rational(0));
    for (int i = 0; i < k; ++i)
        unit_entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                     static_cast<std::size_t>(i)] = 1;
    Kernel to(inv.quotient_space, orbits, unit_entries);
    Kernel from(orbits, inv.quotient_space, std::move(unit_entries));
    return OrbitIso{std::move(orbits), std::move(to), std::move(from)};
}

} // namespace finstoch

#endif // FINSTOCH_DYNAMICS_HPP
