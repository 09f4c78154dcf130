#ifndef FINSTOCH_RANDOM_HPP
#define FINSTOCH_RANDOM_HPP

#include "finstoch/dynamics.hpp"
#include "finstoch/kernel.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace finstoch {

/// Seeded source of random instances for the property and axiom suites.
/// Draws are reduced with plain modulo (bias is irrelevant here) so a given
/// seed replays identically across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

inline FinSpace random_space(Rng& rng, int max_points, bool allow_coarse) {
    const int n = 1 + rng.below(max_points);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        labels.push_back("p" + std::to_string(p));
    if (!allow_coarse || rng.coin())
        return FinSpace::discrete(std::move(labels));
    const int buckets = 1 + rng.below(n);
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(buckets));
    for (int p = 0; p < n; ++p)
        groups[static_cast<std::size_t>(rng.below(buckets))].push_back(p);
    std::vector<std::vector<int>> atoms;
    for (auto& g : groups)
        if (!g.empty())
            atoms.push_back(std::move(g));
    return FinSpace(std::move(labels), std::move(atoms));
}

/// One random probability row over `cols` columns: small random weights,
/// normalized exactly. A sparsity coin produces rows with genuinely null
/// entries so support-sensitive paths get exercised.
inline std::vector<Rational> random_probability_row(Rng& rng, int cols) {
    std::vector<int> w(static_cast<std::size_t>(cols), 0);
    const bool sparse = rng.below(3) == 0;
    for (int c = 0; c < cols; ++c)
        w[static_cast<std::size_t>(c)] = sparse && rng.coin() ? 0 : rng.below(10);
    int total = 0;
    for (int v : w)
        total += v;
    if (total == 0) {
        w[static_cast<std::size_t>(rng.below(cols))] = 1;
        total = 1;
    }
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(cols));
    for (int v : w)
        row.emplace_back(v, total);
    return row;
}

inline State random_state(Rng& rng, const FinSpace& x) {
    return make_state(x, random_probability_row(rng, x.atom_count()));
}

inline Kernel random_kernel(Rng& rng, const FinSpace& dom, const FinSpace& cod) {
    std::vector<Rational> e;
    e.reserve(static_cast<std::size_t>(dom.atom_count()) *
              static_cast<std::size_t>(cod.atom_count()));
    for (int r = 0; r < dom.atom_count(); ++r) {
        auto row = random_probability_row(rng, cod.atom_count());
        e.insert(e.end(), row.begin(), row.end());
    }
    return Kernel(dom, cod, std::move(e));
}

/// Random zero-one kernel: every row a point mass on a random codomain atom.
inline Kernel random_zero_one_kernel(Rng& rng, const FinSpace& dom, const FinSpace& cod) {
    const int cols = cod.atom_count();
    std::vector<Rational> e(static_cast<std::size_t>(dom.atom_count()) *
                                static_cast<std::size_t>(cols),
                            Rational(0));
    for (int r = 0; r < dom.atom_count(); ++r)
        e[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
          static_cast<std::size_t>(rng.below(cols))] = 1;
    return Kernel(dom, cod, std::move(e));
}

inline State random_zero_one_state(Rng& rng, const FinSpace& x) {
    return dirac(x, rng.below(x.atom_count()));
}

inline Kernel random_permutation_kernel(Rng& rng, const FinSpace& x) {
    const int n = x.atom_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(i + 1))]);
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int a = 0; a < n; ++a)
        e[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] = 1;
    return Kernel(x, x, std::move(e));
}

inline DynSystem random_function_system(Rng& rng, int max_points, bool allow_coarse) {
    FinSpace x = random_space(rng, max_points, allow_coarse);
    Kernel t = random_zero_one_kernel(rng, x, x);
    return DynSystem(std::move(x), {{"t", std::move(t)}});
}

inline DynSystem random_permutation_system(Rng& rng, int max_points, int max_generators,
                                           bool allow_coarse) {
    FinSpace x = random_space(rng, max_points, allow_coarse);
    const int count = 1 + rng.below(max_generators);
    std::vector<std::pair<std::string, Kernel>> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        gens.emplace_back("g" + std::to_string(i), random_permutation_kernel(rng, x));
    return DynSystem(std::move(x), std::move(gens));
}

inline DynSystem random_stochastic_system(Rng& rng, int max_points, int max_generators,
                                          bool allow_coarse) {
    FinSpace x = random_space(rng, max_points, allow_coarse);
    const int count = 1 + rng.below(max_generators);
    std::vector<std::pair<std::string, Kernel>> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Kernel g = rng.coin() ? random_kernel(rng, x, x) : random_zero_one_kernel(rng, x, x);
        gens.emplace_back("g" + std::to_string(i), std::move(g));
    }
    return DynSystem(std::move(x), std::move(gens));
}

/// A random invariant state: a random exact convex mixture of the system's
/// enumerated ergodic states. Requires enumerate_ergodic support.
inline State random_invariant_mixture(Rng& rng, const DynSystem& sys) {
    const std::vector<State> ergodic = enumerate_ergodic(sys);
    const int k = static_cast<int>(ergodic.size());
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    int total = 0;
    for (int i = 0; i < k; ++i) {
        w[static_cast<std::size_t>(i)] = rng.below(8);
        total += w[static_cast<std::size_t>(i)];
    }
    if (total == 0) {
        w[static_cast<std::size_t>(rng.below(k))] = 1;
        total = 1;
    }
    std::vector<Rational> e(static_cast<std::size_t>(sys.space().atom_count()), Rational(0));
    for (int i = 0; i < k; ++i) {
        if (w[static_cast<std::size_t>(i)] == 0)
            continue;
        const Rational weight(w[static_cast<std::size_t>(i)], total);
        for (int a = 0; a < sys.space().atom_count(); ++a)
            e[static_cast<std::size_t>(a)] += weight * ergodic[static_cast<std::size_t>(i)](0, a);
    }
    return make_state(sys.space(), std::move(e));
}

} // namespace finstoch

#endif // FINSTOCH_RANDOM_HPP
