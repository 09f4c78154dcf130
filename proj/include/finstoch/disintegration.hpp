#ifndef FINSTOCH_DISINTEGRATION_HPP
#define FINSTOCH_DISINTEGRATION_HPP

#include "finstoch/kernel.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace finstoch {

/// Bayesian inversion of f: X -> Y with respect to the prior p on X.
/// Returns the kernel c: Y -> X with c(x|y) = p(x) f(y|x) / q(y) where
/// q = f o p, for every y with q(y) > 0. Rows at q-null atoms are filled with
/// p itself: this keeps the result stochastic and total, and any two valid
/// fills are q-almost-surely equal anyway.
inline Kernel bayes_invert(const Kernel& f, const State& p) {
    if (!is_state(p) || p.cod() != f.dom())
        throw SpaceMismatch("bayes_invert: p must be a state on the domain of f");
    const State q = compose(f, p);
    const int nx = f.rows(), ny = f.cols();
    std::vector<Rational> e(static_cast<std::size_t>(ny) * static_cast<std::size_t>(nx));
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x)
            e[static_cast<std::size_t>(y) * static_cast<std::size_t>(nx) +
              static_cast<std::size_t>(x)] =
                q(0, y).is_zero() ? p(0, x) : p(0, x) * f(x, y) / q(0, y);
    return Kernel(f.cod(), f.dom(), std::move(e));
}

/// Checks the defining disintegration equation p(x) f(y|x) = q(y) c(x|y) at
/// every pair of atoms, with q = f o p.
inline bool verify_disintegration(const Kernel& f, const State& p, const Kernel& c) {
    if (!is_state(p) || p.cod() != f.dom())
        throw SpaceMismatch("verify_disintegration: p must be a state on the domain of f");
    if (c.dom() != f.cod() || c.cod() != f.dom())
        throw SpaceMismatch("verify_disintegration: c must run from cod(f) to dom(f)");
    const State q = compose(f, p);
    for (int x = 0; x < f.rows(); ++x)
        for (int y = 0; y < f.cols(); ++y)
            if (p(0, x) * f(x, y) != q(0, y) * c(y, x))
                return false;
    return true;
}

/// A factorization p = k o q of a state p on X through a state q on Y.
/// The composition identity is validated at construction.
class Decomposition {
public:
    Decomposition(State q, Kernel k, State p)
        : q_(std::move(q)), k_(std::move(k)), p_(std::move(p)) {
        if (!is_state(q_) || !is_state(p_) || q_.cod() != k_.dom() || k_.cod() != p_.cod())
            throw SpaceMismatch("Decomposition: shapes must compose as k o q = p");
        if (compose(k_, q_) != p_)
            throw std::invalid_argument("Decomposition: k o q does not equal the target state");
    }

    const State& q() const { return q_; }
    const Kernel& k() const { return k_; }
    const State& p() const { return p_; }

private:
    State q_;
    Kernel k_;
    State p_;
};

/// A decomposition is trivial when k is q-almost-surely the constant-p
/// kernel, i.e. every q-positive row of k is p itself.
inline bool is_trivial_decomposition(const Decomposition& d) {
    return as_equal(d.q(), d.k(), compose(d.p(), discard(d.k().dom())));
}

/// Returns a nontrivial decomposition of p, or nullopt exactly when p is
/// deterministic (zero-one). The witness conditions p on its lowest-indexed
/// support atom versus the rest, over a fresh two-point space; the split is
/// fixed so witnesses are reproducible.
inline std::optional<Decomposition> find_nontrivial_decomposition(const State& p) {
    if (!is_state(p))
        throw std::invalid_argument("find_nontrivial_decomposition: expected a state");
    if (is_deterministic(p))
        return std::nullopt;
    const int n = p.cols();
    int first = -1;
    for (int x = 0; x < n; ++x)
        if (!p(0, x).is_zero()) {
            first = x;
            break;
        }
    const Rational ps = p(0, first); // in (0,1) since p is not zero-one
    const FinSpace two = FinSpace::discrete({"1", "2"});
    State q = make_state(two, {ps, 1 - ps});
    std::vector<Rational> rows(static_cast<std::size_t>(2 * n), Rational(0));
    rows[static_cast<std::size_t>(first)] = 1;
    for (int x = 0; x < n; ++x)
        if (x != first)
            rows[static_cast<std::size_t>(n + x)] = p(0, x) / (1 - ps);
    Kernel k(two, p.cod(), std::move(rows));
    return Decomposition(std::move(q), std::move(k), p);
}

/// Per-instance check of the positivity property: whenever f o p is
/// deterministic, f must be p-almost-surely equal to the constant kernel at
/// f o p. Instances where f o p is not deterministic pass vacuously. This is
/// a checker for the property suite, not a proof of the category-level fact.
inline bool positivity_instance(const Kernel& f, const State& p) {
    if (!is_state(p) || p.cod() != f.dom())
        throw SpaceMismatch("positivity_instance: p must be a state on the domain of f");
    const State fp = compose(f, p);
    if (!is_deterministic(fp))
        return true;
    return as_equal(p, f, compose(fp, discard(f.dom())));
}

/// For deterministic f, the composite f o bayes_invert(f, p) is
/// (f o p)-almost-surely the identity on the codomain of f.
inline bool inversion_section_check(const Kernel& f, const State& p) {
    if (!is_deterministic(f))
        throw NotDeterministic("inversion_section_check: f must be deterministic");
    const State q = compose(f, p);
    return as_equal(q, compose(f, bayes_invert(f, p)), identity(f.cod()));
}

} // namespace finstoch

#endif // FINSTOCH_DISINTEGRATION_HPP
