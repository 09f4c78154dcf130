#ifndef FINSTOCH_LAWS_HPP
#define FINSTOCH_LAWS_HPP

#include "finstoch/kernel.hpp"

namespace finstoch {

// Single-instance evaluators for the structural laws of the category of
// finite stochastic matrices. Each returns whether the law holds exactly on
// the given instance; comparisons across re-associated products go through
// the canonical re-indexing kernels.

/// (copy (x) id) o copy = (id (x) copy) o copy, modulo the associator.
inline bool law_coassociativity(const FinSpace& x) {
    const Kernel cp = copy_map(x);
    const Kernel lhs = compose(tensor(cp, identity(x)), cp); // X -> (X(x)X)(x)X
    const Kernel rhs = compose(tensor(identity(x), cp), cp); // X -> X(x)(X(x)X)
    return compose(associator(x, x, x), lhs) == rhs;
}

/// (delete (x) id) o copy = id = (id (x) delete) o copy, modulo unitors.
inline bool law_counitality(const FinSpace& x) {
    const Kernel cp = copy_map(x);
    const Kernel idx = identity(x);
    const Kernel left = compose(left_unitor(x), compose(tensor(discard(x), idx), cp));
    const Kernel right = compose(right_unitor(x), compose(tensor(idx, discard(x)), cp));
    return left == idx && right == idx;
}

/// swap o copy = copy.
inline bool law_cocommutativity(const FinSpace& x) {
    const Kernel cp = copy_map(x);
    return compose(swap_map(x, x), cp) == cp;
}

/// delete_Y o f = delete_X: the unit is terminal.
inline bool law_terminality(const Kernel& f) {
    return compose(discard(f.cod()), f) == discard(f.dom());
}

/// (f (x) g) o (k (x) h) = (f o k) (x) (g o h).
inline bool law_tensor_functoriality(const Kernel& f, const Kernel& k, const Kernel& g,
                                     const Kernel& h) {
    return compose(tensor(f, g), tensor(k, h)) == tensor(compose(f, k), compose(g, h));
}

/// copy_{X(x)Y} = middle-swap o (copy_X (x) copy_Y).
inline bool law_copy_tensor_compat(const FinSpace& x, const FinSpace& y) {
    const Kernel lhs = copy_map(product(x, y));
    const Kernel rhs = compose(middle_swap(x, y), tensor(copy_map(x), copy_map(y)));
    return lhs == rhs;
}

/// The diagrammatic determinism test copy o f = (f (x) f) o copy evaluated
/// explicitly, against the zero-one entry test. Needs discrete spaces.
inline bool law_determinism_equivalence(const Kernel& f) {
    const Kernel lhs = compose(copy_map(f.cod()), f);
    const Kernel rhs = compose(tensor(f, f), copy_map(f.dom()));
    return (lhs == rhs) == f.zero_one();
}

} // namespace finstoch

#endif // FINSTOCH_LAWS_HPP
