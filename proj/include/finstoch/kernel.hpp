#ifndef FINSTOCH_KERNEL_HPP
#define FINSTOCH_KERNEL_HPP

#include "finstoch/error.hpp"
#include "finstoch/rational.hpp"
#include "finstoch/space.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace finstoch {

/// A stochastic matrix between two finite measurable spaces. Rows are indexed
/// by the atoms of the domain, columns by the atoms of the codomain; indexing
/// by atoms is what makes every kernel automatically measurable (constant on
/// atoms). Entries are exact rationals, every row sums to exactly 1.
///
/// Immutable after construction.
class Kernel {
public:
    Kernel(FinSpace dom, FinSpace cod, std::vector<Rational> entries)
        : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
        const std::size_t want = static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols());
        if (entries_.size() != want)
            throw std::invalid_argument("Kernel: expected " + std::to_string(want) +
                                        " entries, got " + std::to_string(entries_.size()));
        for (int r = 0; r < rows(); ++r) {
            Rational sum = 0;
            for (int c = 0; c < cols(); ++c) {
                const Rational& e = (*this)(r, c);
                if (e < 0)
                    throw std::invalid_argument("Kernel: negative entry at row " +
                                                std::to_string(r) + ", column " + std::to_string(c));
                sum += e;
            }
            if (sum != 1)
                throw std::invalid_argument("Kernel: row " + std::to_string(r) +
                                            " sums to " + format_rational(sum) + ", not 1");
        }
    }

    const FinSpace& dom() const { return dom_; }
    const FinSpace& cod() const { return cod_; }
    int rows() const { return dom_.atom_count(); }
    int cols() const { return cod_.atom_count(); }

    const Rational& operator()(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols()) +
                        static_cast<std::size_t>(c)];
    }
    std::span<const Rational> row(int r) const {
        return {entries_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols()),
                static_cast<std::size_t>(cols())};
    }
    const std::vector<Rational>& entries() const { return entries_; }

    bool zero_one() const {
        for (const Rational& e : entries_)
            if (e != 0 && e != 1)
                return false;
        return true;
    }

    friend bool operator==(const Kernel& a, const Kernel& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Kernel& a, const Kernel& b) { return !(a == b); }

private:
    FinSpace dom_;
    FinSpace cod_;
    std::vector<Rational> entries_; // row-major
};

/// A probability measure, as a kernel out of the unit space: one row.
using State = Kernel;

inline bool is_state(const Kernel& k) {
    return k.dom().point_count() == 1;
}

inline State make_state(const FinSpace& cod, std::vector<Rational> entries) {
    return State(FinSpace::unit(), cod, std::move(entries));
}

/// Point mass on one atom.
inline State dirac(const FinSpace& cod, int atom) {
    std::vector<Rational> e(static_cast<std::size_t>(cod.atom_count()), Rational(0));
    e[static_cast<std::size_t>(atom)] = 1;
    return make_state(cod, std::move(e));
}

/// One row of a kernel, viewed as a state on its codomain.
inline State row_state(const Kernel& k, int r) {
    auto row = k.row(r);
    return make_state(k.cod(), std::vector<Rational>(row.begin(), row.end()));
}

/// Measure of a union of atoms under a state.
inline Rational mass(const State& p, std::span<const int> atom_set) {
    Rational total = 0;
    for (int a : atom_set)
        total += p(0, a);
    return total;
}

// ---------------------------------------------------------------------------
// Structural kernels
// ---------------------------------------------------------------------------

inline Kernel identity(const FinSpace& x) {
    const int n = x.atom_count();
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
    return Kernel(x, x, std::move(e));
}

/// The unique kernel into the unit space.
inline Kernel discard(const FinSpace& x) {
    return Kernel(x, FinSpace::unit(),
                  std::vector<Rational>(static_cast<std::size_t>(x.atom_count()), Rational(1)));
}

/// Duplication X -> X (x) X. Only defined when every atom of x is a
/// singleton: on a coarser space the diagonal does not land measurably in the
/// rectangle atoms of the product, so requests are rejected rather than
/// approximated. Callers that need the copy-based diagrams on coarse spaces
/// fall back to the equivalent entrywise/support criteria.
inline Kernel copy_map(const FinSpace& x) {
    for (int a = 0; a < x.atom_count(); ++a)
        if (x.atom(a).size() != 1)
            throw CopyNeedsPoints("copy requires all atoms to be singletons; atom " +
                                  x.atom_label(a) + " is not");
    const int n = x.atom_count();
    FinSpace xx = product(x, x);
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                                static_cast<std::size_t>(n),
                            Rational(0));
    for (int a = 0; a < n; ++a)
        e[static_cast<std::size_t>(a) * static_cast<std::size_t>(n * n) +
          static_cast<std::size_t>(a * n + a)] = 1;
    return Kernel(x, std::move(xx), std::move(e));
}

/// The symmetry X (x) Y -> Y (x) X.
inline Kernel swap_map(const FinSpace& x, const FinSpace& y) {
    const int nx = x.atom_count(), ny = y.atom_count();
    FinSpace dom = product(x, y), cod = product(y, x);
    std::vector<Rational> e(static_cast<std::size_t>(nx * ny) * static_cast<std::size_t>(nx * ny),
                            Rational(0));
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
            e[static_cast<std::size_t>(a * ny + b) * static_cast<std::size_t>(nx * ny) +
              static_cast<std::size_t>(b * nx + a)] = 1;
    return Kernel(std::move(dom), std::move(cod), std::move(e));
}

enum class StructuralKind { Identity, Copy, Delete, Swap };

/// Dispatcher over the four structural kernels. Swap needs the second space.
inline Kernel structural(StructuralKind kind, const FinSpace& x,
                         const std::optional<FinSpace>& y = std::nullopt) {
    switch (kind) {
    case StructuralKind::Identity: return identity(x);
    case StructuralKind::Copy: return copy_map(x);
    case StructuralKind::Delete: return discard(x);
    case StructuralKind::Swap:
        if (!y)
            throw std::invalid_argument("structural: swap requires a second space");
        return swap_map(x, *y);
    }
    throw std::invalid_argument("structural: unknown kind");
}

// ---------------------------------------------------------------------------
// Canonical re-indexing isomorphisms
// ---------------------------------------------------------------------------

/// (X (x) Y) (x) Z -> X (x) (Y (x) Z). With row-major product ordering the
/// underlying permutation is the identity; only the space bookkeeping changes.
inline Kernel associator(const FinSpace& x, const FinSpace& y, const FinSpace& z) {
    FinSpace dom = product(product(x, y), z);
    FinSpace cod = product(x, product(y, z));
    const int n = dom.atom_count();
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
    return Kernel(std::move(dom), std::move(cod), std::move(e));
}

/// I (x) X -> X.
inline Kernel left_unitor(const FinSpace& x) {
    const int n = x.atom_count();
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
    return Kernel(product(FinSpace::unit(), x), x, std::move(e));
}

/// X (x) I -> X.
inline Kernel right_unitor(const FinSpace& x) {
    const int n = x.atom_count();
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
    return Kernel(product(x, FinSpace::unit()), x, std::move(e));
}

/// (X (x) X) (x) (Y (x) Y) -> (X (x) Y) (x) (X (x) Y), the middle-swap
/// re-indexing used by the copy/tensor compatibility law.
inline Kernel middle_swap(const FinSpace& x, const FinSpace& y) {
    const int nx = x.atom_count(), ny = y.atom_count();
    FinSpace dom = product(product(x, x), product(y, y));
    FinSpace cod = product(product(x, y), product(x, y));
    const int n = dom.atom_count();
    std::vector<Rational> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < nx; ++b)
            for (int c = 0; c < ny; ++c)
                for (int d = 0; d < ny; ++d) {
                    const int from = (a * nx + b) * ny * ny + (c * ny + d);
                    const int to = (a * ny + c) * nx * ny + (b * ny + d);
                    e[static_cast<std::size_t>(from) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(to)] = 1;
                }
    return Kernel(std::move(dom), std::move(cod), std::move(e));
}

// ---------------------------------------------------------------------------
// Composition and tensor
// ---------------------------------------------------------------------------

/// Chapman-Kolmogorov: (h o k)(z|x) = sum_y h(z|y) k(y|x). Note the argument
/// order matches mathematical composition: compose(h, k) = h o k.
inline Kernel compose(const Kernel& h, const Kernel& k) {
    if (k.cod() != h.dom())
        throw SpaceMismatch("compose: codomain of the first-applied kernel differs from the "
                            "domain of the second");
    const int rows = k.rows(), mid = k.cols(), cols = h.cols();
    std::vector<Rational> e(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                            Rational(0));
    for (int r = 0; r < rows; ++r)
        for (int m = 0; m < mid; ++m) {
            const Rational& km = k(r, m);
            if (km.is_zero())
                continue;
            for (int c = 0; c < cols; ++c) {
                const Rational& hc = h(m, c);
                if (hc.is_zero())
                    continue;
                e[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                  static_cast<std::size_t>(c)] += km * hc;
            }
        }
    return Kernel(k.dom(), h.cod(), std::move(e));
}

/// Independent product of kernels: entry at ((x,z),(y,w)) is k(y|x) * h(w|z).
inline Kernel tensor(const Kernel& k, const Kernel& h) {
    FinSpace dom = product(k.dom(), h.dom());
    FinSpace cod = product(k.cod(), h.cod());
    const int rk = k.rows(), ck = k.cols(), rh = h.rows(), ch = h.cols();
    const int cols = ck * ch;
    std::vector<Rational> e(static_cast<std::size_t>(rk * rh) * static_cast<std::size_t>(cols));
    for (int ik = 0; ik < rk; ++ik)
        for (int ih = 0; ih < rh; ++ih)
            for (int jk = 0; jk < ck; ++jk)
                for (int jh = 0; jh < ch; ++jh)
                    e[static_cast<std::size_t>(ik * rh + ih) * static_cast<std::size_t>(cols) +
                      static_cast<std::size_t>(jk * ch + jh)] = k(ik, jk) * h(ih, jh);
    return Kernel(std::move(dom), std::move(cod), std::move(e));
}

// ---------------------------------------------------------------------------
// Marginals and independence
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

/// Marginal of a state on a product space: discard one factor by summing its
/// atoms. Requires the codomain to have been built by product().
inline State marginal(const State& p, Side side) {
    if (!is_state(p))
        throw std::invalid_argument("marginal: expected a state (one-point domain)");
    const auto info = p.cod().factors();
    if (!info)
        throw NotAProduct("marginal: codomain carries no product factor structure");
    const int nl = info->left.atom_count(), nr = info->right.atom_count();
    const int keep = side == Side::Left ? nl : nr;
    std::vector<Rational> e(static_cast<std::size_t>(keep), Rational(0));
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b)
            e[static_cast<std::size_t>(side == Side::Left ? a : b)] += p(0, a * nr + b);
    return make_state(side == Side::Left ? info->left : info->right, std::move(e));
}

/// A joint state exhibits independence when it equals the tensor of its
/// marginals: p(x,y) = p_X(x) p_Y(y) at every pair of atoms.
inline bool is_independent(const State& p) {
    if (!is_state(p))
        throw std::invalid_argument("is_independent: expected a state");
    const auto info = p.cod().factors();
    if (!info)
        throw NotAProduct("is_independent: codomain carries no product factor structure");
    const State px = marginal(p, Side::Left);
    const State py = marginal(p, Side::Right);
    const int nr = info->right.atom_count();
    for (int a = 0; a < info->left.atom_count(); ++a)
        for (int b = 0; b < nr; ++b)
            if (p(0, a * nr + b) != px(0, a) * py(0, b))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// A kernel is deterministic exactly when every entry is 0 or 1. The entry
/// test is total; where copy exists (both spaces discrete) the diagrammatic
/// characterization copy o f = (f (x) f) o copy is evaluated as an internal
/// cross-check and must agree.
inline bool is_deterministic(const Kernel& f) {
    const bool entrywise = f.zero_one();
    if (f.dom().discrete_atoms() && f.cod().discrete_atoms()) {
        const Kernel lhs = compose(copy_map(f.cod()), f);
        const Kernel rhs = compose(tensor(f, f), copy_map(f.dom()));
        if ((lhs == rhs) != entrywise)
            throw std::logic_error("is_deterministic: diagram test disagrees with entry test");
    }
    return entrywise;
}

/// p-almost-sure equality of f and g, for a measure kernel p: A -> X and
/// f, g: X -> Y. In finite terms: f and g have equal rows at every atom of X
/// carrying positive p-mass from some row of p. Where copy exists on X the
/// defining diagram (id (x) f) o copy o p = (id (x) g) o copy o p is also
/// evaluated and must agree.
inline bool as_equal(const Kernel& p, const Kernel& f, const Kernel& g) {
    if (p.cod() != f.dom() || f.dom() != g.dom() || f.cod() != g.cod())
        throw SpaceMismatch("as_equal: p must land in the common domain of f and g");
    std::vector<bool> supported(static_cast<std::size_t>(f.rows()), false);
    for (int a = 0; a < p.rows(); ++a)
        for (int x = 0; x < p.cols(); ++x)
            if (!p(a, x).is_zero())
                supported[static_cast<std::size_t>(x)] = true;
    bool support_eq = true;
    for (int x = 0; x < f.rows() && support_eq; ++x) {
        if (!supported[static_cast<std::size_t>(x)])
            continue;
        for (int y = 0; y < f.cols(); ++y)
            if (f(x, y) != g(x, y)) {
                support_eq = false;
                break;
            }
    }
    if (f.dom().discrete_atoms()) {
        const Kernel spread = compose(copy_map(f.dom()), p); // A -> X (x) X
        const Kernel idx = identity(f.dom());
        const bool diagram = compose(tensor(idx, f), spread) == compose(tensor(idx, g), spread);
        if (diagram != support_eq)
            throw std::logic_error("as_equal: diagram test disagrees with support test");
    }
    return support_eq;
}

// ---------------------------------------------------------------------------
// Kernels from functions
// ---------------------------------------------------------------------------

/// The zero-one kernel of a point map dom -> cod given as point_map[i] =
/// image index. The map must be measurable: the preimage of every codomain
/// atom must be a union of domain atoms.
inline Kernel kernel_from_function(const std::vector<int>& point_map, const FinSpace& dom,
                                   const FinSpace& cod) {
    if (static_cast<int>(point_map.size()) != dom.point_count())
        throw std::invalid_argument("kernel_from_function: map must assign every domain point");
    for (int p = 0; p < dom.point_count(); ++p)
        if (point_map[static_cast<std::size_t>(p)] < 0 ||
            point_map[static_cast<std::size_t>(p)] >= cod.point_count())
            throw std::invalid_argument("kernel_from_function: image of point " +
                                        std::to_string(p) + " is outside the codomain");
    const int rows = dom.atom_count(), cols = cod.atom_count();
    std::vector<Rational> e(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                            Rational(0));
    for (int a = 0; a < rows; ++a) {
        const auto& atom = dom.atom(a);
        const int target = cod.atom_of_point(point_map[static_cast<std::size_t>(atom[0])]);
        for (int p : atom) {
            const int t = cod.atom_of_point(point_map[static_cast<std::size_t>(p)]);
            if (t != target)
                throw NotMeasurable("kernel_from_function: preimage of codomain atom " +
                                    cod.atom_label(t) + " is not a union of domain atoms (it splits atom " +
                                    dom.atom_label(a) + ")");
        }
        e[static_cast<std::size_t>(a) * static_cast<std::size_t>(cols) +
          static_cast<std::size_t>(target)] = 1;
    }
    return Kernel(dom, cod, std::move(e));
}

// ---------------------------------------------------------------------------
// Indistinguishability quotient
// ---------------------------------------------------------------------------

/// A space quotient presented by a forward and a backward deterministic
/// kernel composing to identities both ways.
struct QuotientIso {
    FinSpace quotient;
    Kernel forward;  ///< original space -> quotient
    Kernel backward; ///< quotient -> original space
};

/// Collapses indistinguishable points: the quotient has one point per atom,
/// all of its atoms singletons. Both kernels are zero-one and mutually
/// inverse, witnessing that a finite space and its atom quotient are
/// isomorphic as far as kernels can see.
inline QuotientIso indistinguishability_quotient(const FinSpace& x) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(x.atom_count()));
    for (int a = 0; a < x.atom_count(); ++a)
        labels.push_back(x.atom_label(a));
    FinSpace quotient = FinSpace::discrete(std::move(labels));
    const int n = x.atom_count();
    std::vector<Rational> unit_entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                                       Rational(0));
    for (int i = 0; i < n; ++i)
        unit_entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(i)] = 1;
    Kernel forward(x, quotient, unit_entries);
    Kernel backward(quotient, x, std::move(unit_entries));
    return QuotientIso{std::move(quotient), std::move(forward), std::move(backward)};
}

} // namespace finstoch

#endif // FINSTOCH_KERNEL_HPP
