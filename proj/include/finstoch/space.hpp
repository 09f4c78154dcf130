#ifndef FINSTOCH_SPACE_HPP
#define FINSTOCH_SPACE_HPP

#include "finstoch/error.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace finstoch {

struct ProductInfo;

/// A finite measurable space: an ordered carrier of point labels together
/// with a partition of the carrier indices into the atoms of its
/// sigma-algebra. Every measurable set is a union of atoms, so the atom
/// partition is the whole sigma-algebra in finite presentation.
///
/// Immutable after construction; safe to share freely.
class FinSpace {
public:
    /// Validates that the atoms are nonempty, pairwise disjoint and cover the
    /// carrier. Indices inside each atom are stored sorted.
    FinSpace(std::vector<std::string> carrier, std::vector<std::vector<int>> atoms)
        : carrier_(std::move(carrier)), atoms_(std::move(atoms)) {
        const int n = static_cast<int>(carrier_.size());
        if (n == 0)
            throw std::invalid_argument("FinSpace: carrier must be nonempty");
        atom_of_.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t a = 0; a < atoms_.size(); ++a) {
            auto& atom = atoms_[a];
            if (atom.empty())
                throw std::invalid_argument("FinSpace: atom " + std::to_string(a) + " is empty");
            std::sort(atom.begin(), atom.end());
            for (int p : atom) {
                if (p < 0 || p >= n)
                    throw std::invalid_argument("FinSpace: atom " + std::to_string(a) +
                                                " references point index " + std::to_string(p) +
                                                " outside the carrier");
                if (atom_of_[static_cast<std::size_t>(p)] != -1)
                    throw std::invalid_argument("FinSpace: point index " + std::to_string(p) +
                                                " appears in more than one atom");
                atom_of_[static_cast<std::size_t>(p)] = static_cast<int>(a);
            }
        }
        for (int p = 0; p < n; ++p)
            if (atom_of_[static_cast<std::size_t>(p)] == -1)
                throw std::invalid_argument("FinSpace: point index " + std::to_string(p) +
                                            " appears in no atom");
    }

    /// The one-point space; the monoidal unit and the terminal object.
    static FinSpace unit() { return FinSpace({"*"}, {{0}}); }

    /// All singletons measurable.
    static FinSpace discrete(std::vector<std::string> labels) {
        std::vector<std::vector<int>> atoms;
        atoms.reserve(labels.size());
        for (int p = 0; p < static_cast<int>(labels.size()); ++p)
            atoms.push_back({p});
        return FinSpace(std::move(labels), std::move(atoms));
    }

    int point_count() const { return static_cast<int>(carrier_.size()); }
    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const std::vector<std::string>& carrier() const { return carrier_; }
    const std::string& label(int point) const { return carrier_[static_cast<std::size_t>(point)]; }
    const std::vector<std::vector<int>>& atoms() const { return atoms_; }
    const std::vector<int>& atom(int a) const { return atoms_[static_cast<std::size_t>(a)]; }
    int atom_of_point(int point) const { return atom_of_[static_cast<std::size_t>(point)]; }

    bool discrete_atoms() const {
        return std::all_of(atoms_.begin(), atoms_.end(),
                           [](const std::vector<int>& a) { return a.size() == 1; });
    }

    /// Atom indices covering `points`, or nullopt if the set is not a union
    /// of atoms (i.e. not measurable).
    std::optional<std::vector<int>> atoms_covering(std::vector<int> points) const {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        std::vector<bool> in_set(static_cast<std::size_t>(point_count()), false);
        for (int p : points) {
            if (p < 0 || p >= point_count())
                return std::nullopt;
            in_set[static_cast<std::size_t>(p)] = true;
        }
        std::vector<int> covering;
        for (int a = 0; a < atom_count(); ++a) {
            const auto& atom = atoms_[static_cast<std::size_t>(a)];
            const std::size_t hits = static_cast<std::size_t>(
                std::count_if(atom.begin(), atom.end(),
                              [&](int p) { return in_set[static_cast<std::size_t>(p)]; }));
            if (hits == atom.size())
                covering.push_back(a);
            else if (hits != 0)
                return std::nullopt; // the atom straddles the boundary
        }
        std::size_t covered = 0;
        for (int a : covering)
            covered += atoms_[static_cast<std::size_t>(a)].size();
        if (covered != points.size())
            return std::nullopt;
        return covering;
    }

    /// Set by product(); empty on directly constructed spaces.
    std::shared_ptr<const ProductInfo> factors() const { return factors_; }

    /// Human-readable name of one atom: the point label for singletons,
    /// "{a,b}" otherwise.
    std::string atom_label(int a) const {
        const auto& atom = atoms_[static_cast<std::size_t>(a)];
        if (atom.size() == 1)
            return carrier_[static_cast<std::size_t>(atom[0])];
        std::string out = "{";
        for (std::size_t i = 0; i < atom.size(); ++i) {
            if (i)
                out += ",";
            out += carrier_[static_cast<std::size_t>(atom[i])];
        }
        out += "}";
        return out;
    }

    /// Equality compares carrier and atoms; product provenance is ignored.
    friend bool operator==(const FinSpace& a, const FinSpace& b) {
        return a.carrier_ == b.carrier_ && a.atoms_ == b.atoms_;
    }
    friend bool operator!=(const FinSpace& a, const FinSpace& b) { return !(a == b); }

    friend FinSpace product(const FinSpace& x, const FinSpace& y);

private:
    std::vector<std::string> carrier_;
    std::vector<std::vector<int>> atoms_;
    std::vector<int> atom_of_;
    std::shared_ptr<const ProductInfo> factors_;
};

/// The two factors a product space was built from.
struct ProductInfo {
    FinSpace left;
    FinSpace right;
};

/// Cartesian product with the product sigma-algebra. Carrier points are all
/// ordered pairs in row-major order of the left factor; atoms are all
/// rectangles of an atom of x with an atom of y, in the same order. The
/// ordering is part of the contract: it fixes every symmetry/associator
/// matrix bit-exactly.
inline FinSpace product(const FinSpace& x, const FinSpace& y) {
    const int ny = y.point_count();
    std::vector<std::string> carrier;
    carrier.reserve(static_cast<std::size_t>(x.point_count()) * static_cast<std::size_t>(ny));
    for (const auto& lx : x.carrier())
        for (const auto& ly : y.carrier())
            carrier.push_back("(" + lx + "," + ly + ")");
    std::vector<std::vector<int>> atoms;
    atoms.reserve(static_cast<std::size_t>(x.atom_count()) * static_cast<std::size_t>(y.atom_count()));
    for (const auto& ax : x.atoms())
        for (const auto& ay : y.atoms()) {
            std::vector<int> rect;
            rect.reserve(ax.size() * ay.size());
            for (int i : ax)
                for (int j : ay)
                    rect.push_back(i * ny + j);
            atoms.push_back(std::move(rect));
        }
    FinSpace out(std::move(carrier), std::move(atoms));
    out.factors_ = std::make_shared<const ProductInfo>(ProductInfo{x, y});
    return out;
}

/// An equivalence relation on the carrier of a space.
struct PointRelation {
    FinSpace space;
    std::vector<std::vector<int>> classes; // partition of the carrier, sorted
};

/// Two points are indistinguishable when every measurable set contains both
/// or neither; on a finite space that is exactly "same atom".
inline PointRelation indistinguishability_relation(const FinSpace& x) {
    return PointRelation{x, x.atoms()};
}

} // namespace finstoch

#endif // FINSTOCH_SPACE_HPP
