#ifndef FINSTOCH_DOT_HPP
#define FINSTOCH_DOT_HPP

#include "finstoch/dynamics.hpp"

#include <sstream>
#include <string>

namespace finstoch {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

/// Graphviz export of the support graph of a system: one node per atom, one
/// cluster per atom of the invariant sigma-algebra, and an edge C -> B
/// labeled with the generator name whenever that generator moves positive
/// mass from C to B.
inline std::string dot_export(const InvariantSigma& inv) {
    const FinSpace& space = inv.system.space();
    std::ostringstream out;
    out << "digraph invariant_sigma {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=ellipse];\n";
    for (std::size_t comp = 0; comp < inv.atom_components.size(); ++comp) {
        out << "  subgraph cluster_" << comp << " {\n";
        out << "    label=" << detail::dot_quote(inv.quotient_space.atom_label(static_cast<int>(comp)))
            << ";\n";
        for (int a : inv.atom_components[comp])
            out << "    n" << a << " [label=" << detail::dot_quote(space.atom_label(a)) << "];\n";
        out << "  }\n";
    }
    for (const auto& [name, m] : inv.system.generators())
        for (int c = 0; c < m.rows(); ++c)
            for (int b = 0; b < m.cols(); ++b)
                if (!m(c, b).is_zero())
                    out << "  n" << c << " -> n" << b << " [label=" << detail::dot_quote(name)
                        << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace finstoch

#endif // FINSTOCH_DOT_HPP
