#include "decycle/dot.hpp"

#include <ostream>

#include "decycle/errors.hpp"

namespace decycle {

void write_dot(std::ostream& out, const Graph& g, const DotOptions& opts) {
    if (opts.highlight && opts.highlight->universe_size() != g.size())
        throw InvalidInput("highlight set does not match graph order");
    auto chosen = [&](Vertex v) { return opts.highlight && opts.highlight->contains(v); };

    out << "graph G {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        out << "  " << v << " [label=\"" << v << "\"";
        if (opts.torus_cols) {
            auto c = torus_coord(v, *opts.torus_cols);
            out << ", row=" << c.row << ", col=" << c.col << ", pos=\"" << c.col << "," << -c.row << "!\"";
        }
        if (chosen(v))
            out << ", style=filled, fillcolor=\"#f4a261\", peripheries=2";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (opts.highlight) {
            if (chosen(u) || chosen(v))
                out << " [style=dashed, color=grey60]";
            else
                out << " [penwidth=3]";
        }
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace decycle
