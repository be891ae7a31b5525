#pragma once

#include <iosfwd>
#include <optional>

#include "decycle/graph.hpp"
#include "decycle/vertex_set.hpp"

namespace decycle {

struct DotOptions {
    /// Vertices drawn filled; edges with both ends outside it are drawn bold, the others
    /// dashed and grey.
    std::optional<VertexSet> highlight;
    /// For C_rows x C_cols: pin each vertex at (col, -row) so neato/fdp draw the toroidal
    /// rectangle.
    std::optional<int> torus_cols;
};

void write_dot(std::ostream& out, const Graph& g, const DotOptions& opts = {});

}  // namespace decycle
