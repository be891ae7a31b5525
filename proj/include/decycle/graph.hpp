#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace decycle {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0 .. size()-1.
///
/// Neighbour lists are kept sorted, which makes every traversal in the library visit
/// vertices in label order and keeps all results reproducible.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints throw InvalidInput.
    Graph(int n_vertices, std::span<const Edge> edges);

    int size() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t n_edges() const noexcept { return n_edges_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const noexcept { return max_degree_; }
    bool adjacent(Vertex u, Vertex v) const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Breadth-first hop distances from `source`; -1 for unreachable vertices.
    std::vector<int> distances_from(Vertex source) const;

    bool is_connected() const;
    bool is_complete() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t n_edges_ = 0;
    int max_degree_ = 0;
};

/// Position of a vertex of C_rows x C_cols; label = row * cols + col.
struct TorusCoord {
    int row = 0;
    int col = 0;

    friend bool operator==(const TorusCoord&, const TorusCoord&) = default;
    friend auto operator<=>(const TorusCoord&, const TorusCoord&) = default;
};

inline Vertex torus_label(TorusCoord c, int cols) { return c.row * cols + c.col; }
inline TorusCoord torus_coord(Vertex v, int cols) { return {v / cols, v % cols}; }

// Graph families with a known decycling number, plus the general cycle power.
struct C3xCn { int n; friend bool operator==(const C3xCn&, const C3xCn&) = default; };
struct C4xCn { int n; friend bool operator==(const C4xCn&, const C4xCn&) = default; };
struct CnPow2 { int n; friend bool operator==(const CnPow2&, const CnPow2&) = default; };
struct CnPow3 { int n; friend bool operator==(const CnPow3&, const CnPow3&) = default; };
struct CnPowM {
    int n;
    int m;
    friend bool operator==(const CnPowM&, const CnPowM&) = default;
};

/// One graph family member. Construct through make_family, which enforces the
/// parameter ranges.
class FamilySpec {
public:
    using Variant = std::variant<C3xCn, C4xCn, CnPow2, CnPow3, CnPowM>;

    const Variant& value() const noexcept { return value_; }

    /// Short tag used on the command line and in certificate files: c3xc, c4xc, pow2,
    /// pow3 or powm.
    std::string tag() const;
    int n() const;
    /// Exponent for cycle powers, 0 for products.
    int power() const;
    bool is_torus() const noexcept;
    /// Row count of the torus families (3 or 4).
    int torus_rows() const;
    int n_vertices() const;

    std::string to_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    explicit FamilySpec(Variant v) : value_(v) {}
    friend FamilySpec make_family(Variant);

    Variant value_;
};

/// Validates the parameters of `v` and wraps it. Throws InvalidParameter.
FamilySpec make_family(FamilySpec::Variant v);

/// Parses a tag plus its integer parameters (e.g. "pow3", {9}). Throws InvalidInput
/// for an unknown tag or wrong arity and InvalidParameter for an out-of-range value.
FamilySpec parse_family(const std::string& tag, std::span<const int> params);

Graph make_cycle(int n);

/// Vertex (u, v) gets label u * h.size() + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Same vertices; u ~ v iff 1 <= dist_g(u, v) <= k. Vertices in different components
/// never become adjacent.
Graph graph_power(const Graph& g, int k);

/// Circulant graph on n vertices with connection set {1, ..., m}.
Graph make_cycle_power(int n, int m);

Graph realize(const FamilySpec& spec);

/// One line per vertex: "v: n1 n2 ...".
void write_adjacency(std::ostream& out, const Graph& g);

}  // namespace decycle
