#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decycle/certificate.hpp"
#include "decycle/graph.hpp"
#include "decycle/vertex_set.hpp"

namespace decycle {

/// Shape of the subgraph induced by V(g) - s.
struct ResidualReport {
    int n_vertices_left = 0;
    std::size_t n_edges_left = 0;
    int n_components = 0;
    bool is_forest = true;
    /// Closed vertex sequence v0, v1, ..., vk, v0 (k >= 2) of one residual cycle.
    /// Present exactly when the residual is not a forest.
    std::optional<std::vector<Vertex>> witness_cycle;
    /// Largest degree inside the residual graph.
    int max_degree_left = 0;

    /// True when the residual is a single path (or a single vertex).
    bool is_path() const noexcept {
        return is_forest && n_components == 1 && max_degree_left <= 2;
    }
};

/// Analyses g - s in O(V + E). Throws InvalidInput when s is over a different universe.
ResidualReport residual(const Graph& g, const VertexSet& s);

struct UnicyclicResult {
    bool unicyclic = false;
    /// The unique cycle, closed as in ResidualReport::witness_cycle.
    std::optional<std::vector<Vertex>> cycle;
};

/// True iff g - s is connected with as many edges as vertices.
UnicyclicResult is_unicyclic(const Graph& g, const VertexSet& s);

struct VerificationOutcome {
    DecyclingCertificate certificate;
    ResidualReport residual;
    /// Empty when verified; otherwise the reasons, one per failed check.
    std::vector<std::string> failures;
};

/// Checks that the residual is a forest, that the claimed cardinality matches the set and
/// that the claimed lower bound does not exceed it. Returns a copy of `cert` with the
/// status set; the set itself is never modified. Throws InvalidInput when `g` does not
/// match the certificate's family.
VerificationOutcome verify_certificate(const Graph& g, const DecyclingCertificate& cert);

/// Same, realizing the family graph internally.
VerificationOutcome verify_certificate(const DecyclingCertificate& cert);

}  // namespace decycle
