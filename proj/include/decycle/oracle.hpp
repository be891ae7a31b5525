#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "decycle/graph.hpp"
#include "decycle/vertex_set.hpp"

namespace decycle {

enum class SearchMode {
    /// Try k = lower bound, lower bound + 1, ... until a set of size k exists.
    iterative_deepening,
    /// Start from a greedy solution and keep asking for a strictly smaller one.
    branch_and_bound,
};

struct SolverConfig {
    /// Largest graph the solver accepts; at most 64.
    int vertex_budget = 64;
    /// Search nodes allowed across the whole solve.
    std::uint64_t node_budget = 50'000'000;
    SearchMode mode = SearchMode::iterative_deepening;
    /// Degree <= 1 deletion, degree-2 contraction and forced choices on parallel edges.
    bool use_reductions = true;

    /// Defaults overridden by DECYCLE_VERTEX_BUDGET / DECYCLE_NODE_BUDGET when set.
    static SolverConfig from_environment();
};

struct SolverResult {
    int minimum = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Exact minimum decycling set. `known_lower_bound` must be a valid lower bound (e.g.
/// bound_report(spec).best); the search starts at the larger of it and the solver's own
/// cyclomatic bound. Throws ResourceLimit when a budget is exceeded.
SolverResult min_fvs_exact(const Graph& g, const SolverConfig& cfg = {}, int known_lower_bound = 0);

/// Same, seeding the search with bound_report(spec).best.
SolverResult min_fvs_exact(const FamilySpec& spec, const SolverConfig& cfg = {});

/// A decycling set with at most k vertices, or nullopt if none exists.
std::optional<VertexSet> exists_fvs_of_size(const Graph& g, int k, const SolverConfig& cfg = {});

/// Greedy upper bound: repeatedly reduce, then delete a vertex of maximum degree.
VertexSet greedy_fvs(const Graph& g);

}  // namespace decycle
