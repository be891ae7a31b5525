#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

/// ceil((|E| - |V| + 1) / (max degree - 1)) for a connected graph; 0 for trees.
/// Throws InvalidInput for disconnected graphs.
int beineke_vandell(const Graph& g);

/// ceil(3n / 2) for C4 x Cn: every one of the n cube slabs needs three deleted vertices and
/// each vertex lies in two slabs.
int cube_count_bound(int n);

/// Window bound for Cn^m with n > 2m: k + (n - k)(m - 1)/(m + 1) where k = n mod (m + 1).
int window_bound_cycle_power(int n, int m);

/// ceil(n / 2) for Cn^3, n >= 7: each of the n windows of four consecutive labels spans a
/// K4 and so holds at least two deleted vertices.
int k4_window_bound(int n);

/// q - 2 for the complete graph K_q.
int clique_bound(int q);

struct BoundNote {
    std::string bound;
    std::string source;
};

/// All lower bounds that apply to one family member.
struct BoundReport {
    FamilySpec instance;
    int beineke_vandell = 0;
    std::optional<int> window_bound;
    std::optional<int> cube_bound;
    std::optional<int> k4_bound;
    std::optional<int> clique_bound;
    int best = 0;
    std::vector<BoundNote> notes;
};

BoundReport bound_report(const FamilySpec& spec);

/// The lower bound the closed-form argument for the family establishes. This is
/// bound_report().best strengthened by the counting arguments that only rule out one
/// specific cardinality (Cn^2 with n = 2 mod 3, Cn^3 with n even). Throws NotCovered for
/// CnPowM.
int proved_lower_bound(const FamilySpec& spec);

}  // namespace decycle
