#include "decycle/bounds.hpp"

#include <algorithm>

#include "decycle/errors.hpp"

namespace decycle {

namespace {

long long ceil_div(long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

int beineke_vandell(const Graph& g) {
    if (!g.is_connected())
        throw InvalidInput("Beineke-Vandell bound needs a connected graph");
    const long long cyclomatic = static_cast<long long>(g.n_edges()) - g.size() + 1;
    if (cyclomatic <= 0 || g.max_degree() < 2)
        return 0;
    return static_cast<int>(std::max(1LL, ceil_div(cyclomatic, g.max_degree() - 1)));
}

int cube_count_bound(int n) {
    if (n < 4)
        throw InvalidParameter("cube count bound applies to C4 x Cn with n >= 4");
    return static_cast<int>(ceil_div(3LL * n, 2));
}

int window_bound_cycle_power(int n, int m) {
    if (m < 2 || n < 3 || n <= 2 * m)
        throw InvalidParameter("window bound needs m >= 2 and n > 2m");
    // k is the canonical residue; the windows of m+1 consecutive labels each induce K_{m+1}.
    const int k = n % (m + 1);
    return k + (n - k) / (m + 1) * (m - 1);
}

int k4_window_bound(int n) {
    if (n < 7)
        throw InvalidParameter("K4 window bound needs n >= 7");
    return static_cast<int>(ceil_div(n, 2));
}

int clique_bound(int q) {
    if (q < 1)
        throw InvalidParameter("clique bound needs q >= 1");
    return std::max(0, q - 2);
}

BoundReport bound_report(const FamilySpec& spec) {
    const Graph g = realize(spec);
    BoundReport r{spec, beineke_vandell(g), {}, {}, {}, {}, 0, {}};
    r.notes.push_back({"beineke_vandell", "Beineke-Vandell cyclomatic bound"});

    if (std::holds_alternative<C4xCn>(spec.value())) {
        r.cube_bound = cube_count_bound(spec.n());
        r.notes.push_back({"cube_bound", "cube slab count, C4 x Cn"});
    }
    const int m = spec.power();
    if (m >= 2 && spec.n() > 2 * m) {
        r.window_bound = window_bound_cycle_power(spec.n(), m);
        r.notes.push_back({"window_bound", "consecutive-window count, Cn^m"});
    }
    if (m == 3 && spec.n() >= 7) {
        r.k4_bound = k4_window_bound(spec.n());
        r.notes.push_back({"k4_bound", "K4 window count, Cn^3"});
    }
    if (g.is_complete()) {
        r.clique_bound = clique_bound(g.size());
        r.notes.push_back({"clique_bound", "complete graph K_q needs q - 2"});
    }

    r.best = r.beineke_vandell;
    for (const auto& b : {r.window_bound, r.cube_bound, r.k4_bound, r.clique_bound})
        if (b)
            r.best = std::max(r.best, *b);
    return r;
}

int proved_lower_bound(const FamilySpec& spec) {
    if (std::holds_alternative<CnPowM>(spec.value()))
        throw NotCovered("no closed-form lower bound for " + spec.to_string());
    int bound = bound_report(spec).best;
    const int n = spec.n();
    if (std::holds_alternative<CnPow2>(spec.value()) && n % 3 == 2) {
        // A set of size (n+1)/3 either holds two consecutive labels, which starves some
        // window of three, or leaves every survivor with residual degree >= 2.
        bound = std::max(bound, static_cast<int>(ceil_div(n + 1, 3)) + 1);
    }
    if (std::holds_alternative<CnPow3>(spec.value()) && n % 2 == 0 && n >= 7) {
        // |S| = n/2 forces exactly two deleted vertices per K4 window, and then every
        // survivor keeps a neighbour on each side.
        bound = std::max(bound, k4_window_bound(n) + 1);
    }
    return bound;
}

}  // namespace decycle
