#include "decycle/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include "decycle/bounds.hpp"
#include "decycle/errors.hpp"

namespace decycle {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Multigraph on at most 64 vertices with edge multiplicity capped at two. Two parallel
// edges form a 2-cycle, so any decycling set must take one of their endpoints.
struct Kernel {
    int n = 0;
    Mask alive = 0;
    // Vertices a branch has committed to leave out of the set.
    Mask keep = 0;
    std::array<Mask, kMaxVertices> single{};
    std::array<Mask, kMaxVertices> twice{};

    Mask nbrs(int v) const { return single[v] & alive; }
    Mask doubled(int v) const { return twice[v] & alive; }
    int degree(int v) const { return std::popcount(nbrs(v)) + std::popcount(doubled(v)); }

    void remove(int v) { alive &= ~bit(v); }

    void add_edge(int u, int w) {
        if (single[u] & bit(w)) {
            twice[u] |= bit(w);
            twice[w] |= bit(u);
        } else {
            single[u] |= bit(w);
            single[w] |= bit(u);
        }
    }
};

Kernel make_kernel(const Graph& g) {
    Kernel k;
    k.n = g.size();
    k.alive = k.n == kMaxVertices ? ~Mask{0} : bit(k.n) - 1;
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex w : g.neighbours(v))
            k.single[v] |= bit(w);
    return k;
}

struct Stats {
    int edges = 0;
    int vertices = 0;
    int components = 0;
    int max_degree = 0;
};

int count_components(const Kernel& k, Mask within) {
    int comps = 0;
    Mask todo = within;
    while (todo) {
        ++comps;
        Mask frontier = todo & (~todo + 1);
        Mask reached = frontier;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= k.single[std::countr_zero(f)];
            next &= within & ~reached;
            reached |= next;
            frontier = next;
        }
        todo &= ~reached;
    }
    return comps;
}

Stats stats(const Kernel& k, Mask within) {
    Stats s;
    int degree_sum = 0;
    for (Mask a = within; a; a &= a - 1) {
        int v = std::countr_zero(a);
        int d = std::popcount(k.single[v] & within) + std::popcount(k.twice[v] & within);
        degree_sum += d;
        s.max_degree = std::max(s.max_degree, d);
        ++s.vertices;
    }
    s.edges = degree_sum / 2;
    s.components = count_components(k, within);
    return s;
}

int cyclomatic(const Stats& s) { return s.edges - s.vertices + s.components; }

// Deleting a vertex of degree d lowers the cyclomatic number by at most d - 1.
int cyclomatic_lower_bound(const Kernel& k) {
    Stats s = stats(k, k.alive);
    int mu = cyclomatic(s);
    if (mu <= 0)
        return 0;
    return (mu + s.max_degree - 2) / (s.max_degree - 1);
}

// Applies the reduction rules to a fixpoint. Returns false when the budget runs out
// or a forced choice is impossible.
bool reduce(Kernel& k, int& budget, Mask& chosen) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Mask a = k.alive; a; a &= a - 1) {
            int v = std::countr_zero(a);
            if (!(k.alive & bit(v)))
                continue;
            int d = k.degree(v);
            if (d <= 1) {
                k.remove(v);
                changed = true;
            } else if (d == 2 && std::popcount(k.nbrs(v)) == 1) {
                // v hangs on u by a double edge: a loop after contracting v. Taking u
                // hits every cycle through v.
                int u = std::countr_zero(k.nbrs(v));
                int pick = (k.keep & bit(u)) ? v : u;
                if (k.keep & bit(pick))
                    return false;
                k.remove(pick);
                chosen |= bit(pick);
                if (--budget < 0)
                    return false;
                changed = true;
            } else if (d == 2) {
                Mask nb = k.nbrs(v);
                int u = std::countr_zero(nb);
                int w = std::countr_zero(nb & (nb - 1));
                bool ends_kept = (k.keep & bit(u)) && (k.keep & bit(w));
                if (ends_kept && !(k.keep & bit(v)))
                    continue;
                k.remove(v);
                k.add_edge(u, w);
                changed = true;
            }
        }
    }
    return budget >= 0;
}

class Search {
public:
    Search(const SolverConfig& cfg, int fallback_upper_bound) : cfg_(cfg), fallback_(fallback_upper_bound) {}

    std::uint64_t nodes() const { return nodes_; }

    // Finds a set of at most `budget` vertices (added to `chosen`) decycling `k`.
    std::optional<Mask> run(Kernel k, int budget, Mask chosen) {
        if (++nodes_ > cfg_.node_budget)
            throw ResourceLimit("node budget of " + std::to_string(cfg_.node_budget) + " exhausted", fallback_);
        if (cfg_.use_reductions && !reduce(k, budget, chosen))
            return std::nullopt;
        if (budget < 0)
            return std::nullopt;
        if (cyclomatic(stats(k, k.keep & k.alive)) > 0)
            return std::nullopt;
        int lb = cyclomatic_lower_bound(k);
        if (lb == 0)
            return chosen;
        if (lb > budget)
            return std::nullopt;

        std::vector<int> candidates = branch_vertices(k);
        Mask excluded = 0;
        for (int v : candidates) {
            if (!(k.keep & bit(v))) {
                Kernel child = k;
                child.keep |= excluded;
                child.remove(v);
                if (auto found = run(child, budget - 1, chosen | bit(v)))
                    return found;
            }
            excluded |= bit(v);
        }
        return std::nullopt;
    }

private:
    // Vertices to branch on: the endpoints of a parallel edge if there is one, otherwise
    // a shortest cycle. Smallest labels win ties.
    static std::vector<int> branch_vertices(const Kernel& k) {
        for (Mask a = k.alive; a; a &= a - 1) {
            int u = std::countr_zero(a);
            Mask d = k.doubled(u) & (~Mask{0} << u << 1);
            if (d)
                return {u, std::countr_zero(d)};
        }
        return shortest_cycle(k);
    }

    static std::vector<int> shortest_cycle(const Kernel& k) {
        int best_len = std::numeric_limits<int>::max();
        std::vector<int> best;
        std::array<int, kMaxVertices> dist{};
        std::array<int, kMaxVertices> parent{};
        std::array<int, kMaxVertices> queue{};
        for (Mask a = k.alive; a; a &= a - 1) {
            int root = std::countr_zero(a);
            dist.fill(-1);
            dist[root] = 0;
            parent[root] = -1;
            int head = 0, tail = 0;
            queue[tail++] = root;
            int found_len = std::numeric_limits<int>::max();
            int ex = -1, ey = -1;
            while (head < tail) {
                int x = queue[head++];
                if (2 * dist[x] + 1 >= found_len)
                    break;
                for (Mask nb = k.nbrs(x); nb; nb &= nb - 1) {
                    int y = std::countr_zero(nb);
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue[tail++] = y;
                    } else if (y != parent[x]) {
                        int len = dist[x] + dist[y] + 1;
                        if (len < found_len) {
                            found_len = len;
                            ex = x;
                            ey = y;
                        }
                    }
                }
            }
            if (found_len < best_len) {
                best_len = found_len;
                best.clear();
                for (int x = ex; x != -1; x = parent[x])
                    best.push_back(x);
                for (int y = ey; y != -1 && y != root; y = parent[y])
                    best.push_back(y);
                std::ranges::sort(best);
                best.erase(std::ranges::unique(best).begin(), best.end());
                if (best_len == 3)
                    break;
            }
        }
        return best;
    }

    const SolverConfig& cfg_;
    int fallback_;
    std::uint64_t nodes_ = 0;
};

VertexSet to_set(int n, Mask m) {
    VertexSet s(n);
    for (; m; m &= m - 1)
        s.insert(std::countr_zero(m));
    return s;
}

void check_config(const Graph& g, const SolverConfig& cfg) {
    if (cfg.vertex_budget <= 0 || cfg.vertex_budget > kMaxVertices || cfg.node_budget == 0)
        throw InvalidParameter("solver budgets must be positive and the vertex budget at most 64");
    if (g.size() > cfg.vertex_budget)
        throw ResourceLimit("graph has " + std::to_string(g.size()) + " vertices, vertex budget is " +
                                std::to_string(cfg.vertex_budget),
                            greedy_fvs(g).size());
}

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    char* end = nullptr;
    auto value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || value == 0)
        throw InvalidParameter(std::string(name) + " must be a positive integer");
    return value;
}

}  // namespace

SolverConfig SolverConfig::from_environment() {
    SolverConfig cfg;
    cfg.vertex_budget = static_cast<int>(env_or("DECYCLE_VERTEX_BUDGET", static_cast<std::uint64_t>(cfg.vertex_budget)));
    cfg.node_budget = env_or("DECYCLE_NODE_BUDGET", cfg.node_budget);
    return cfg;
}

VertexSet greedy_fvs(const Graph& g) {
    if (g.size() > kMaxVertices) {
        // Beyond the kernel's width: peel maximum-degree vertices until every survivor
        // has degree <= 1, which leaves a matching.
        VertexSet s(g.size());
        std::vector<int> deg(static_cast<std::size_t>(g.size()));
        for (Vertex v = 0; v < g.size(); ++v)
            deg[static_cast<std::size_t>(v)] = g.degree(v);
        while (true) {
            auto it = std::ranges::max_element(deg);
            if (*it < 2)
                break;
            Vertex v = static_cast<Vertex>(it - deg.begin());
            s.insert(v);
            deg[static_cast<std::size_t>(v)] = -1;
            for (Vertex w : g.neighbours(v))
                if (deg[static_cast<std::size_t>(w)] > 0)
                    --deg[static_cast<std::size_t>(w)];
        }
        return s;
    }
    Kernel k = make_kernel(g);
    Mask chosen = 0;
    int budget = std::numeric_limits<int>::max() / 2;
    while (true) {
        reduce(k, budget, chosen);
        if (!k.alive)
            break;
        int best = -1, best_deg = -1;
        for (Mask a = k.alive; a; a &= a - 1) {
            int v = std::countr_zero(a);
            if (k.degree(v) > best_deg) {
                best_deg = k.degree(v);
                best = v;
            }
        }
        k.remove(best);
        chosen |= bit(best);
    }
    return to_set(g.size(), chosen);
}

std::optional<VertexSet> exists_fvs_of_size(const Graph& g, int k, const SolverConfig& cfg) {
    check_config(g, cfg);
    if (k < 0)
        return std::nullopt;
    Search search(cfg, greedy_fvs(g).size());
    if (auto m = search.run(make_kernel(g), k, 0))
        return to_set(g.size(), *m);
    return std::nullopt;
}

SolverResult min_fvs_exact(const Graph& g, const SolverConfig& cfg, int known_lower_bound) {
    check_config(g, cfg);
    const auto start = std::chrono::steady_clock::now();
    const VertexSet greedy = greedy_fvs(g);
    Search search(cfg, greedy.size());
    const Kernel root = make_kernel(g);

    SolverResult result;
    if (cfg.mode == SearchMode::iterative_deepening) {
        int k = std::max(known_lower_bound, cyclomatic_lower_bound(root));
        for (;; ++k) {
            if (auto m = search.run(root, k, 0)) {
                result.witness = to_set(g.size(), *m);
                break;
            }
        }
    } else {
        result.witness = greedy;
        while (result.witness.size() > known_lower_bound) {
            auto m = search.run(root, result.witness.size() - 1, 0);
            if (!m)
                break;
            result.witness = to_set(g.size(), *m);
        }
    }
    result.minimum = result.witness.size();
    result.nodes_explored = search.nodes();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

SolverResult min_fvs_exact(const FamilySpec& spec, const SolverConfig& cfg) {
    return min_fvs_exact(realize(spec), cfg, bound_report(spec).best);
}

}  // namespace decycle
