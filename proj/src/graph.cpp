#include "decycle/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>

#include "decycle/errors.hpp"

namespace decycle {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require(bool ok, const std::string& msg) {
    if (!ok)
        throw InvalidParameter(msg);
}

}  // namespace

Graph::Graph(int n_vertices, std::span<const Edge> edges) {
    if (n_vertices < 0)
        throw InvalidInput("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n_vertices));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
            throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : adjacency_) {
        std::ranges::sort(nbrs);
        auto dup = std::ranges::unique(nbrs);
        nbrs.erase(dup.begin(), dup.end());
        degree_sum += nbrs.size();
        max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
    }
    n_edges_ = degree_sum / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || u >= size() || v < 0 || v >= size())
        return false;
    return std::ranges::binary_search(adjacency_[static_cast<std::size_t>(u)], v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(n_edges_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::distances_from(Vertex source) const {
    std::vector<int> dist(adjacency_.size(), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : neighbours(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (size() == 0)
        return true;
    auto dist = distances_from(0);
    return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

bool Graph::is_complete() const noexcept {
    auto n = static_cast<std::size_t>(size());
    return n_edges_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::string FamilySpec::tag() const {
    return std::visit(overloaded{
                          [](const C3xCn&) { return std::string("c3xc"); },
                          [](const C4xCn&) { return std::string("c4xc"); },
                          [](const CnPow2&) { return std::string("pow2"); },
                          [](const CnPow3&) { return std::string("pow3"); },
                          [](const CnPowM&) { return std::string("powm"); },
                      },
                      value_);
}

int FamilySpec::n() const {
    return std::visit([](const auto& f) { return f.n; }, value_);
}

int FamilySpec::power() const {
    return std::visit(overloaded{
                          [](const C3xCn&) { return 0; },
                          [](const C4xCn&) { return 0; },
                          [](const CnPow2&) { return 2; },
                          [](const CnPow3&) { return 3; },
                          [](const CnPowM& f) { return f.m; },
                      },
                      value_);
}

bool FamilySpec::is_torus() const noexcept {
    return std::holds_alternative<C3xCn>(value_) || std::holds_alternative<C4xCn>(value_);
}

int FamilySpec::torus_rows() const {
    if (std::holds_alternative<C3xCn>(value_))
        return 3;
    if (std::holds_alternative<C4xCn>(value_))
        return 4;
    throw InvalidInput(to_string() + " is not a torus family");
}

int FamilySpec::n_vertices() const {
    return is_torus() ? torus_rows() * n() : n();
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << tag() << ' ' << n();
    if (auto* p = std::get_if<CnPowM>(&value_))
        os << ' ' << p->m;
    return os.str();
}

FamilySpec make_family(FamilySpec::Variant v) {
    std::visit(overloaded{
                   [](const C3xCn& f) { require(f.n >= 3, "C3 x Cn needs n >= 3"); },
                   [](const C4xCn& f) { require(f.n >= 4, "C4 x Cn needs n >= 4"); },
                   [](const CnPow2& f) { require(f.n >= 4, "Cn^2 needs n >= 4"); },
                   [](const CnPow3& f) { require(f.n >= 5, "Cn^3 needs n >= 5"); },
                   [](const CnPowM& f) {
                       require(f.n >= 3, "Cn^m needs n >= 3");
                       require(f.m >= 1, "Cn^m needs m >= 1");
                   },
               },
               v);
    return FamilySpec(v);
}

FamilySpec parse_family(const std::string& tag, std::span<const int> params) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k)
            throw InvalidInput("family '" + tag + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (tag == "c3xc") {
        arity(1);
        return make_family(C3xCn{params[0]});
    }
    if (tag == "c4xc") {
        arity(1);
        return make_family(C4xCn{params[0]});
    }
    if (tag == "pow2") {
        arity(1);
        return make_family(CnPow2{params[0]});
    }
    if (tag == "pow3") {
        arity(1);
        return make_family(CnPow3{params[0]});
    }
    if (tag == "powm") {
        arity(2);
        return make_family(CnPowM{params[0], params[1]});
    }
    throw InvalidInput("unknown family '" + tag + "' (expected c3xc, c4xc, pow2, pow3, powm)");
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.size() == 0 || h.size() == 0)
        throw InvalidInput("cartesian product of an empty graph");
    const int nh = h.size();
    std::vector<Edge> edges;
    edges.reserve(g.n_edges() * static_cast<std::size_t>(nh) + h.n_edges() * static_cast<std::size_t>(g.size()));
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v = 0; v < nh; ++v) {
            for (Vertex w : h.neighbours(v))
                if (v < w)
                    edges.emplace_back(u * nh + v, u * nh + w);
            for (Vertex w : g.neighbours(u))
                if (u < w)
                    edges.emplace_back(u * nh + v, w * nh + v);
        }
    }
    return Graph(g.size() * nh, edges);
}

Graph graph_power(const Graph& g, int k) {
    require(k >= 1, "graph power needs k >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.size(); ++u) {
        auto dist = g.distances_from(u);
        for (Vertex v = u + 1; v < g.size(); ++v) {
            int d = dist[static_cast<std::size_t>(v)];
            if (d >= 1 && d <= k)
                edges.emplace_back(u, v);
        }
    }
    return Graph(g.size(), edges);
}

Graph make_cycle_power(int n, int m) {
    require(n >= 3, "cycle power needs n >= 3");
    require(m >= 1, "cycle power needs m >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= m && d <= n / 2; ++d)
            edges.emplace_back(i, (i + d) % n);
    return Graph(n, edges);
}

Graph realize(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const C3xCn& f) { return cartesian_product(make_cycle(3), make_cycle(f.n)); },
                          [](const C4xCn& f) { return cartesian_product(make_cycle(4), make_cycle(f.n)); },
                          [](const CnPow2& f) { return make_cycle_power(f.n, 2); },
                          [](const CnPow3& f) { return make_cycle_power(f.n, 3); },
                          [](const CnPowM& f) { return make_cycle_power(f.n, f.m); },
                      },
                      spec.value());
}

void write_adjacency(std::ostream& out, const Graph& g) {
    for (Vertex v = 0; v < g.size(); ++v) {
        out << v << ':';
        for (Vertex w : g.neighbours(v))
            out << ' ' << w;
        out << '\n';
    }
}

}  // namespace decycle
