#include "decycle/verifier.hpp"

#include <algorithm>

#include "decycle/errors.hpp"

namespace decycle {

namespace {

struct Frame {
    Vertex v;
    std::size_t next;
};

// Depth-first search over g - s, one tree per component. In an undirected DFS every
// non-tree edge joins a vertex to one of its ancestors, so the first such edge closes a
// cycle along the parent chain.
void explore(const Graph& g, const VertexSet& s, ResidualReport& report) {
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<Vertex> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<Frame> stack;

    for (Vertex root = 0; root < g.size(); ++root) {
        if (s.contains(root) || seen[static_cast<std::size_t>(root)])
            continue;
        ++report.n_components;
        seen[static_cast<std::size_t>(root)] = 1;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& top = stack.back();
            auto nbrs = g.neighbours(top.v);
            if (top.next == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            Vertex w = nbrs[top.next++];
            if (s.contains(w))
                continue;
            auto wi = static_cast<std::size_t>(w);
            if (!seen[wi]) {
                seen[wi] = 1;
                parent[wi] = top.v;
                stack.push_back({w, 0});
            } else if (w != parent[static_cast<std::size_t>(top.v)] && !report.witness_cycle) {
                // w is an ancestor of top.v still on the stack.
                std::vector<Vertex> cycle;
                for (Vertex x = top.v; x != w; x = parent[static_cast<std::size_t>(x)])
                    cycle.push_back(x);
                cycle.push_back(w);
                std::ranges::reverse(cycle);
                cycle.push_back(w);
                report.witness_cycle = std::move(cycle);
            }
        }
    }
}

void check_universe(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.size())
        throw InvalidInput("vertex set universe " + std::to_string(s.universe_size()) + " does not match graph order " +
                           std::to_string(g.size()));
}

}  // namespace

ResidualReport residual(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    ResidualReport report;
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (s.contains(v))
            continue;
        ++report.n_vertices_left;
        int d = 0;
        for (Vertex w : g.neighbours(v))
            d += s.contains(w) ? 0 : 1;
        degree_sum += static_cast<std::size_t>(d);
        report.max_degree_left = std::max(report.max_degree_left, d);
    }
    report.n_edges_left = degree_sum / 2;
    explore(g, s, report);
    report.is_forest = report.n_edges_left + static_cast<std::size_t>(report.n_components) ==
                       static_cast<std::size_t>(report.n_vertices_left);
    if (report.is_forest)
        report.witness_cycle.reset();
    return report;
}

UnicyclicResult is_unicyclic(const Graph& g, const VertexSet& s) {
    auto r = residual(g, s);
    UnicyclicResult out;
    out.unicyclic = r.n_components == 1 && r.n_edges_left == static_cast<std::size_t>(r.n_vertices_left);
    if (out.unicyclic)
        out.cycle = std::move(r.witness_cycle);
    return out;
}

VerificationOutcome verify_certificate(const Graph& g, const DecyclingCertificate& cert) {
    if (g.size() != cert.family.n_vertices() || g != realize(cert.family))
        throw InvalidInput("graph does not match family " + cert.family.to_string());

    VerificationOutcome out{cert, residual(g, cert.set), {}};
    const int actual = cert.set.size();
    if (!out.residual.is_forest)
        out.failures.push_back("residual graph contains a cycle");
    if (actual != cert.cardinality)
        out.failures.push_back("claimed cardinality " + std::to_string(cert.cardinality) + " but set has " +
                               std::to_string(actual) + " vertices");
    if (cert.lower_bound > actual)
        out.failures.push_back("claimed lower bound " + std::to_string(cert.lower_bound) + " exceeds set size " +
                               std::to_string(actual));
    out.certificate.status = out.failures.empty() ? CertificateStatus::verified : CertificateStatus::failed;
    return out;
}

VerificationOutcome verify_certificate(const DecyclingCertificate& cert) {
    return verify_certificate(realize(cert.family), cert);
}

std::string to_string(CertificateStatus s) {
    switch (s) {
    case CertificateStatus::unverified:
        return "unverified";
    case CertificateStatus::verified:
        return "verified";
    case CertificateStatus::failed:
        return "failed";
    }
    return "unverified";
}

CertificateStatus status_from_string(const std::string& s) {
    if (s == "unverified")
        return CertificateStatus::unverified;
    if (s == "verified")
        return CertificateStatus::verified;
    if (s == "failed")
        return CertificateStatus::failed;
    throw InvalidInput("unknown certificate status '" + s + "'");
}

}  // namespace decycle
