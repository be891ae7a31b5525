#include "decycle/constructions.hpp"

#include <algorithm>

#include "decycle/bounds.hpp"
#include "decycle/errors.hpp"
#include "decycle/verifier.hpp"

namespace decycle {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

DecyclingCertificate candidate(const FamilySpec& family, VertexSet set, std::string method) {
    const int size = set.size();
    return DecyclingCertificate{family, std::move(set), size, proved_lower_bound(family), std::move(method),
                                CertificateStatus::unverified};
}

DecyclingCertificate certify(DecyclingCertificate cert) {
    auto outcome = verify_certificate(cert);
    if (outcome.certificate.status != CertificateStatus::verified) {
        std::string why;
        for (const auto& f : outcome.failures)
            why += (why.empty() ? "" : "; ") + f;
        throw ConstructionInvariantViolated(cert.family.to_string() + ": " + why);
    }
    return outcome.certificate;
}

VertexSet from_labels(int n, const std::vector<Vertex>& labels) {
    return VertexSet(n, std::span<const Vertex>(labels));
}

// Output of derive_c4_construction(); the regeneration test keeps these in sync.
const std::vector<TorusCoord> kBaseC4xC4 = {{0, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 2}, {3, 3}};
const std::vector<TorusCoord> kBaseC4xC5 = {{0, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 1}, {2, 4}, {3, 0}, {3, 3}};

}  // namespace

int nabla_formula(const FamilySpec& spec) {
    const int n = spec.n();
    if (std::holds_alternative<C3xCn>(spec.value()))
        return n + 1;
    if (std::holds_alternative<C4xCn>(spec.value()))
        return ceil_div(3 * n, 2);
    if (std::holds_alternative<CnPow2>(spec.value()))
        return ceil_div(n + 1, 3) + (n % 3 == 2 ? 1 : 0);
    if (std::holds_alternative<CnPow3>(spec.value())) {
        if (n % 2 == 0)
            return (n + 2) / 2;
        return n % 4 == 1 ? (n + 1) / 2 : (n + 3) / 2;
    }
    throw NotCovered("no closed form for the decycling number of " + spec.to_string());
}

std::string nabla_source(const FamilySpec& spec) {
    const int n = spec.n();
    if (std::holds_alternative<C3xCn>(spec.value()))
        return "Theorem 2";
    if (std::holds_alternative<C4xCn>(spec.value()))
        return "Theorem 3";
    if (std::holds_alternative<CnPow2>(spec.value()))
        return "Theorem 4, n ≡ " + std::to_string(n % 3) + " mod 3";
    if (std::holds_alternative<CnPow3>(spec.value()))
        return n % 2 == 0 ? "Theorem 5, n ≡ 0 mod 2" : "Theorem 5, n ≡ " + std::to_string(n % 4) + " mod 4";
    throw NotCovered("no closed form for the decycling number of " + spec.to_string());
}

VertexSet c3xn_row_pattern(int n) {
    const auto spec = make_family(C3xCn{n});
    VertexSet s(spec.n_vertices());
    for (int col = 0; col < n; ++col) {
        int row = (n % 2 == 1 && col == n - 1) ? 2 : col % 2;
        s.insert(torus_label({row, col}, n));
    }
    return s;
}

static DecyclingCertificate candidate_c3xn(int n) {
    const auto spec = make_family(C3xCn{n});
    const Graph g = realize(spec);
    VertexSet s = c3xn_row_pattern(n);
    auto uni = is_unicyclic(g, s);
    if (!uni.unicyclic || !uni.cycle)
        throw ConstructionInvariantViolated("C3 x C" + std::to_string(n) + ": row pattern residual is not unicyclic");
    s.insert(*std::ranges::min_element(*uni.cycle));
    return candidate(spec, std::move(s), "theorem-2");
}

std::vector<TorusCoord> stored_c4_base(int cols) {
    if (cols == 4)
        return kBaseC4xC4;
    if (cols == 5)
        return kBaseC4xC5;
    throw InvalidParameter("stored C4 x Cn bases exist for n = 4 and n = 5 only");
}

const CylinderGadget& stored_gadget() {
    static const CylinderGadget gadget = CylinderGadget::from_pattern({{{0, 0}, {1, 0}, {2, 1}}});
    return gadget;
}

C4Derivation derive_c4_construction(const SolverConfig& cfg) {
    auto base = [&](int cols) {
        const auto spec = make_family(C4xCn{cols});
        auto solved = min_fvs_exact(spec, cfg);
        return certify(candidate(spec, std::move(solved.witness), "oracle"));
    };
    auto even = base(4);
    auto odd = base(5);
    auto gadget = discover_gadget(even, odd);
    return {std::move(even), std::move(odd), gadget};
}

static DecyclingCertificate candidate_c4xn(int n) {
    const auto spec = make_family(C4xCn{n});
    const int base_cols = n % 2 == 0 ? 4 : 5;
    const auto cells = insert_gadget(stored_c4_base(base_cols), base_cols, stored_gadget(), (n - base_cols) / 2);
    VertexSet s(spec.n_vertices());
    for (auto c : cells)
        s.insert(torus_label(c, n));
    return candidate(spec, std::move(s), "theorem-3");
}

static DecyclingCertificate candidate_cn2(int n) {
    const auto spec = make_family(CnPow2{n});
    std::vector<Vertex> labels;
    // Every third label, then the last one (for n = 0 mod 3 the multiple n - 3 is the last
    // of the run; for n = 2 mod 3 the run ends at n - 2).
    for (int v = 0; v <= n - 1; v += 3)
        labels.push_back(v);
    if (labels.back() != n - 1)
        labels.push_back(n - 1);
    return candidate(spec, from_labels(n, labels), "theorem-4");
}

static DecyclingCertificate candidate_cn3(int n) {
    const auto spec = make_family(CnPow3{n});
    std::vector<Vertex> labels{0, 1, 2};
    if (n % 2 == 0) {
        for (int v = 4; v <= n - 2; v += 2)
            labels.push_back(v);
    } else {
        // Pairs (4j+1, 4j+2) ending at n - 3 for n = 1 mod 4; pairs (4j, 4j+1) ending at
        // n - 2 for n = 3 mod 4.
        const int offset = n % 4 == 1 ? 1 : 0;
        const int last = n % 4 == 1 ? n - 3 : n - 2;
        for (int j = 1; 4 * j + offset + 1 <= last; ++j) {
            labels.push_back(4 * j + offset);
            labels.push_back(4 * j + offset + 1);
        }
    }
    return candidate(spec, from_labels(n, labels), "theorem-5");
}

DecyclingCertificate construct_candidate(const FamilySpec& spec) {
    const int n = spec.n();
    if (std::holds_alternative<C3xCn>(spec.value()))
        return candidate_c3xn(n);
    if (std::holds_alternative<C4xCn>(spec.value()))
        return candidate_c4xn(n);
    if (std::holds_alternative<CnPow2>(spec.value()))
        return candidate_cn2(n);
    if (std::holds_alternative<CnPow3>(spec.value()))
        return candidate_cn3(n);
    throw NotCovered("no construction for " + spec.to_string());
}

DecyclingCertificate construct(const FamilySpec& spec) { return certify(construct_candidate(spec)); }

DecyclingCertificate decycle_c3xn(int n) { return certify(candidate_c3xn(n)); }
DecyclingCertificate decycle_c4xn(int n) { return certify(candidate_c4xn(n)); }
DecyclingCertificate decycle_cn2(int n) { return certify(candidate_cn2(n)); }
DecyclingCertificate decycle_cn3(int n) { return certify(candidate_cn3(n)); }

}  // namespace decycle
