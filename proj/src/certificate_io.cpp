#include "decycle/certificate_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "decycle/errors.hpp"

namespace decycle {

using nlohmann::json;

std::string serialize_certificate(const DecyclingCertificate& cert) {
    json family = {{"tag", cert.family.tag()}, {"n", cert.family.n()}};
    if (std::holds_alternative<CnPowM>(cert.family.value()))
        family["m"] = cert.family.power();

    const auto members = cert.set.members();
    json doc = {
        {"schema_version", kCertificateSchemaVersion},
        {"family", family},
        {"n_vertices", cert.family.n_vertices()},
        {"set", members},
        {"cardinality", cert.cardinality},
        {"lower_bound", cert.lower_bound},
        {"method", cert.method},
        {"status", to_string(cert.status)},
    };
    if (cert.family.is_torus()) {
        json coords = json::array();
        for (Vertex v : members) {
            auto c = torus_coord(v, cert.family.n());
            coords.push_back({c.row, c.col});
        }
        doc["coordinates"] = coords;
    }
    return doc.dump(2) + "\n";
}

DecyclingCertificate parse_certificate(const std::string& text) {
    try {
        const json doc = json::parse(text);
        const auto version = doc.at("schema_version").get<std::string>();
        if (version != kCertificateSchemaVersion)
            throw InvalidInput("unsupported schema_version '" + version + "'");

        const auto& fam = doc.at("family");
        std::vector<int> params{fam.at("n").get<int>()};
        if (fam.contains("m"))
            params.push_back(fam.at("m").get<int>());
        const FamilySpec family = parse_family(fam.at("tag").get<std::string>(), params);

        const int n_vertices = doc.at("n_vertices").get<int>();
        if (n_vertices != family.n_vertices())
            throw InvalidInput("n_vertices " + std::to_string(n_vertices) + " does not match " + family.to_string());

        auto labels = doc.at("set").get<std::vector<int>>();
        std::ranges::sort(labels);
        if (std::ranges::adjacent_find(labels) != labels.end())
            throw InvalidInput("set lists a vertex twice");
        VertexSet set(n_vertices, std::span<const Vertex>(labels));

        if (doc.contains("coordinates")) {
            if (!family.is_torus())
                throw InvalidInput("coordinates given for a non-torus family");
            VertexSet from_coords(n_vertices);
            for (const auto& rc : doc.at("coordinates")) {
                TorusCoord c{rc.at(0).get<int>(), rc.at(1).get<int>()};
                if (c.row < 0 || c.row >= family.torus_rows() || c.col < 0 || c.col >= family.n())
                    throw InvalidInput("coordinate out of range");
                from_coords.insert(torus_label(c, family.n()));
            }
            if (from_coords != set)
                throw InvalidInput("coordinates disagree with set");
        }

        return DecyclingCertificate{family,
                                    std::move(set),
                                    doc.at("cardinality").get<int>(),
                                    doc.at("lower_bound").get<int>(),
                                    doc.at("method").get<std::string>(),
                                    status_from_string(doc.at("status").get<std::string>())};
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace decycle
