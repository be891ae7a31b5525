#pragma once

#include <string>

#include "decycle/certificate.hpp"

namespace decycle {

inline constexpr const char* kCertificateSchemaVersion = "1.0";

/// JSON document for a certificate:
///
///     {"schema_version": "1.0", "family": {"tag": "c4xc", "n": 8}, "n_vertices": 32,
///      "set": [...], "cardinality": 12, "lower_bound": 12, "method": "theorem-3",
///      "status": "verified", "coordinates": [[row, col], ...]}
///
/// "coordinates" is written for the torus families only; "family" carries "m" for powm.
std::string serialize_certificate(const DecyclingCertificate& cert);

/// Inverse of serialize_certificate. Throws InvalidInput on malformed JSON, a missing or
/// mistyped field, an unknown status, a vertex outside the family's graph, or coordinates
/// that disagree with the set; InvalidParameter when the family parameters are out of range.
DecyclingCertificate parse_certificate(const std::string& text);

}  // namespace decycle
