#pragma once

#include <string>

#include "decycle/graph.hpp"
#include "decycle/vertex_set.hpp"

namespace decycle {

enum class CertificateStatus { unverified, verified, failed };

std::string to_string(CertificateStatus s);
/// Throws InvalidInput for anything other than the three status names.
CertificateStatus status_from_string(const std::string& s);

/// A vertex set together with what it claims about a family member.
///
/// `cardinality` is a claim, kept separately from `set` so that a document whose
/// claim disagrees with its contents can be represented and rejected.
/// When `status` is verified the residual graph is a forest, `cardinality == set.size()`
/// and `lower_bound <= cardinality`; if in addition `lower_bound == cardinality` the
/// certificate determines the decycling number exactly.
struct DecyclingCertificate {
    FamilySpec family;
    VertexSet set;
    int cardinality = 0;
    int lower_bound = 0;
    std::string method;
    CertificateStatus status = CertificateStatus::unverified;

    bool is_tight() const noexcept { return status == CertificateStatus::verified && lower_bound == cardinality; }

    friend bool operator==(const DecyclingCertificate&, const DecyclingCertificate&) = default;
};

}  // namespace decycle
