#pragma once

#include <string>
#include <vector>

#include "decycle/certificate.hpp"
#include "decycle/gadget.hpp"
#include "decycle/graph.hpp"
#include "decycle/oracle.hpp"

namespace decycle {

/// Closed-form decycling number. Throws NotCovered for CnPowM.
int nabla_formula(const FamilySpec& spec);

/// Human-readable tag naming the closed form and the residue class it applies to.
std::string nabla_source(const FamilySpec& spec);

/// One deleted vertex per column of C3 x Cn with no two cyclically adjacent columns
/// sharing a row: rows 0,1,0,1,... and, for odd n, a final row 2.
VertexSet c3xn_row_pattern(int n);

/// Row pattern plus the smallest vertex of the unique residual cycle: n + 1 vertices.
/// Throws ConstructionInvariantViolated if the row pattern does not leave a unicyclic
/// residual.
DecyclingCertificate decycle_c3xn(int n);

/// ceil(3n/2) vertices: the stored C4 x C4 / C4 x C5 base with floor(n/2) - 2 gadget
/// copies appended.
DecyclingCertificate decycle_c4xn(int n);

DecyclingCertificate decycle_cn2(int n);
DecyclingCertificate decycle_cn3(int n);

/// Dispatches on the family and verifies. Throws NotCovered for CnPowM.
DecyclingCertificate construct(const FamilySpec& spec);

/// The set the family's construction produces, with status unverified.
DecyclingCertificate construct_candidate(const FamilySpec& spec);

/// Minimum decycling sets of C4 x C4 (6 vertices) and C4 x C5 (8 vertices) as first
/// returned by the exact solver, and the gadget discover_gadget derives from them.
std::vector<TorusCoord> stored_c4_base(int cols);
const CylinderGadget& stored_gadget();

/// The C4 x Cn ingredients recomputed from scratch: exact minimum sets of C4 x C4 and
/// C4 x C5, and the gadget discover_gadget finds for them.
struct C4Derivation {
    DecyclingCertificate base_even;
    DecyclingCertificate base_odd;
    CylinderGadget gadget;
};

C4Derivation derive_c4_construction(const SolverConfig& cfg = {});

}  // namespace decycle
