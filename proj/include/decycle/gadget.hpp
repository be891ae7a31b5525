#pragma once

#include <array>
#include <vector>

#include "decycle/certificate.hpp"
#include "decycle/graph.hpp"

namespace decycle {

/// Two adjacent columns of C4 x Cn with three deleted vertices. Appending copies after the
/// last column of a C4 x C4 or C4 x C5 decycling set extends it two columns at a time.
struct CylinderGadget {
    static constexpr int kWidth = 2;
    static constexpr int kRows = 4;

    /// Deleted cells as (row, local column) with local column in {0, 1}, sorted.
    std::array<TorusCoord, 3> pattern;
    /// left_open[r]: row r of the left column survives, so a residual edge may cross the
    /// left seam there. right_open likewise for the right column.
    std::array<bool, kRows> left_open{};
    std::array<bool, kRows> right_open{};

    static CylinderGadget from_pattern(std::array<TorusCoord, 3> cells);

    friend bool operator==(const CylinderGadget&, const CylinderGadget&) = default;
};

/// Places `copies` gadgets after the last column of `base`, a set of C4 x C_base_cols, and
/// returns the resulting set of C4 x C_{base_cols + 2 copies}.
std::vector<TorusCoord> insert_gadget(std::span<const TorusCoord> base, int base_cols, const CylinderGadget& gadget,
                                      int copies);

/// Exhaustive search over the 56 three-cell patterns of a 2 x 4 slab, each under the four
/// row rotations, for a gadget whose chained insertion keeps both bases decycling for every
/// n in [6, 12]. Both bases must be verified C4 x C4 and C4 x C5 certificates; otherwise
/// throws InvalidInput. Throws ConstructionImpossible when no candidate survives.
CylinderGadget discover_gadget(const DecyclingCertificate& base_even, const DecyclingCertificate& base_odd);

}  // namespace decycle
