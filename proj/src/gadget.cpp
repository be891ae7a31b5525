#include "decycle/gadget.hpp"

#include <algorithm>

#include "decycle/errors.hpp"
#include "decycle/verifier.hpp"

namespace decycle {

namespace {

std::vector<TorusCoord> coords_of(const DecyclingCertificate& cert) {
    std::vector<TorusCoord> out;
    for (Vertex v : cert.set.members())
        out.push_back(torus_coord(v, cert.family.n()));
    return out;
}

void require_base(const DecyclingCertificate& cert, int cols) {
    if (cert.family != make_family(C4xCn{cols}) || cert.status != CertificateStatus::verified)
        throw InvalidInput("gadget discovery needs a verified C4 x C" + std::to_string(cols) + " certificate");
}

bool decycles(int cols, std::span<const TorusCoord> cells) {
    VertexSet s(4 * cols);
    for (auto c : cells)
        s.insert(torus_label(c, cols));
    return residual(realize(make_family(C4xCn{cols})), s).is_forest;
}

}  // namespace

CylinderGadget CylinderGadget::from_pattern(std::array<TorusCoord, 3> cells) {
    std::ranges::sort(cells);
    CylinderGadget g{cells, {}, {}};
    g.left_open.fill(true);
    g.right_open.fill(true);
    for (auto c : cells)
        (c.col == 0 ? g.left_open : g.right_open)[static_cast<std::size_t>(c.row)] = false;
    return g;
}

std::vector<TorusCoord> insert_gadget(std::span<const TorusCoord> base, int base_cols, const CylinderGadget& gadget,
                                      int copies) {
    if (copies < 0)
        throw InvalidParameter("negative gadget copy count");
    std::vector<TorusCoord> out(base.begin(), base.end());
    for (int k = 0; k < copies; ++k)
        for (auto c : gadget.pattern)
            out.push_back({c.row, base_cols + CylinderGadget::kWidth * k + c.col});
    std::ranges::sort(out);
    return out;
}

CylinderGadget discover_gadget(const DecyclingCertificate& base_even, const DecyclingCertificate& base_odd) {
    require_base(base_even, 4);
    require_base(base_odd, 5);
    const auto even = coords_of(base_even);
    const auto odd = coords_of(base_odd);

    std::vector<TorusCoord> slab;
    for (int r = 0; r < CylinderGadget::kRows; ++r)
        for (int c = 0; c < CylinderGadget::kWidth; ++c)
            slab.push_back({r, c});

    const int cells = static_cast<int>(slab.size());
    for (int a = 0; a < cells; ++a) {
        for (int b = a + 1; b < cells; ++b) {
            for (int c = b + 1; c < cells; ++c) {
                for (int rot = 0; rot < CylinderGadget::kRows; ++rot) {
                    std::array<TorusCoord, 3> pattern{slab[a], slab[b], slab[c]};
                    for (auto& p : pattern)
                        p.row = (p.row + rot) % CylinderGadget::kRows;
                    auto gadget = CylinderGadget::from_pattern(pattern);
                    bool survives = true;
                    for (int n = 6; n <= 12 && survives; ++n) {
                        const int base_cols = n % 2 == 0 ? 4 : 5;
                        const auto& base = n % 2 == 0 ? even : odd;
                        survives = decycles(n, insert_gadget(base, base_cols, gadget, (n - base_cols) / 2));
                    }
                    if (survives)
                        return gadget;
                }
            }
        }
    }
    throw ConstructionImpossible("no 2-column gadget with three deleted vertices extends both bases");
}

}  // namespace decycle
