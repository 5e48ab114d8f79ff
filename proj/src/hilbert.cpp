#include "dioph/hilbert.hpp"

#include <algorithm>

namespace dioph {

namespace {

bool dominates(const LatticePoint& a, const LatticePoint& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true; // a <= b componentwise
}

} // namespace

std::vector<LatticePoint> HilbertBasis::all() const {
    std::vector<LatticePoint> out = rays;
    out.insert(out.end(), extras.begin(), extras.end());
    std::sort(out.begin(), out.end());
    return out;
}

HilbertBasis hilbert_basis(const EquationSpec& eq, i64 guard) {
    const AperyTable ap = apery_box(eq, guard);

    HilbertBasis hb;
    hb.spec = eq;
    hb.rays = rays(eq);

    // Atoms other than the rays are exactly the componentwise-minimal
    // nonzero Apery elements: the monoid is full, so divisibility inside it
    // agrees with the componentwise order on points.
    for (const auto& a : ap.elements) {
        if (std::all_of(a.begin(), a.end(), [](i64 v) { return v == 0; })) continue;
        bool minimal = true;
        for (const auto& b : ap.elements) {
            if (&b == &a || std::all_of(b.begin(), b.end(), [](i64 v) { return v == 0; }))
                continue;
            if (b != a && dominates(b, a)) {
                minimal = false;
                break;
            }
        }
        if (minimal) hb.extras.push_back(a);
    }
    // ap.elements is lex sorted, so extras already are
    return hb;
}

} // namespace dioph
