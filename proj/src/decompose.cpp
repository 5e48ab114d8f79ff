#include "dioph/decompose.hpp"

#include <algorithm>

#include "dioph/error.hpp"
#include "dioph/hilbert.hpp"

namespace dioph {

Decomposition decompose(const EquationSpec& eq, const LatticePoint& x) {
    if (!contains(eq, x))
        fail(ErrorCode::NotInMonoid, point_to_string(x) + " is not a solution");
    Decomposition out;
    out.apery_part.resize(x.size());
    out.ray_mults.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        out.ray_mults[i] = x[i] / eq.widths[i];
        out.apery_part[i] = x[i] % eq.widths[i];
    }
    return out;
}

ElliottScheme elliott_scheme(const EquationSpec& eq, i64 guard) {
    const HilbertBasis hb = hilbert_basis(eq, guard);
    if (hb.extras.size() > 2) {
        std::string msg = "monoid has " + std::to_string(hb.extras.size()) +
                          " non-ray atoms:";
        for (const auto& e : hb.extras) msg += " " + point_to_string(e);
        fail(ErrorCode::TooManyExtras, msg);
    }

    ElliottScheme scheme;
    scheme.spec = eq;
    if (!hb.extras.empty()) scheme.u = hb.extras[0];
    if (hb.extras.size() > 1) scheme.v = hb.extras[1];

    const auto& w = eq.widths;
    const auto fits = [&](i64 m, i64 n) {
        for (int i = 0; i < eq.dim(); ++i) {
            i64 s = 0;
            if (scheme.u) s = checked_mul(m, (*scheme.u)[static_cast<size_t>(i)]);
            if (scheme.v)
                s = checked_add(s, checked_mul(n, (*scheme.v)[static_cast<size_t>(i)]));
            if (s >= w[static_cast<size_t>(i)]) return false;
        }
        return true;
    };

    if (!scheme.u) {
        scheme.admissible.emplace_back(0, 0);
    } else {
        for (i64 m = 0; fits(m, 0); ++m) {
            scheme.admissible.emplace_back(m, 0);
            if (scheme.v)
                for (i64 n = 1; fits(m, n); ++n) scheme.admissible.emplace_back(m, n);
        }
        std::sort(scheme.admissible.begin(), scheme.admissible.end());
    }

    // (m,n) -> m*u + n*v lands in the Apery box by construction and must
    // exhaust it; with at most two extras this is guaranteed.
    const size_t ap_size = apery_box(eq, guard).size();
    if (scheme.admissible.size() != ap_size)
        fail(ErrorCode::SchemeInconsistent,
             "admissible set has " + std::to_string(scheme.admissible.size()) +
                 " pairs but the Apery set has " + std::to_string(ap_size) + " elements");
    return scheme;
}

ElliottRepresentation elliott_decompose(const ElliottScheme& scheme, const LatticePoint& x) {
    const Decomposition d = decompose(scheme.spec, x);

    const int dim = scheme.spec.dim();
    for (const auto& [m, n] : scheme.admissible) {
        bool match = true;
        for (int i = 0; i < dim && match; ++i) {
            i64 s = 0;
            if (scheme.u) s = checked_mul(m, (*scheme.u)[static_cast<size_t>(i)]);
            if (scheme.v)
                s = checked_add(s, checked_mul(n, (*scheme.v)[static_cast<size_t>(i)]));
            match = (s == d.apery_part[static_cast<size_t>(i)]);
        }
        if (match) return ElliottRepresentation{d.ray_mults, m, n};
    }
    fail(ErrorCode::SchemeInconsistent,
         "no admissible pair represents the Apery part of " + point_to_string(x));
}

} // namespace dioph
