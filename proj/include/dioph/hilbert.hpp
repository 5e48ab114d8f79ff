#pragma once

#include <vector>

#include "dioph/apery.hpp"
#include "dioph/equation.hpp"

namespace dioph {

/// Minimal generating set of M: the rays plus the componentwise-minimal
/// nonzero Apery elements.  Every atom that is not a ray lies inside the
/// Apery box, because x_i >= w_i makes q_i split off.
struct HilbertBasis {
    EquationSpec spec;
    std::vector<LatticePoint> rays;   // in ray order
    std::vector<LatticePoint> extras; // lex order

    /// Rays and extras merged into one lex-sorted list.
    std::vector<LatticePoint> all() const;

    size_t size() const { return rays.size() + extras.size(); }
};

HilbertBasis hilbert_basis(const EquationSpec& eq, i64 guard = kDefaultGuard);

} // namespace dioph
