#pragma once

#include <vector>

#include "dioph/abelian_group.hpp"
#include "dioph/apery.hpp"
#include "dioph/equation.hpp"
#include "dioph/hilbert.hpp"

namespace dioph {

/// Divisor-theory embedding evaluated at x in M:
///   phi(x)_i = ell_i * x_i / w_i = ell_i * lambda(q_i, x),
/// integral because ell_i clears every lambda denominator over the Apery
/// set (and hence over M).  `ells` must come from ell_all for the same
/// equation.
std::vector<i64> phi(const EquationSpec& eq, const std::vector<i64>& ells,
                     const LatticePoint& x);

/// Class group Cl(M) = Z^(r-1) / <phi(h) : h in the Hilbert basis>.
FiniteAbelianGroup class_group(const EquationSpec& eq, i64 guard = kDefaultGuard);

/// Inner class group phi(G(M)) / phi(G(F)), where G(M) is the difference
/// group of M and F the free monoid on the rays.  Computed by expressing
/// the basis {ell_i e_i} of phi(G(F)) in a lattice basis of phi(G(M)) and
/// reading off invariant factors.  Isomorphic to (Ap, (+)).
FiniteAbelianGroup inner_class_group(const EquationSpec& eq, i64 guard = kDefaultGuard);

/// The identity prod_i ell_i = |Cl(M)| * |inner class group|.
struct ProductIdentityReport {
    i64 lhs = 1;  // prod ell_i
    i64 rhs = 1;  // |Cl| * |inCl|
    bool holds = false;

    friend bool operator==(const ProductIdentityReport&, const ProductIdentityReport&) = default;
};

ProductIdentityReport verify_product_identity(const EquationSpec& eq, i64 guard = kDefaultGuard);

/// For r = 3 both class groups are cyclic of order c / (gcd(a,c)*gcd(b,c)).
/// Takes the equation entries directly; a, b must lie in [1, c-1] and
/// gcd(a, b, c) must be 1.
FiniteAbelianGroup two_dim_closed_form(i64 a, i64 b, i64 c);

} // namespace dioph
