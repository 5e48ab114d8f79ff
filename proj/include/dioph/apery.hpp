#pragma once

#include <optional>
#include <vector>

#include "dioph/equation.hpp"

namespace dioph {

/// Default ceiling on the number of lattice points any enumeration is
/// allowed to visit before it gives up with BoxTooLarge.
inline constexpr i64 kDefaultGuard = 10'000'000;

/// The Apery set of M with respect to its rays:
///   Ap = { x in M : x - q_i not in M for every ray q_i },
/// which coincides with M intersected with the box [0,w_1) x ... x [0,w_dim).
/// Elements are stored in lex order.
struct AperyTable {
    EquationSpec spec;
    std::vector<LatticePoint> elements;

    size_t size() const { return elements.size(); }
    const LatticePoint& operator[](size_t i) const { return elements[i]; }

    /// Position of x in `elements`, or nullopt.  Binary search.
    std::optional<size_t> index_of(const LatticePoint& x) const;
};

/// Multiplicity vector over the rays (one entry per ray).
using CarryVector = std::vector<i64>;

/// Apery set by direct box enumeration.  Works for every r >= 2; the box
/// volume prod w_i must not exceed `guard`.
AperyTable apery_box(const EquationSpec& eq, i64 guard = kDefaultGuard);

/// Apery set for r = 3 without enumeration: with coefficients (a, b) and
/// modulus c, writing ga = gcd(a,c), gb = gcd(b,c) and d for the inverse of
/// b/gb modulo c/gb, the set is
///   { (gb*i, (-i*d*a) mod (c/gb)) : 0 <= i < c/(ga*gb) }.
/// Requires both reduced coefficients nonzero.
AperyTable apery_closed_form(const EquationSpec& eq, i64 guard = kDefaultGuard);

/// x in M split against the box: x_i = carries_i * w_i + apery_i with
/// 0 <= apery_i < w_i.  The apery part is always an element of the table.
struct ApReduction {
    LatticePoint apery;
    CarryVector carries;

    friend bool operator==(const ApReduction&, const ApReduction&) = default;
};

ApReduction reduce(const AperyTable& table, const LatticePoint& x);

/// Group operation on the Apery set: a (+) b = apery part of a + b.
/// (Ap, (+)) is a finite abelian group with identity 0.
LatticePoint oplus(const AperyTable& table, const LatticePoint& a, const LatticePoint& b);

/// Carry of the addition a + b: I(a,b)_i = floor((a_i + b_i) / w_i), the
/// ray multiplicities lost when reducing a + b to a (+) b.  Entries are 0
/// or 1 for a, b in the table.
CarryVector carry(const AperyTable& table, const LatticePoint& a, const LatticePoint& b);

/// n-fold (+)-multiple of a: apery part of the scalar multiple n*a.
LatticePoint bar_multiple(const AperyTable& table, i64 n, const LatticePoint& a);

/// Order of ray i over the Apery set: lcm over a in Ap of the reduced
/// denominator of lambda(q_i, a).  ell_all computes every ray at once from
/// a single enumeration.
i64 ell(const EquationSpec& eq, int ray_index, i64 guard = kDefaultGuard);
std::vector<i64> ell_all(const EquationSpec& eq, i64 guard = kDefaultGuard);
std::vector<i64> ell_all(const AperyTable& table);

} // namespace dioph
