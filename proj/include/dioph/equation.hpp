#pragma once

#include <string>
#include <vector>

#include "dioph/checked.hpp"
#include "dioph/rational.hpp"

namespace dioph {

/// Point of the ambient lattice N^(r-1); lexicographic order is the vector
/// order, so sorted containers of points are automatically in lex order.
using LatticePoint = std::vector<i64>;

std::string point_to_string(const LatticePoint& x);

/// A homogeneous congruence a_1 x_1 + ... + a_{r-1} x_{r-1} = 0 (mod a_r)
/// in normalized form.  The monoid it cuts out of N^(r-1) is
///   M = { x in N^(r-1) : sum a_i x_i = 0 (mod modulus) }.
///
/// Normalization divides the raw entries by their common gcd and reduces
/// each coefficient modulo the modulus, which changes neither M nor any
/// invariant computed from it.  Afterwards gcd(a_1,...,a_{r-1}, modulus) = 1.
struct EquationSpec {
    std::vector<i64> raw;    // entries as given, for echoing back
    std::vector<i64> coeffs; // a_1,...,a_{r-1}, each in [0, modulus)
    i64 modulus = 1;         // a_r after normalization
    std::vector<i64> gcds;   // g_i = gcd(a_i, modulus)
    std::vector<i64> widths; // w_i = modulus / g_i, the height of ray i

    int dim() const { return static_cast<int>(coeffs.size()); } // r - 1
    int r() const { return dim() + 1; }

    friend bool operator==(const EquationSpec&, const EquationSpec&) = default;
};

/// Builds an EquationSpec from r >= 2 positive integers a_1,...,a_r.
EquationSpec normalize_equation(const std::vector<i64>& raw);

/// Membership test for M.  Points with a negative entry are simply not in
/// the monoid (no error), so callers may probe differences of solutions.
bool contains(const EquationSpec& eq, const LatticePoint& x);

/// The extremal rays q_i = w_i e_i of M, i = 0..dim-1.  M intersected with
/// the i-th axis is exactly N q_i.
std::vector<LatticePoint> rays(const EquationSpec& eq);

/// Lifts x in M to the solution (x, x_r) of the inhomogeneous system
/// sum a_i x_i = modulus * x_r; inverse of dropping the last coordinate.
std::vector<i64> lift(const EquationSpec& eq, const LatticePoint& x);

/// Fractional coordinate of x along ray i: lambda(q_i, x) = x_i / w_i,
/// reduced.  x must lie in M.
Rational cale_lambda(const EquationSpec& eq, int ray_index, const LatticePoint& x);

/// nu(x) = max_i lambda(q_i, x).
Rational nu(const EquationSpec& eq, const LatticePoint& x);

/// Cale data of x in M: the least n >= 1 with n*x in the free monoid
/// generated by the rays, together with the multiplicities n*x_i/w_i.
struct CaleData {
    i64 n = 1;
    std::vector<i64> ray_coords;

    friend bool operator==(const CaleData&, const CaleData&) = default;
};

CaleData cale_data(const EquationSpec& eq, const LatticePoint& x);

} // namespace dioph
