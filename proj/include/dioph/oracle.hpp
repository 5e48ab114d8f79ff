#pragma once

#include <vector>

#include "dioph/abelian_group.hpp"
#include "dioph/apery.hpp"
#include "dioph/equation.hpp"

namespace dioph {

// Brute-force reference implementations.  Everything here recomputes from
// definitions by exhaustive scan and deliberately shares nothing with the
// closed-form code paths beyond contains() and the exact arithmetic layer;
// agreement between the two is what the test suite is built on.

/// All points of M with x_i < upper_i, in lex order.  The box volume must
/// not exceed the guard.
std::vector<LatticePoint> enumerate_solutions(const EquationSpec& eq,
                                              const std::vector<i64>& upper,
                                              i64 guard = kDefaultGuard);

/// Apery set from the definition: x in the w-box with x in M and
/// x - q_i not in M for every ray.
std::vector<LatticePoint> brute_apery(const EquationSpec& eq, i64 guard = kDefaultGuard);

/// Componentwise-minimal elements of a finite set of points, by pairwise
/// dominance scan.  Input need not be sorted; output is lex-sorted.
std::vector<LatticePoint> brute_minimal(const std::vector<LatticePoint>& points);

/// Abelian group presented by a full Cayley table: op[i*n + j] is the index
/// of element i composed with element j.
struct CayleyTable {
    size_t n = 0;
    size_t identity = 0;
    std::vector<size_t> op;

    size_t at(size_t i, size_t j) const { return op[i * n + j]; }
};

/// Validates the table (identity, commutativity, associativity, inverses;
/// throws NotAGroup with a witness otherwise), then recovers the invariant
/// factors from the relation lattice of a discovered generating set.
FiniteAbelianGroup brute_group_structure(const CayleyTable& table);

} // namespace dioph
