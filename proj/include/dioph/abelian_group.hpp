#pragma once

#include <string>
#include <vector>

#include "dioph/checked.hpp"

namespace dioph {

/// Isomorphism type of a finite abelian group, as its invariant factor
/// decomposition Z_{d_1} x ... x Z_{d_k} with 2 <= d_1 | d_2 | ... | d_k.
/// The trivial group is the empty factor list.  Equality of the factor
/// lists is equality of isomorphism types.
struct FiniteAbelianGroup {
    std::vector<i64> invariant_factors;

    /// Validates the divisibility chain and the d_i >= 2 convention.
    static FiniteAbelianGroup from_factors(std::vector<i64> factors);

    /// Z_n for n >= 2, the trivial group for n = 1.
    static FiniteAbelianGroup cyclic(i64 n);

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup{}; }

    i64 order() const;
    bool is_trivial() const { return invariant_factors.empty(); }

    /// Largest element order (1 for the trivial group).
    i64 exponent() const;

    std::string to_string() const; // "trivial", "Z_7", "Z_2 x Z_4", ...

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// Isomorphism type of Z^ambient_rank / <gens>, where each generator is a
/// row vector of length ambient_rank.  Throws InfiniteQuotient when the
/// generated sublattice is not of full rank.
FiniteAbelianGroup group_from_quotient(int ambient_rank,
                                       const std::vector<std::vector<i64>>& gens);

} // namespace dioph
