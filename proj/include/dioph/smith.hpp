#pragma once

#include <vector>

#include "dioph/checked.hpp"
#include "dioph/matrix.hpp"

namespace dioph {

/// Inverse of a modulo m, as the least positive representative in [1, m-1].
/// m >= 2; throws NoInverse when gcd(a, m) != 1.
i64 mod_inverse(i64 a, i64 m);

/// Diagonal of the Smith normal form of m: nonnegative entries d_1,...,d_k
/// with k = min(rows, cols) and d_i | d_{i+1} wherever both are nonzero.
std::vector<i64> smith_normal_form(const IntMatrix& m);

/// Smith normal form together with the unimodular transforms:
/// left * m * right is the diagonal matrix carrying `diagonal`.
struct SmithDecomposition {
    std::vector<i64> diagonal;
    IntMatrix left;
    IntMatrix right;
};

SmithDecomposition smith_decompose(IntMatrix m);

} // namespace dioph
