#include "dioph/abelian_group.hpp"

#include <algorithm>

#include "dioph/error.hpp"
#include "dioph/matrix.hpp"
#include "dioph/smith.hpp"

namespace dioph {

FiniteAbelianGroup FiniteAbelianGroup::from_factors(std::vector<i64> factors) {
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) fail(ErrorCode::BadInput, "invariant factors must be at least 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            fail(ErrorCode::BadInput, "invariant factors must form a divisibility chain");
    }
    return FiniteAbelianGroup{std::move(factors)};
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(i64 n) {
    if (n < 1) fail(ErrorCode::BadInput, "cyclic group order must be positive");
    if (n == 1) return trivial();
    return FiniteAbelianGroup{{n}};
}

i64 FiniteAbelianGroup::order() const {
    i64 o = 1;
    for (i64 d : invariant_factors) o = checked_mul(o, d);
    return o;
}

i64 FiniteAbelianGroup::exponent() const {
    return invariant_factors.empty() ? 1 : invariant_factors.back();
}

std::string FiniteAbelianGroup::to_string() const {
    if (invariant_factors.empty()) return "trivial";
    std::string s;
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i > 0) s += " x ";
        s += "Z_" + std::to_string(invariant_factors[i]);
    }
    return s;
}

FiniteAbelianGroup group_from_quotient(int ambient_rank,
                                       const std::vector<std::vector<i64>>& gens) {
    if (ambient_rank < 0) fail(ErrorCode::BadInput, "negative ambient rank");
    if (ambient_rank == 0) return FiniteAbelianGroup::trivial();
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != ambient_rank)
            fail(ErrorCode::BadInput, "generator length does not match ambient rank");
    if (static_cast<int>(gens.size()) < ambient_rank)
        fail(ErrorCode::InfiniteQuotient, "fewer generators than the ambient rank");

    const auto diag = smith_normal_form(IntMatrix::from_rows(gens));
    std::vector<i64> factors;
    int rank = 0;
    for (i64 d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) factors.push_back(d);
    }
    if (rank < ambient_rank)
        fail(ErrorCode::InfiniteQuotient, "generators span a sublattice of rank " +
                                              std::to_string(rank) + " inside rank " +
                                              std::to_string(ambient_rank));
    return FiniteAbelianGroup::from_factors(std::move(factors));
}

} // namespace dioph
