#pragma once

#include <vector>

#include "dioph/apery.hpp"
#include "dioph/equation.hpp"
#include "dioph/oracle.hpp"

namespace dioph::testing {

inline EquationSpec eq(std::initializer_list<i64> raw) {
    return normalize_equation(std::vector<i64>(raw));
}

/// Cayley table of (Ap, (+)), indices into table.elements.
inline CayleyTable oplus_table(const AperyTable& ap) {
    CayleyTable t;
    t.n = ap.size();
    t.identity = *ap.index_of(LatticePoint(ap.spec.dim(), 0));
    t.op.resize(t.n * t.n);
    for (size_t i = 0; i < t.n; ++i)
        for (size_t j = 0; j < t.n; ++j)
            t.op[i * t.n + j] = *ap.index_of(oplus(ap, ap[i], ap[j]));
    return t;
}

/// All (a,b,c) with c in [2,cmax], a,b in [1,c-1], gcd(a,b,c)=1.
inline std::vector<std::vector<i64>> coprime_triples(i64 cmax) {
    std::vector<std::vector<i64>> out;
    for (i64 c = 2; c <= cmax; ++c)
        for (i64 a = 1; a < c; ++a)
            for (i64 b = 1; b < c; ++b)
                if (std::gcd(std::gcd(a, b), c) == 1) out.push_back({a, b, c});
    return out;
}

} // namespace dioph::testing
