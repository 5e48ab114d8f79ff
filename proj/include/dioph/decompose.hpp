#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dioph/apery.hpp"
#include "dioph/equation.hpp"

namespace dioph {

/// The unique splitting x = apery_part + sum ray_mults_i * q_i of a point
/// of M.  Uniqueness is coordinatewise: ray_mults_i = floor(x_i / w_i).
struct Decomposition {
    LatticePoint apery_part;
    std::vector<i64> ray_mults;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(const EquationSpec& eq, const LatticePoint& x);

/// Elliott-style description of M when it has at most two non-ray atoms
/// u and v: the admissible exponent pairs
///   { (m, n) : m*u_i + n*v_i < w_i for every i }
/// biject with the Apery set via (m, n) -> m*u + n*v, so every x in M has
/// a unique representation  x = sum l_i q_i + m*u + n*v  with (m, n)
/// admissible.  Absent atoms pin the corresponding exponent to 0.
struct ElliottScheme {
    EquationSpec spec;
    std::optional<LatticePoint> u; // lex-smaller atom, if any
    std::optional<LatticePoint> v; // lex-larger atom, if any
    std::vector<std::pair<i64, i64>> admissible; // lex order, downward closed

    friend bool operator==(const ElliottScheme&, const ElliottScheme&) = default;
};

/// Throws TooManyExtras when M has three or more non-ray atoms.
ElliottScheme elliott_scheme(const EquationSpec& eq, i64 guard = kDefaultGuard);

struct ElliottRepresentation {
    std::vector<i64> ray_mults;
    i64 m = 0;
    i64 n = 0;

    friend bool operator==(const ElliottRepresentation&, const ElliottRepresentation&) = default;
};

ElliottRepresentation elliott_decompose(const ElliottScheme& scheme, const LatticePoint& x);

} // namespace dioph
