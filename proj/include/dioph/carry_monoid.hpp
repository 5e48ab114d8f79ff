#pragma once

#include <string>
#include <vector>

#include "dioph/abelian_group.hpp"
#include "dioph/apery.hpp"
#include "dioph/equation.hpp"

namespace dioph {

/// Abstract model of M as a carry monoid: a finite abelian group G given by
/// invariant factors, a count of rays, and the full carry table
/// I : G x G -> N^ray_count.  The monoid is G x Z^ray_count with
///   (a, f) + (b, g) = (a +_G b, f + g + I(a, b)).
///
/// Group elements are mixed-radix tuples over the invariant factors (the
/// trivial group has the single empty tuple); element indices enumerate the
/// tuples in lex order.
struct CarryMonoidSpec {
    FiniteAbelianGroup group;
    int ray_count = 0;
    std::vector<CarryVector> table; // |G|^2 entries, index g * |G| + h

    i64 order() const { return group.order(); }

    std::vector<i64> element_at(i64 index) const;
    i64 index_of(const std::vector<i64>& g) const;

    std::vector<i64> group_add(const std::vector<i64>& g, const std::vector<i64>& h) const;
    std::vector<i64> group_negate(const std::vector<i64>& g) const;

    const CarryVector& carry_at(i64 gi, i64 hi) const {
        return table[static_cast<size_t>(gi) * order() + hi];
    }

    friend bool operator==(const CarryMonoidSpec&, const CarryMonoidSpec&) = default;
};

/// Element (g, f) of the carry monoid; f may have negative entries when the
/// element lives in the difference group rather than the monoid itself.
struct CarryElement {
    std::vector<i64> g;
    std::vector<i64> f;

    friend bool operator==(const CarryElement&, const CarryElement&) = default;
};

CarryElement carry_add(const CarryMonoidSpec& spec, const CarryElement& x, const CarryElement& y);

/// Structure-theorem obligations on a carry table:
///   1. symmetry                   I(a,b) = I(b,a)
///   2. normalization              I(a,0) = 0
///   3. cocycle                    I(a,b) + I(a(+)b, c) = I(b,c) + I(a, b(+)c)
///   4. inverse carries            I(a,-a) is neither 0 nor a unit vector, a != 0
///   5. root closure (bounded)     sum_{i<n} I(a, ia) + n*f >= 0 forces f >= 0
/// Axioms 1-4 are checked exhaustively; axiom 5 over n <= depth_bound and
/// f in [-coord_bound, coord_bound]^ray_count.  The first counterexample in
/// lex scan order is reported.
struct AxiomReport {
    struct Entry {
        int axiom = 0;
        bool passed = false;
        std::string counterexample; // empty when passed
    };
    std::vector<Entry> entries;

    bool all_passed() const;
};

AxiomReport check_axioms(const CarryMonoidSpec& spec, i64 depth_bound, i64 coord_bound);

/// The carry monoid of M itself: G = (Ap, (+)) in invariant-factor
/// coordinates, I transported through an explicit isomorphism.
/// apery_by_index[k] is the Apery element corresponding to group index k.
struct CanonicalCarrySpec {
    CarryMonoidSpec spec;
    std::vector<LatticePoint> apery_by_index;
};

CanonicalCarrySpec canonical_spec(const EquationSpec& eq, i64 guard = kDefaultGuard);

/// Checks that psi(g, f) = apery(g) + sum f_i q_i is an isomorphism onto M
/// in the bounded window f in [0, coord_bound]^dim: additivity of psi on
/// all pairs, injectivity, and surjectivity onto M intersected with the box
/// prod [0, (coord_bound+1) * w_i).
bool verify_isomorphism(const EquationSpec& eq, const CanonicalCarrySpec& canonical,
                        i64 coord_bound, i64 guard = kDefaultGuard);

/// Lossless JSON round-trip: {"invariant_factors", "ray_count", "table"},
/// table entries {"g", "h", "carry"} in index order.
std::string carry_spec_to_json(const CarryMonoidSpec& spec, int indent = -1);
CarryMonoidSpec carry_spec_from_json(const std::string& text);

} // namespace dioph
