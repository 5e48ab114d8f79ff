#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "dioph/apery.hpp"
#include "dioph/error.hpp"
#include "dioph/oracle.hpp"
#include "helpers.hpp"

using namespace dioph;
using dioph::testing::eq;

namespace {

const std::vector<LatticePoint> kAp457 = {
    {0, 0}, {1, 2}, {2, 4}, {3, 6}, {4, 1}, {5, 3}, {6, 5},
};

} // namespace

TEST_CASE("box enumeration on fixed instances") {
    CHECK(apery_box(eq({4, 5, 7})).elements == kAp457);
    CHECK(apery_box(eq({2, 3, 6})).elements == std::vector<LatticePoint>{{0, 0}});
    CHECK(apery_box(eq({1, 1, 1, 2})).elements ==
          std::vector<LatticePoint>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(apery_box(eq({3, 5})).elements == std::vector<LatticePoint>{{0}});

    // each fixed listing re-derived from the definition
    for (auto raw : {std::vector<i64>{4, 5, 7}, {2, 3, 6}, {1, 1, 1, 2}})
        CHECK(apery_box(normalize_equation(raw)).elements == brute_apery(normalize_equation(raw)));
}

TEST_CASE("box structure invariants") {
    for (auto raw : {std::vector<i64>{4, 5, 7}, {6, 4, 9}, {3, 1, 7}, {1, 1, 1, 2}, {2, 3, 4, 12}}) {
        const EquationSpec m = normalize_equation(raw);
        const AperyTable ap = apery_box(m);
        const std::string label = point_to_string(raw);
        CAPTURE(label);

        CHECK(std::is_sorted(ap.elements.begin(), ap.elements.end()));
        CHECK(ap.index_of(LatticePoint(m.dim(), 0)).has_value());
        i64 volume = 1;
        for (int i = 0; i < m.dim(); ++i) volume *= m.widths[static_cast<size_t>(i)];
        CHECK(volume % static_cast<i64>(ap.size()) == 0);

        // membership in Ap is exactly nu < 1 over the whole box
        const auto box = enumerate_solutions(m, m.widths);
        for (const auto& x : box) {
            const bool in_ap = ap.index_of(x).has_value();
            CHECK(in_ap == (nu(m, x) < Rational(1)));
        }
        CHECK(box.size() == ap.size()); // same set by construction
    }

    // r=3, both coefficients nonzero: no two elements share either coordinate
    const AperyTable ap = apery_box(eq({6, 4, 9}));
    for (size_t i = 0; i < ap.size(); ++i)
        for (size_t j = i + 1; j < ap.size(); ++j) {
            CHECK(ap[i][0] != ap[j][0]);
            CHECK(ap[i][1] != ap[j][1]);
        }
}

TEST_CASE("closed form equals the box on fixed instances") {
    CHECK(apery_closed_form(eq({4, 5, 7})).elements == kAp457);
    CHECK(apery_closed_form(eq({1, 1, 2})).elements ==
          std::vector<LatticePoint>{{0, 0}, {1, 1}});
    CHECK(apery_closed_form(eq({1, 2, 4})).elements ==
          std::vector<LatticePoint>{{0, 0}, {2, 1}});

    CHECK_THROWS_AS(apery_closed_form(eq({1, 1, 1, 2})), Error); // r = 4
    try {
        apery_closed_form(eq({3, 5, 3})); // first coefficient reduces to 0
        FAIL("expected ZeroCoefficient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroCoefficient);
    }
}

TEST_CASE("closed form sweep against box and definition") {
    for (const auto& raw : dioph::testing::coprime_triples(15)) {
        const EquationSpec m = normalize_equation(raw);
        const std::string label = point_to_string(raw);
        CAPTURE(label);
        const auto box = apery_box(m).elements;
        CHECK(apery_closed_form(m).elements == box);
        CHECK(brute_apery(m) == box);
    }
}

TEST_CASE("reduce splits against the box") {
    const AperyTable ap = apery_box(eq({4, 5, 7}));
    CHECK(reduce(ap, {8, 2}) == ApReduction{{1, 2}, {1, 0}});
    CHECK(reduce(ap, {7, 7}) == ApReduction{{0, 0}, {1, 1}});
    for (const auto& a : ap.elements) CHECK(reduce(ap, a) == ApReduction{a, {0, 0}});
    CHECK_THROWS_AS(reduce(ap, {1, 1}), Error);
}

TEST_CASE("oplus, carry and bar multiples") {
    const AperyTable ap = apery_box(eq({4, 5, 7}));

    CHECK(oplus(ap, {1, 2}, {4, 1}) == LatticePoint{5, 3});
    CHECK(oplus(ap, {4, 1}, {4, 1}) == LatticePoint{1, 2});
    CHECK(carry(ap, {4, 1}, {4, 1}) == CarryVector{1, 0});
    CHECK(carry(ap, {1, 2}, {4, 1}) == CarryVector{0, 0});
    CHECK(bar_multiple(ap, 2, {4, 1}) == LatticePoint{1, 2});
    CHECK(bar_multiple(ap, 7, {1, 2}) == LatticePoint{0, 0});

    for (const auto& a : ap.elements) {
        CHECK(oplus(ap, a, {0, 0}) == a);
        CHECK(carry(ap, a, {0, 0}) == CarryVector{0, 0});
        CHECK(bar_multiple(ap, 1, a) == a);
        CHECK(bar_multiple(ap, 0, a) == LatticePoint{0, 0});
    }

    CHECK_THROWS_AS(oplus(ap, {1, 1}, {0, 0}), Error);
    try {
        carry(ap, {0, 0}, {2, 2});
        FAIL("expected NotInApery");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInApery);
    }

    // defining identity a + b = (a (+) b) + sum I_i q_i, all pairs
    for (const auto& a : ap.elements)
        for (const auto& b : ap.elements) {
            const auto s = oplus(ap, a, b);
            const auto f = carry(ap, a, b);
            for (size_t i = 0; i < 2; ++i)
                CHECK(a[i] + b[i] == s[i] + f[i] * ap.spec.widths[i]);
        }
}

TEST_CASE("the Apery set is an abelian group under oplus") {
    for (auto raw : {std::vector<i64>{4, 5, 7}, {6, 4, 9}, {1, 1, 1, 2}, {5, 7, 12}}) {
        const EquationSpec m = normalize_equation(raw);
        const AperyTable ap = apery_box(m);
        const size_t n = ap.size();
        CAPTURE(n);

        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j)
                CHECK(oplus(ap, ap[i], ap[j]) == oplus(ap, ap[j], ap[i]));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    CHECK(oplus(ap, oplus(ap, ap[i], ap[j]), ap[k]) ==
                          oplus(ap, ap[i], oplus(ap, ap[j], ap[k])));

        // inverse of a is the (n(a)-1)-fold bar multiple
        const LatticePoint zero(m.dim(), 0);
        for (const auto& a : ap.elements) {
            if (a == zero) continue;
            const i64 na = cale_data(m, a).n;
            CHECK(oplus(ap, a, bar_multiple(ap, na - 1, a)) == zero);
        }
    }
}

TEST_CASE("carry cocycle and inverse-carry shape") {
    for (auto raw : {std::vector<i64>{4, 5, 7}, {6, 4, 9}, {1, 1, 1, 2}}) {
        const EquationSpec m = normalize_equation(raw);
        const AperyTable ap = apery_box(m);
        const size_t n = ap.size();
        REQUIRE(n <= 50);

        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    const auto lhs_a = carry(ap, ap[i], ap[j]);
                    const auto lhs_b = carry(ap, oplus(ap, ap[i], ap[j]), ap[k]);
                    const auto rhs_a = carry(ap, ap[j], ap[k]);
                    const auto rhs_b = carry(ap, ap[i], oplus(ap, ap[j], ap[k]));
                    for (int t = 0; t < m.dim(); ++t)
                        CHECK(lhs_a[static_cast<size_t>(t)] + lhs_b[static_cast<size_t>(t)] ==
                              rhs_a[static_cast<size_t>(t)] + rhs_b[static_cast<size_t>(t)]);
                }

        // carry of a nonzero element against its inverse moves >= 2 rays' worth
        const LatticePoint zero(m.dim(), 0);
        for (const auto& a : ap.elements) {
            if (a == zero) continue;
            for (const auto& b : ap.elements) {
                if (oplus(ap, a, b) != zero) continue;
                const auto f = carry(ap, a, b);
                i64 total = 0;
                for (i64 v : f) total += v;
                CHECK(total >= 2);
            }
        }

        // summed carries along the bar orbit of a are never n(a) * (a lattice vector)
        for (const auto& a : ap.elements) {
            if (a == zero) continue;
            const i64 na = cale_data(m, a).n;
            CarryVector acc(static_cast<size_t>(m.dim()), 0);
            for (i64 i = 1; i < na; ++i) {
                const auto f = carry(ap, a, bar_multiple(ap, i, a));
                for (size_t t = 0; t < acc.size(); ++t) acc[t] += f[t];
            }
            bool divisible = true;
            for (i64 v : acc) divisible = divisible && (v % na == 0);
            CHECK_FALSE(divisible);
        }
    }
}

TEST_CASE("ray orders ell") {
    const EquationSpec m = eq({4, 5, 7});
    CHECK(ell(m, 0) == 7);
    CHECK(ell(m, 1) == 7);
    CHECK(ell_all(m) == std::vector<i64>{7, 7});
    CHECK(ell_all(eq({2, 3, 6})) == std::vector<i64>{1, 1});
    CHECK(ell_all(eq({1, 1, 1, 2})) == std::vector<i64>{2, 2, 2});

    // ell_i * lambda_i is integral across the monoid, not just the Apery set
    const EquationSpec k = eq({6, 4, 9});
    const auto ells = ell_all(k);
    for (const auto& x : enumerate_solutions(k, {3 * 9, 3 * 9}))
        for (int i = 0; i < k.dim(); ++i) {
            const Rational v =
                Rational(ells[static_cast<size_t>(i)]) * cale_lambda(k, i, x);
            CHECK(v.is_integer());
        }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(apery_box(eq({4, 5, 7}), 10), Error);
    try {
        apery_box(eq({4, 5, 7}), 10);
        FAIL("expected BoxTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoxTooLarge);
    }
    CHECK_THROWS_AS(apery_closed_form(eq({4, 5, 7}), 3), Error);
}
