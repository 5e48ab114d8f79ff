#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "dioph/decompose.hpp"
#include "dioph/error.hpp"
#include "dioph/oracle.hpp"
#include "helpers.hpp"

using namespace dioph;
using dioph::testing::eq;

TEST_CASE("decompose on fixed points") {
    const EquationSpec m = eq({4, 5, 7});
    CHECK(decompose(m, {8, 2}) == Decomposition{{1, 2}, {1, 0}});
    CHECK(decompose(m, {14, 7}) == Decomposition{{0, 0}, {2, 1}});
    for (const auto& a : apery_box(m).elements)
        CHECK(decompose(m, a) == Decomposition{a, {0, 0}});
    CHECK_THROWS_AS(decompose(m, {1, 1}), Error);
    CHECK_THROWS_AS(decompose(m, {-7, 0}), Error);
}

TEST_CASE("decomposition is a bijection onto Ap x carries") {
    for (auto raw : {std::vector<i64>{4, 5, 7}, {6, 4, 9}, {12, 8, 18}, {1, 1, 1, 2}}) {
        const EquationSpec m = normalize_equation(raw);
        const AperyTable ap = apery_box(m);
        const std::string label = point_to_string(m.raw);
        CAPTURE(label);

        std::vector<i64> upper(static_cast<size_t>(m.dim()), 3 * m.modulus);
        std::set<std::pair<LatticePoint, std::vector<i64>>> seen;
        for (const auto& x : enumerate_solutions(m, upper)) {
            const Decomposition d = decompose(m, x);
            CHECK(ap.index_of(d.apery_part).has_value());
            LatticePoint back = d.apery_part;
            for (size_t i = 0; i < back.size(); ++i)
                back[i] += d.ray_mults[i] * m.widths[i];
            CHECK(back == x);
            CHECK(seen.emplace(d.apery_part, d.ray_mults).second); // injective
        }
    }
}

TEST_CASE("elliott scheme on the two-atom instance") {
    const ElliottScheme s = elliott_scheme(eq({4, 5, 7}));
    CHECK(s.u == LatticePoint{1, 2});
    CHECK(s.v == LatticePoint{4, 1});
    CHECK(s.admissible == std::vector<std::pair<i64, i64>>{
                              {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}});
}

TEST_CASE("elliott scheme shapes") {
    SUBCASE("family instance") {
        const ElliottScheme s = elliott_scheme(eq({3, 1, 7}));
        CHECK(s.u == LatticePoint{1, 4});
        CHECK(s.v == LatticePoint{2, 1});
        CHECK(s.admissible == std::vector<std::pair<i64, i64>>{
                                  {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}});
    }
    SUBCASE("no extras: trivial scheme") {
        const ElliottScheme s = elliott_scheme(eq({2, 3, 6}));
        CHECK_FALSE(s.u.has_value());
        CHECK_FALSE(s.v.has_value());
        CHECK(s.admissible == std::vector<std::pair<i64, i64>>{{0, 0}});
    }
    SUBCASE("one extra: v absent, n pinned to 0") {
        const ElliottScheme s = elliott_scheme(eq({1, 1, 2}));
        CHECK(s.u == LatticePoint{1, 1});
        CHECK_FALSE(s.v.has_value());
        CHECK(s.admissible == std::vector<std::pair<i64, i64>>{{0, 0}, {1, 0}});
    }
    SUBCASE("three extras is out of scope") {
        try {
            elliott_scheme(eq({1, 5, 13}));
            FAIL("expected TooManyExtras");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::TooManyExtras);
        }
    }
}

TEST_CASE("admissible pairs biject with the Apery set") {
    for (const auto& raw : dioph::testing::coprime_triples(12)) {
        const EquationSpec m = normalize_equation(raw);
        ElliottScheme s;
        try {
            s = elliott_scheme(m);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::TooManyExtras);
            continue;
        }
        const AperyTable ap = apery_box(m);
        REQUIRE(s.admissible.size() == ap.size());

        std::set<LatticePoint> images;
        for (auto [mm, nn] : s.admissible) {
            LatticePoint p(static_cast<size_t>(m.dim()), 0);
            for (size_t i = 0; i < p.size(); ++i) {
                if (s.u) p[i] += mm * (*s.u)[i];
                if (s.v) p[i] += nn * (*s.v)[i];
            }
            CHECK(ap.index_of(p).has_value()); // lands in Ap, coordinates < w_i
            images.insert(p);

            // strict bound reformulated through lambda
            for (int i = 0; i < m.dim(); ++i) {
                Rational sum(0);
                if (s.u) sum = sum + Rational(mm) * cale_lambda(m, i, *s.u);
                if (s.v) sum = sum + Rational(nn) * cale_lambda(m, i, *s.v);
                CHECK(sum < Rational(1));
            }
        }
        CHECK(images.size() == ap.size());

        // conversely, any (m, n) meeting all the strict bounds is admissible
        if (s.u && s.v) {
            std::set<std::pair<i64, i64>> listed(s.admissible.begin(), s.admissible.end());
            for (i64 mm = 0; mm <= m.modulus; ++mm)
                for (i64 nn = 0; nn <= m.modulus; ++nn) {
                    bool fits = true;
                    for (size_t i = 0; i < (*s.u).size() && fits; ++i)
                        fits = mm * (*s.u)[i] + nn * (*s.v)[i] < m.widths[i];
                    CHECK(fits == listed.count({mm, nn}));
                }
        }
    }
}

TEST_CASE("elliott representations") {
    const EquationSpec m = eq({4, 5, 7});
    const ElliottScheme s = elliott_scheme(m);
    CHECK(elliott_decompose(s, {8, 2}) == ElliottRepresentation{{1, 0}, 1, 0});
    CHECK(elliott_decompose(s, {0, 0}) == ElliottRepresentation{{0, 0}, 0, 0});
    CHECK(elliott_decompose(s, {5, 3}) == ElliottRepresentation{{0, 0}, 1, 1});
    CHECK_THROWS_AS(elliott_decompose(s, {1, 1}), Error);

    // reconstruction across an exhaustive window, several instances
    for (auto raw : {std::vector<i64>{4, 5, 7}, {3, 1, 7}, {6, 4, 9}, {1, 1, 2}}) {
        const EquationSpec k = normalize_equation(raw);
        const ElliottScheme scheme = elliott_scheme(k);
        std::vector<i64> upper(static_cast<size_t>(k.dim()), 3 * k.modulus);
        for (const auto& x : enumerate_solutions(k, upper)) {
            const ElliottRepresentation rep = elliott_decompose(scheme, x);
            LatticePoint back(static_cast<size_t>(k.dim()), 0);
            for (size_t i = 0; i < back.size(); ++i) {
                back[i] = rep.ray_mults[i] * k.widths[i];
                if (scheme.u) back[i] += rep.m * (*scheme.u)[i];
                if (scheme.v) back[i] += rep.n * (*scheme.v)[i];
            }
            CHECK(back == x);
        }
    }
}
