#include "dioph/class_groups.hpp"

#include <algorithm>
#include <numeric>

#include "dioph/error.hpp"
#include "dioph/rational.hpp"

namespace dioph {

std::vector<i64> phi(const EquationSpec& eq, const std::vector<i64>& ells,
                     const LatticePoint& x) {
    if (static_cast<int>(ells.size()) != eq.dim())
        fail(ErrorCode::BadInput, "ell vector length does not match the equation");
    if (!contains(eq, x))
        fail(ErrorCode::NotInMonoid, point_to_string(x) + " is not a solution");
    std::vector<i64> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        const i64 p = checked_mul(ells[i], x[i]);
        if (p % eq.widths[i] != 0)
            fail(ErrorCode::Internal, "ell does not clear the lambda denominator");
        out[i] = p / eq.widths[i];
    }
    return out;
}

namespace {

std::vector<std::vector<i64>> phi_of_basis(const EquationSpec& eq,
                                           const std::vector<i64>& ells,
                                           const HilbertBasis& hb) {
    std::vector<std::vector<i64>> images;
    for (const auto& h : hb.all()) images.push_back(phi(eq, ells, h));
    return images;
}

// Row-echelon basis (pivots on strictly increasing columns) of the lattice
// generated by the given rows, via gcd row reduction.
std::vector<std::vector<i64>> lattice_basis(std::vector<std::vector<i64>> rows, int n) {
    int pos = 0;
    for (int col = 0; col < n && pos < static_cast<int>(rows.size()); ++col) {
        for (;;) {
            int best = -1;
            for (int i = pos; i < static_cast<int>(rows.size()); ++i) {
                const i64 e = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
                if (e == 0) continue;
                if (best < 0 ||
                    std::abs(e) < std::abs(rows[static_cast<size_t>(best)][static_cast<size_t>(col)]))
                    best = i;
            }
            if (best < 0) break; // column already clear
            std::swap(rows[static_cast<size_t>(pos)], rows[static_cast<size_t>(best)]);
            auto& pivot = rows[static_cast<size_t>(pos)];
            bool clean = true;
            for (int i = pos + 1; i < static_cast<int>(rows.size()); ++i) {
                auto& r = rows[static_cast<size_t>(i)];
                const i64 q = r[static_cast<size_t>(col)] / pivot[static_cast<size_t>(col)];
                if (q != 0)
                    for (int k = 0; k < n; ++k)
                        r[static_cast<size_t>(k)] = checked_sub(
                            r[static_cast<size_t>(k)],
                            checked_mul(q, pivot[static_cast<size_t>(k)]));
                if (r[static_cast<size_t>(col)] != 0) clean = false;
            }
            if (clean) {
                if (pivot[static_cast<size_t>(col)] < 0)
                    for (auto& e : pivot) e = checked_sub(0, e);
                ++pos;
                break;
            }
        }
    }
    rows.resize(static_cast<size_t>(pos));
    return rows;
}

} // namespace

FiniteAbelianGroup class_group(const EquationSpec& eq, i64 guard) {
    const AperyTable ap = apery_box(eq, guard);
    const auto ells = ell_all(ap);
    HilbertBasis hb = hilbert_basis(eq, guard);
    return group_from_quotient(eq.dim(), phi_of_basis(eq, ells, hb));
}

FiniteAbelianGroup inner_class_group(const EquationSpec& eq, i64 guard) {
    const AperyTable ap = apery_box(eq, guard);
    const auto ells = ell_all(ap);
    HilbertBasis hb = hilbert_basis(eq, guard);
    const int n = eq.dim();

    // phi(G(M)) is generated by the images of the Hilbert basis; it is full
    // rank because it contains every ell_i e_i = phi(q_i).
    const auto basis = lattice_basis(phi_of_basis(eq, ells, hb), n);
    if (static_cast<int>(basis.size()) != n)
        fail(ErrorCode::Internal, "image lattice is not of full rank");

    // Express each ell_i e_i in that basis.  The echelon shape makes this a
    // forward substitution over exact rationals; coordinates must be whole.
    std::vector<std::vector<i64>> coords;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> target(static_cast<size_t>(n));
        target[static_cast<size_t>(i)] = Rational(ells[static_cast<size_t>(i)]);
        std::vector<i64> xrow(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            Rational acc = target[static_cast<size_t>(j)];
            for (int k = 0; k < j; ++k)
                acc = acc - Rational(xrow[static_cast<size_t>(k)]) *
                                Rational(basis[static_cast<size_t>(k)][static_cast<size_t>(j)]);
            const Rational sol =
                acc * Rational(1, basis[static_cast<size_t>(j)][static_cast<size_t>(j)]);
            if (!sol.is_integer())
                fail(ErrorCode::Internal, "ray image has fractional lattice coordinates");
            xrow[static_cast<size_t>(j)] = sol.num;
        }
        coords.push_back(std::move(xrow));
    }
    return group_from_quotient(n, coords);
}

ProductIdentityReport verify_product_identity(const EquationSpec& eq, i64 guard) {
    ProductIdentityReport rep;
    rep.lhs = 1;
    for (i64 l : ell_all(eq, guard)) rep.lhs = checked_mul(rep.lhs, l);
    rep.rhs = checked_mul(class_group(eq, guard).order(), inner_class_group(eq, guard).order());
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

FiniteAbelianGroup two_dim_closed_form(i64 a, i64 b, i64 c) {
    if (c < 2) fail(ErrorCode::BadInput, "modulus must be at least 2");
    if (a < 1 || a >= c || b < 1 || b >= c)
        fail(ErrorCode::BadInput, "coefficients must lie in [1, modulus)");
    if (std::gcd(std::gcd(a, b), c) != 1)
        fail(ErrorCode::BadInput, "equation is not normalized: gcd(a, b, c) > 1");
    return FiniteAbelianGroup::cyclic(c / (std::gcd(a, c) * std::gcd(b, c)));
}

} // namespace dioph
