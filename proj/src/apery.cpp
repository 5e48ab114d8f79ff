#include "dioph/apery.hpp"

#include <algorithm>
#include <numeric>

#include "dioph/error.hpp"
#include "dioph/smith.hpp"

namespace dioph {

std::optional<size_t> AperyTable::index_of(const LatticePoint& x) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) return std::nullopt;
    return static_cast<size_t>(it - elements.begin());
}

namespace {

i64 box_volume(const std::vector<i64>& upper, i64 guard) {
    i64 vol = 1;
    for (i64 u : upper) vol = checked_mul(vol, u);
    if (vol > guard)
        fail(ErrorCode::BoxTooLarge, "enumeration box holds " + std::to_string(vol) +
                                         " points, guard is " + std::to_string(guard));
    return vol;
}

void require_member(const AperyTable& table, const LatticePoint& a, const char* role) {
    if (!table.index_of(a))
        fail(ErrorCode::NotInApery,
             std::string(role) + " " + point_to_string(a) + " is not an Apery element");
}

} // namespace

AperyTable apery_box(const EquationSpec& eq, i64 guard) {
    box_volume(eq.widths, guard);
    AperyTable table;
    table.spec = eq;

    // Odometer over prod [0, w_i), rightmost digit fastest, which emits
    // points in lex order.  The congruence sum is maintained incrementally.
    LatticePoint x(eq.widths.size(), 0);
    const i64 c = eq.modulus;
    i64 sum = 0;
    const int d = eq.dim();
    for (;;) {
        if (sum == 0) table.elements.push_back(x);
        int pos = d - 1;
        while (pos >= 0) {
            ++x[pos];
            sum = (sum + eq.coeffs[pos]) % c;
            if (x[pos] < eq.widths[pos]) break;
            // rolling w_i steps of a_i backwards: a_i * w_i = 0 (mod c),
            // so resetting the digit leaves `sum` unchanged
            x[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return table;
}

AperyTable apery_closed_form(const EquationSpec& eq, i64 guard) {
    if (eq.r() != 3)
        fail(ErrorCode::NotTwoDimensional,
             "closed form needs exactly two coefficients, equation has " +
                 std::to_string(eq.dim()));
    const i64 a = eq.coeffs[0], b = eq.coeffs[1], c = eq.modulus;
    if (a == 0 || b == 0)
        fail(ErrorCode::ZeroCoefficient,
             "closed form requires both coefficients nonzero modulo the modulus");

    const i64 ga = eq.gcds[0], gb = eq.gcds[1];
    const i64 count = c / (ga * gb);
    if (count > guard)
        fail(ErrorCode::BoxTooLarge, "Apery set holds " + std::to_string(count) +
                                         " points, guard is " + std::to_string(guard));
    const i64 cb = c / gb;                 // width of ray 2, at least 2 here
    const i64 d = mod_inverse(b / gb, cb); // (b/gb)^-1 mod c/gb

    AperyTable table;
    table.spec = eq;
    table.elements.reserve(static_cast<size_t>(count));
    for (i64 i = 0; i < count; ++i) {
        // second coordinate solves a*(gb*i) + b*y = 0 (mod c)
        const i64 t = checked_mul(checked_mul(i, d) % cb, a % cb) % cb;
        table.elements.push_back({gb * i, (cb - t) % cb});
    }
    std::sort(table.elements.begin(), table.elements.end());
    return table;
}

ApReduction reduce(const AperyTable& table, const LatticePoint& x) {
    if (!contains(table.spec, x))
        fail(ErrorCode::NotInMonoid, point_to_string(x) + " is not a solution");
    const auto& w = table.spec.widths;
    ApReduction out;
    out.apery.resize(x.size());
    out.carries.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        out.carries[i] = x[i] / w[i];
        out.apery[i] = x[i] % w[i];
    }
    // the apery part satisfies the congruence and lies in the box
    return out;
}

LatticePoint oplus(const AperyTable& table, const LatticePoint& a, const LatticePoint& b) {
    require_member(table, a, "left operand");
    require_member(table, b, "right operand");
    LatticePoint sum(a.size());
    for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    return reduce(table, sum).apery;
}

CarryVector carry(const AperyTable& table, const LatticePoint& a, const LatticePoint& b) {
    require_member(table, a, "left operand");
    require_member(table, b, "right operand");
    const auto& w = table.spec.widths;
    CarryVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) / w[i];
    return out;
}

LatticePoint bar_multiple(const AperyTable& table, i64 n, const LatticePoint& a) {
    if (n < 0) fail(ErrorCode::BadInput, "multiple must be nonnegative");
    require_member(table, a, "operand");
    LatticePoint scaled(a.size());
    for (size_t i = 0; i < a.size(); ++i) scaled[i] = checked_mul(n, a[i]);
    return reduce(table, scaled).apery;
}

std::vector<i64> ell_all(const AperyTable& table) {
    const auto& w = table.spec.widths;
    std::vector<i64> ells(w.size(), 1);
    for (const auto& a : table.elements)
        for (size_t i = 0; i < w.size(); ++i)
            ells[i] = checked_lcm(ells[i], w[i] / std::gcd(a[i], w[i]));
    return ells;
}

std::vector<i64> ell_all(const EquationSpec& eq, i64 guard) {
    return ell_all(apery_box(eq, guard));
}

i64 ell(const EquationSpec& eq, int ray_index, i64 guard) {
    if (ray_index < 0 || ray_index >= eq.dim())
        fail(ErrorCode::BadInput, "ray index out of range");
    return ell_all(eq, guard)[static_cast<size_t>(ray_index)];
}

} // namespace dioph
