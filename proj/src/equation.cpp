#include "dioph/equation.hpp"

#include <algorithm>
#include <numeric>

#include "dioph/error.hpp"

namespace dioph {

std::string point_to_string(const LatticePoint& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

EquationSpec normalize_equation(const std::vector<i64>& raw) {
    if (raw.size() < 2)
        fail(ErrorCode::BadInput, "an equation needs at least two entries");
    for (i64 e : raw)
        if (e < 1) fail(ErrorCode::BadInput, "equation entries must be positive");

    i64 g = 0;
    for (i64 e : raw) g = std::gcd(g, e);

    EquationSpec eq;
    eq.raw = raw;
    eq.modulus = raw.back() / g;
    eq.coeffs.resize(raw.size() - 1);
    eq.gcds.resize(raw.size() - 1);
    eq.widths.resize(raw.size() - 1);
    for (size_t i = 0; i + 1 < raw.size(); ++i) {
        eq.coeffs[i] = (raw[i] / g) % eq.modulus;
        eq.gcds[i] = std::gcd(eq.coeffs[i], eq.modulus); // gcd(0, c) = c, so w_i = 1
        eq.widths[i] = eq.modulus / eq.gcds[i];
    }
    return eq;
}

bool contains(const EquationSpec& eq, const LatticePoint& x) {
    if (static_cast<int>(x.size()) != eq.dim())
        fail(ErrorCode::DimensionMismatch,
             "point has " + std::to_string(x.size()) + " coordinates, expected " +
                 std::to_string(eq.dim()));
    const i64 c = eq.modulus;
    i64 s = 0;
    for (int i = 0; i < eq.dim(); ++i) {
        if (x[i] < 0) return false;
        s = checked_add(s, checked_mul(eq.coeffs[i], x[i] % c)) % c;
    }
    return s == 0;
}

std::vector<LatticePoint> rays(const EquationSpec& eq) {
    std::vector<LatticePoint> q(eq.dim(), LatticePoint(eq.dim(), 0));
    for (int i = 0; i < eq.dim(); ++i) q[i][i] = eq.widths[i];
    return q;
}

std::vector<i64> lift(const EquationSpec& eq, const LatticePoint& x) {
    if (!contains(eq, x))
        fail(ErrorCode::NotInMonoid, "cannot lift " + point_to_string(x));
    i64 s = 0;
    for (int i = 0; i < eq.dim(); ++i) s = checked_add(s, checked_mul(eq.coeffs[i], x[i]));
    std::vector<i64> out = x;
    out.push_back(s / eq.modulus);
    return out;
}

Rational cale_lambda(const EquationSpec& eq, int ray_index, const LatticePoint& x) {
    if (ray_index < 0 || ray_index >= eq.dim())
        fail(ErrorCode::BadInput, "ray index out of range");
    if (!contains(eq, x))
        fail(ErrorCode::NotInMonoid, point_to_string(x) + " is not a solution");
    return Rational(x[ray_index], eq.widths[ray_index]);
}

Rational nu(const EquationSpec& eq, const LatticePoint& x) {
    Rational best = cale_lambda(eq, 0, x);
    for (int i = 1; i < eq.dim(); ++i) {
        const Rational l = cale_lambda(eq, i, x);
        if (best < l) best = l;
    }
    return best;
}

CaleData cale_data(const EquationSpec& eq, const LatticePoint& x) {
    if (!contains(eq, x))
        fail(ErrorCode::NotInMonoid, point_to_string(x) + " is not a solution");
    // n = lcm_i w_i / gcd(x_i, w_i): the least n making every n*x_i/w_i whole
    i64 n = 1;
    for (int i = 0; i < eq.dim(); ++i)
        n = checked_lcm(n, eq.widths[i] / std::gcd(x[i], eq.widths[i]));
    CaleData out;
    out.n = n;
    out.ray_coords.resize(x.size());
    for (int i = 0; i < eq.dim(); ++i)
        out.ray_coords[i] = checked_mul(n, x[i]) / eq.widths[i];
    return out;
}

} // namespace dioph
