#include "dioph/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "dioph/error.hpp"
#include "dioph/matrix.hpp"
#include "dioph/smith.hpp"

namespace dioph {

std::vector<LatticePoint> enumerate_solutions(const EquationSpec& eq,
                                              const std::vector<i64>& upper, i64 guard) {
    if (static_cast<int>(upper.size()) != eq.dim())
        fail(ErrorCode::DimensionMismatch, "box dimension does not match the equation");
    i64 vol = 1;
    for (i64 u : upper) {
        if (u < 0) fail(ErrorCode::BadInput, "box bounds must be nonnegative");
        vol = checked_mul(vol, u);
    }
    if (vol > guard)
        fail(ErrorCode::BoxTooLarge, "enumeration box holds " + std::to_string(vol) +
                                         " points, guard is " + std::to_string(guard));
    std::vector<LatticePoint> out;
    if (vol == 0) return out;
    LatticePoint x(upper.size(), 0);
    const int dim = eq.dim();
    for (;;) {
        if (contains(eq, x)) out.push_back(x);
        int pos = dim - 1;
        while (pos >= 0 && ++x[static_cast<size_t>(pos)] >= upper[static_cast<size_t>(pos)])
            x[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return out;
}

std::vector<LatticePoint> brute_apery(const EquationSpec& eq, i64 guard) {
    // Definition, not the remainder trick: keep x in M whenever no ray can
    // be subtracted without leaving M.
    std::vector<LatticePoint> out;
    LatticePoint probe(static_cast<size_t>(eq.dim()));
    for (const auto& x : enumerate_solutions(eq, eq.widths, guard)) {
        bool in_apery = true;
        for (int i = 0; i < eq.dim() && in_apery; ++i) {
            probe = x;
            probe[static_cast<size_t>(i)] -= eq.widths[static_cast<size_t>(i)];
            if (contains(eq, probe)) in_apery = false;
        }
        if (in_apery) out.push_back(x);
    }
    return out;
}

std::vector<LatticePoint> brute_minimal(const std::vector<LatticePoint>& points) {
    std::vector<LatticePoint> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<LatticePoint> out;
    for (const auto& p : sorted) {
        bool minimal = true;
        for (const auto& q : sorted) {
            if (q == p) continue;
            bool below = q.size() == p.size();
            for (size_t i = 0; below && i < q.size(); ++i) below = q[i] <= p[i];
            if (below) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(p);
    }
    return out;
}

namespace {

[[noreturn]] void not_a_group(const std::string& axiom, const std::string& witness) {
    fail(ErrorCode::NotAGroup, axiom + " fails: " + witness);
}

void validate_group(const CayleyTable& t) {
    const size_t n = t.n;
    if (n == 0) fail(ErrorCode::BadInput, "empty Cayley table");
    if (t.op.size() != n * n) fail(ErrorCode::BadInput, "Cayley table must have n^2 entries");
    if (t.identity >= n) fail(ErrorCode::BadInput, "identity index out of range");
    for (size_t v : t.op)
        if (v >= n) fail(ErrorCode::BadInput, "Cayley table entry out of range");

    const size_t e = t.identity;
    for (size_t a = 0; a < n; ++a)
        if (t.at(e, a) != a || t.at(a, e) != a)
            not_a_group("identity", "element " + std::to_string(a));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (t.at(a, b) != t.at(b, a))
                not_a_group("commutativity",
                            "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
                    not_a_group("associativity", "(" + std::to_string(a) + ", " +
                                                     std::to_string(b) + ", " +
                                                     std::to_string(c) + ")");
    for (size_t a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (size_t b = 0; b < n && !has_inverse; ++b) has_inverse = t.at(a, b) == e;
        if (!has_inverse) not_a_group("inverses", "element " + std::to_string(a));
    }
}

} // namespace

FiniteAbelianGroup brute_group_structure(const CayleyTable& t) {
    validate_group(t);
    const size_t n = t.n;
    const size_t e = t.identity;

    // greedy generating set: repeatedly adjoin the lowest element outside
    // the subgroup generated so far
    std::vector<size_t> gens;
    std::vector<char> known(n, 0);
    known[e] = 1;
    for (;;) {
        size_t next = n;
        for (size_t i = 0; i < n; ++i)
            if (!known[i]) {
                next = i;
                break;
            }
        if (next == n) break;
        gens.push_back(next);
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t i = 0; i < n; ++i) {
                if (!known[i]) continue;
                for (size_t g : gens) {
                    const size_t s = t.at(i, g);
                    if (!known[s]) {
                        known[s] = 1;
                        changed = true;
                    }
                }
            }
        }
    }

    const size_t m = gens.size();
    if (m == 0) return FiniteAbelianGroup::trivial();

    std::vector<i64> ord(m);
    std::vector<std::vector<size_t>> pow(m);
    for (size_t j = 0; j < m; ++j) {
        pow[j].push_back(e);
        size_t cur = gens[j];
        while (cur != e) {
            pow[j].push_back(cur);
            cur = t.at(cur, gens[j]);
        }
        ord[j] = static_cast<i64>(pow[j].size());
    }

    // kernel of Z^m -> G: order relations plus every vanishing combination
    // inside the order box
    std::vector<std::vector<i64>> rel;
    for (size_t j = 0; j < m; ++j) {
        std::vector<i64> row(m, 0);
        row[j] = ord[j];
        rel.push_back(std::move(row));
    }
    i64 vol = 1;
    for (size_t j = 0; j < m; ++j) vol = checked_mul(vol, ord[j]);
    if (vol > kDefaultGuard) fail(ErrorCode::BoxTooLarge, "relation search space too large");
    std::vector<i64> z(m, 0);
    for (;;) {
        size_t acc = e;
        for (size_t j = 0; j < m; ++j) acc = t.at(acc, pow[j][static_cast<size_t>(z[j])]);
        if (acc == e && std::any_of(z.begin(), z.end(), [](i64 v) { return v != 0; }))
            rel.push_back(z);
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && ++z[static_cast<size_t>(pos)] >= ord[static_cast<size_t>(pos)])
            z[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
    }

    std::vector<i64> factors;
    for (i64 d : smith_normal_form(IntMatrix::from_rows(rel))) {
        if (d == 0) fail(ErrorCode::Internal, "relation lattice is not of full rank");
        if (d > 1) factors.push_back(d);
    }
    return FiniteAbelianGroup::from_factors(std::move(factors));
}

} // namespace dioph
