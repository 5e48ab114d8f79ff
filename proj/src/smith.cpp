#include "dioph/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "dioph/error.hpp"

namespace dioph {

i64 mod_inverse(i64 a, i64 m) {
    if (m < 2) fail(ErrorCode::BadInput, "modulus must be at least 2");
    a %= m;
    if (a < 0) a += m;
    // extended Euclid on (a, m); old_t tracks the Bezout coefficient of a
    i64 old_r = a, r = m;
    i64 old_t = 1, t = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_t = std::exchange(t, checked_sub(old_t, checked_mul(q, t)));
    }
    if (old_r != 1)
        fail(ErrorCode::NoInverse,
             std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    old_t %= m;
    if (old_t < 0) old_t += m;
    return old_t;
}

namespace {

struct SmithWorker {
    IntMatrix a;
    IntMatrix u; // row transform
    IntMatrix v; // column transform

    explicit SmithWorker(IntMatrix m)
        : a(std::move(m)), u(IntMatrix::identity(a.rows)), v(IntMatrix::identity(a.cols)) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < a.cols; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (int k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < a.rows; ++k) std::swap(a.at(k, i), a.at(k, j));
        for (int k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
    }

    // row[i] -= q * row[j]
    void add_row(int i, int j, i64 q) {
        if (q == 0) return;
        for (int k = 0; k < a.cols; ++k)
            a.at(i, k) = checked_sub(a.at(i, k), checked_mul(q, a.at(j, k)));
        for (int k = 0; k < u.cols; ++k)
            u.at(i, k) = checked_sub(u.at(i, k), checked_mul(q, u.at(j, k)));
    }

    // col[i] -= q * col[j]
    void add_col(int i, int j, i64 q) {
        if (q == 0) return;
        for (int k = 0; k < a.rows; ++k)
            a.at(k, i) = checked_sub(a.at(k, i), checked_mul(q, a.at(k, j)));
        for (int k = 0; k < v.rows; ++k)
            v.at(k, i) = checked_sub(v.at(k, i), checked_mul(q, v.at(k, j)));
    }

    void negate_row(int i) {
        for (int k = 0; k < a.cols; ++k) a.at(i, k) = checked_sub(0, a.at(i, k));
        for (int k = 0; k < u.cols; ++k) u.at(i, k) = checked_sub(0, u.at(i, k));
    }

    // Smallest nonzero |entry| in the submatrix starting at (t, t).
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        i64 best = 0;
        for (int i = t; i < a.rows; ++i) {
            for (int j = t; j < a.cols; ++j) {
                const i64 e = a.at(i, j);
                if (e == 0) continue;
                const i64 mag = e < 0 ? -e : e;
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    }

    void run() {
        const int bound = std::min(a.rows, a.cols);
        int t = 0;
        while (t < bound) {
            int pi = 0, pj = 0;
            if (!find_pivot(t, pi, pj)) break; // remaining block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            // Clear row t and column t.  A nonzero remainder is strictly
            // smaller than the pivot, so swapping it in terminates.
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = t + 1; i < a.rows; ++i) {
                    if (a.at(i, t) == 0) continue;
                    add_row(i, t, a.at(i, t) / a.at(t, t));
                    if (a.at(i, t) != 0) {
                        swap_rows(i, t);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < a.cols; ++j) {
                    if (a.at(t, j) == 0) continue;
                    add_col(j, t, a.at(t, j) / a.at(t, t));
                    if (a.at(t, j) != 0) {
                        swap_cols(j, t);
                        clean = false;
                    }
                }
            }

            // Divisibility fix: fold any offending row into row t and redo.
            bool divides = true;
            for (int i = t + 1; i < a.rows && divides; ++i) {
                for (int j = t + 1; j < a.cols; ++j) {
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(t, i, -1); // row t has zeros beyond (t,t)
                        divides = false;
                        break;
                    }
                }
            }
            if (!divides) continue;

            if (a.at(t, t) < 0) negate_row(t);
            ++t;
        }
    }

    std::vector<i64> diagonal() const {
        const int k = std::min(a.rows, a.cols);
        std::vector<i64> d(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) d[static_cast<size_t>(i)] = a.at(i, i);
        return d;
    }
};

} // namespace

SmithDecomposition smith_decompose(IntMatrix m) {
    SmithWorker w(std::move(m));
    w.run();
    return SmithDecomposition{w.diagonal(), std::move(w.u), std::move(w.v)};
}

std::vector<i64> smith_normal_form(const IntMatrix& m) {
    return smith_decompose(m).diagonal;
}

} // namespace dioph
