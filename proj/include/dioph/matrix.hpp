#pragma once

#include <vector>

#include "dioph/checked.hpp"
#include "dioph/error.hpp"

namespace dioph {

/// Dense row-major integer matrix.  Just storage plus bounds-unchecked
/// accessors; the algorithms that need it live in smith.hpp.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<i64> data;

    IntMatrix() = default;

    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {
        if (r < 0 || c < 0) fail(ErrorCode::BadInput, "negative matrix dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<i64>>& rws) {
        const int r = static_cast<int>(rws.size());
        const int c = r > 0 ? static_cast<int>(rws[0].size()) : 0;
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rws[i].size()) != c)
                fail(ErrorCode::BadInput, "ragged rows in matrix literal");
            for (int j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
        }
        return m;
    }

    i64& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    i64 at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    std::vector<i64> row(int i) const {
        return std::vector<i64>(data.begin() + static_cast<size_t>(i) * cols,
                                data.begin() + static_cast<size_t>(i + 1) * cols);
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

} // namespace dioph
