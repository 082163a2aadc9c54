#pragma once

// Dense exact linear algebra over Q on row vectors.

#include <cstddef>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/rational.hpp"

namespace bidlab {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

struct Echelon {
    Matrix rows;                       // nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each row
};

inline Echelon rref(Matrix m) {
    Echelon e;
    if (m.empty()) return e;
    const std::size_t cols = m.front().size();
    for (const auto& r : m)
        if (r.size() != cols) throw DomainError("ragged matrix");
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
        std::size_t p = top;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[top]);
        Rational inv = Rational(1) / m[top][c];
        for (auto& v : m[top]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == top || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (m[top][k] != 0) m[r][k] -= f * m[top][k];
        }
        e.pivots.push_back(c);
        ++top;
    }
    m.resize(top);
    e.rows = std::move(m);
    return e;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rows.size(); }

/// Basis of {x : m x = 0}.
inline Matrix nullspace(const Matrix& m, std::size_t cols) {
    auto e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

/// Reduced basis of rowspace(a) & rowspace(b).
inline Matrix intersect_rowspaces(const Matrix& a, const Matrix& b) {
    auto ea = rref(a), eb = rref(b);
    if (ea.rows.empty() || eb.rows.empty()) return {};
    const std::size_t n = ea.rows.front().size(), ka = ea.rows.size(), kb = eb.rows.size();
    // columns: rows of a, then rows of b; a null vector (s, t) gives s.A = -t.B
    Matrix sys(n, Row(ka + kb, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < ka; ++i) sys[j][i] = ea.rows[i][j];
        for (std::size_t i = 0; i < kb; ++i) sys[j][ka + i] = eb.rows[i][j];
    }
    Matrix out;
    for (const auto& v : nullspace(sys, ka + kb)) {
        Row r(n, Rational(0));
        for (std::size_t i = 0; i < ka; ++i)
            if (v[i] != 0)
                for (std::size_t j = 0; j < n; ++j) r[j] += v[i] * ea.rows[i][j];
        out.push_back(std::move(r));
    }
    return rref(out).rows;
}

inline bool in_rowspace(const Matrix& m, const Row& v) {
    Matrix aug = m;
    std::size_t before = rank(aug);
    aug.push_back(v);
    return rank(aug) == before;
}

}  // namespace bidlab
