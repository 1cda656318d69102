#pragma once

#include <algorithm>
#include <optional>

#include "toric/numeric.hpp"

namespace toric {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline QMat to_rational(const Mat& m) {
    QMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        q[i].assign(m[i].begin(), m[i].end());
    }
    return q;
}

inline QMat identity_q(std::size_t n) {
    QMat m(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat identity_mat(std::size_t n) {
    Mat m(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// In-place row echelon reduction; returns rank. Pivot columns are recorded
/// when the caller passes a vector.
inline std::size_t row_reduce(QMat& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

inline std::size_t rank_of(const Mat& m) {
    QMat q = to_rational(m);
    return row_reduce(q);
}

inline std::size_t rank_of(const QMat& m) {
    QMat q = m;
    return row_reduce(q);
}

/// Determinant of a square integer matrix (fraction-free not needed at this scale).
inline Int det(const Mat& m) {
    std::size_t n = m.size();
    QMat q = to_rational(m);
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && q[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(q[p], q[c]);
            d = -d;
        }
        d *= q[c][c];
        Rat inv = Rat(1) / q[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (q[i][c] == 0) continue;
            Rat f = q[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) q[i][j] -= f * q[c][j];
        }
    }
    if (denominator(d) != 1) throw std::logic_error("integer determinant expected");
    return numerator(d);
}

/// Solves x * A = b for a row vector x (A given by rows). Returns nullopt when
/// inconsistent; when the solution is not unique an arbitrary one is returned.
inline std::optional<QVec> solve_left(const QMat& a, const QVec& b) {
    if (a.empty()) {
        for (const Rat& x : b)
            if (x != 0) return std::nullopt;
        return QVec{};
    }
    std::size_t rows = a.size(), cols = a[0].size();
    // Transpose into a standard right-hand-side system A^T x^T = b^T.
    QMat aug(cols, QVec(rows + 1, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) aug[j][i] = a[i][j];
    for (std::size_t j = 0; j < cols; ++j) aug[j][rows] = b[j];
    std::vector<std::size_t> pivots;
    row_reduce(aug, &pivots);
    QVec x(rows, Rat(0));
    std::size_t r = 0;
    for (std::size_t c : pivots) {
        if (c == rows) return std::nullopt;  // pivot in rhs column: inconsistent
        x[c] = aug[r][rows];
        ++r;
    }
    // rows below the pivot block must be consistent
    for (std::size_t i = r; i < aug.size(); ++i) {
        bool all0 = true;
        for (std::size_t j = 0; j < rows; ++j)
            if (aug[i][j] != 0) all0 = false;
        if (all0 && aug[i][rows] != 0) return std::nullopt;
    }
    return x;
}

inline std::optional<QVec> solve_left(const Mat& a, const QVec& b) {
    return solve_left(to_rational(a), b);
}

/// Inverse of a square rational matrix; throws when singular.
inline QMat inverse(const QMat& m) {
    std::size_t n = m.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::size_t r = row_reduce(aug);
    if (r != n) throw std::invalid_argument("matrix not invertible");
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline QMat inverse(const Mat& m) { return inverse(to_rational(m)); }

inline Mat to_integer(const QMat& q) {
    Mat m(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        m[i].resize(q[i].size());
        for (std::size_t j = 0; j < q[i].size(); ++j) {
            if (denominator(q[i][j]) != 1) throw std::logic_error("matrix entry not integral");
            m[i][j] = numerator(q[i][j]);
        }
    }
    return m;
}

/// Row-style Hermite normal form H = U * A with U unimodular: echelon shape,
/// positive pivots, entries above a pivot reduced into [0, pivot).
inline Mat hnf(const Mat& a_in) {
    Mat a = a_in;
    if (a.empty()) return a;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // clear column c below row r with gcd steps
        while (true) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (p == rows || abs_int(a[i][c]) < abs_int(a[p][c]))) p = i;
            if (p == rows) break;  // column clear
            std::swap(a[p], a[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            // floor division keeps 0 <= entry < pivot
            Int q = a[i][c] / a[r][c];
            if (a[i][c] - q * a[r][c] < 0) q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);  // drop zero rows
    return a;
}

struct SmithResult {
    Mat u;      // rows x rows, unimodular
    Mat v;      // cols x cols, unimodular
    Mat d;      // u * a * v, diagonal with divisibility chain
    std::size_t rank = 0;
};

/// Smith normal form with transforms: u * a * v = d.
inline SmithResult smith(const Mat& a_in) {
    SmithResult res;
    Mat a = a_in;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    res.u = identity_mat(rows);
    res.v = identity_mat(cols);
    auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {
        // row i -= q * row k
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
        for (std::size_t j = 0; j < rows; ++j) res.u[i][j] -= q * res.u[k][j];
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
        // col j -= q * col k
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
        for (std::size_t i = 0; i < cols; ++i) res.v[i][j] -= q * res.v[i][k];
    };
    auto swap_rows = [&](std::size_t i, std::size_t k) {
        std::swap(a[i], a[k]);
        std::swap(res.u[i], res.u[k]);
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][k]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][j], res.v[i][k]);
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find smallest nonzero entry in the remaining block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            row_op(i, t, a[i][t] / a[t][t]);
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            col_op(j, t, a[t][j] / a[t][t]);
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; redo the pivot hunt
        // enforce divisibility of the rest of the block by the pivot
        bool bumped = false;
        for (std::size_t i = t + 1; i < rows && !bumped; ++i)
            for (std::size_t j = t + 1; j < cols && !bumped; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_op(t, i, Int(-1));  // add row i to row t
                    bumped = true;
                }
        if (bumped) continue;
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < rows; ++j) res.u[t][j] = -res.u[t][j];
        }
        ++t;
    }
    res.rank = t;
    res.d = a;
    return res;
}

/// Multiplicity-style index: product of the elementary divisors of the row
/// lattice inside its saturation; 0 when the matrix is zero/empty.
inline Int elementary_divisor_product(const Mat& a) {
    SmithResult s = smith(a);
    Int p = 1;
    for (std::size_t i = 0; i < s.rank; ++i) p *= s.d[i][i];
    return s.rank ? p : Int(1);
}

/// Basis (rows, HNF-canonical) of span(rows of a) ∩ Z^d, the saturation of the
/// row lattice.
inline Mat saturation_basis(const Mat& a, std::size_t ambient) {
    if (a.empty()) return {};
    SmithResult s = smith(a);
    if (s.rank == 0) return {};
    QMat vinv_q = inverse(to_rational(s.v));
    Mat vinv = to_integer(vinv_q);
    Mat basis(vinv.begin(), vinv.begin() + s.rank);
    for (Vec& row : basis) row.resize(ambient);
    return hnf(basis);
}

/// Basis (rows, HNF-canonical) of {u in Z^d : <row_i, u> = 0 for all rows}.
inline Mat integer_kernel_basis(const Mat& a, std::size_t ambient) {
    if (a.empty()) {
        return identity_mat(ambient);
    }
    SmithResult s = smith(a);
    Mat basis;
    for (std::size_t j = s.rank; j < ambient; ++j) {
        Vec col(ambient);
        for (std::size_t i = 0; i < ambient; ++i) col[i] = s.v[i][j];
        basis.push_back(col);
    }
    return hnf(basis);
}

/// Coordinates of x in the given lattice basis (rows); nullopt when x is not
/// in the spanned lattice.
inline std::optional<Vec> lattice_coordinates(const Mat& basis, const Vec& x) {
    QVec bq(x.begin(), x.end());
    auto sol = solve_left(basis, bq);
    if (!sol) return std::nullopt;
    Vec r(sol->size());
    for (std::size_t i = 0; i < sol->size(); ++i) {
        if (denominator((*sol)[i]) != 1) return std::nullopt;
        r[i] = numerator((*sol)[i]);
    }
    // verify (solve_left may return a particular solution of an underdetermined
    // system, but basis rows are independent in all call sites)
    Vec check = zero_vec(x.size());
    for (std::size_t i = 0; i < basis.size(); ++i) check = add(check, scale(r[i], basis[i]));
    if (check != x) return std::nullopt;
    return r;
}

}  // namespace toric
