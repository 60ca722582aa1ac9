#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bhall/errors.hpp"

namespace bhall {

inline int ff_inv(int x, int q) {
    // q is small and prime; extended Euclid without the table bookkeeping.
    check_internal(x % q != 0, "ff_inv: zero");
    int t = 0, nt = 1, r = q, nr = ((x % q) + q) % q;
    while (nr != 0) {
        int qt = r / nr;
        t -= qt * nt;
        std::swap(t, nt);
        r -= qt * nr;
        std::swap(r, nr);
    }
    return ((t % q) + q) % q;
}

// Dense matrix over F_q, entries stored reduced. Row-major.
struct FFMatrix {
    int q = 2;
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    FFMatrix() = default;
    FFMatrix(int q_, int r, int c) : q(q_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    void set(int r, int c, int v) { at(r, c) = static_cast<uint8_t>(((v % q) + q) % q); }

    static FFMatrix identity(int q, int n) {
        FFMatrix m(q, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_zero() const {
        for (uint8_t x : a)
            if (x) return false;
        return true;
    }

    friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

    FFMatrix operator*(const FFMatrix& o) const {
        check_internal(cols == o.rows && q == o.q, "FFMatrix mul: shape/field mismatch");
        FFMatrix r(q, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                int x = at(i, k);
                if (!x) continue;
                for (int j = 0; j < o.cols; ++j)
                    r.at(i, j) = static_cast<uint8_t>((r.at(i, j) + x * o.at(k, j)) % q);
            }
        return r;
    }

    FFMatrix operator+(const FFMatrix& o) const {
        check_internal(rows == o.rows && cols == o.cols && q == o.q, "FFMatrix add: mismatch");
        FFMatrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = static_cast<uint8_t>((r.a[i] + o.a[i]) % q);
        return r;
    }

    FFMatrix operator-(const FFMatrix& o) const {
        check_internal(rows == o.rows && cols == o.cols && q == o.q, "FFMatrix sub: mismatch");
        FFMatrix r = *this;
        for (size_t i = 0; i < a.size(); ++i)
            r.a[i] = static_cast<uint8_t>(((r.a[i] - o.a[i]) % q + q) % q);
        return r;
    }

    FFMatrix scaled(int s) const {
        s = ((s % q) + q) % q;
        FFMatrix r = *this;
        for (auto& x : r.a) x = static_cast<uint8_t>(x * s % q);
        return r;
    }

    FFMatrix transposed() const {
        FFMatrix r(q, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }
};

struct RrefResult {
    FFMatrix mat;
    std::vector<int> pivot_cols;
};

// Deterministic reduced row echelon form: scan columns left to right, pivot on
// the smallest-index unused row with a nonzero entry.
inline RrefResult rref(FFMatrix m) {
    const int q = m.q;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col)) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
        int inv = ff_inv(m.at(row, col), q);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) = static_cast<uint8_t>(m.at(row, c) * inv % q);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            int f = m.at(r, col);
            if (!f) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = static_cast<uint8_t>(((m.at(r, c) - f * m.at(row, c)) % q + q) % q);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline int ff_rank(const FFMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

// Least solution of A x = b (free variables zero), or nullopt if inconsistent.
inline std::optional<std::vector<uint8_t>> ff_solve(const FFMatrix& A, const std::vector<uint8_t>& b) {
    check_internal(static_cast<int>(b.size()) == A.rows, "ff_solve: rhs size");
    FFMatrix aug(A.q, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = static_cast<uint8_t>(((b[i] % A.q) + A.q) % A.q);
    }
    auto rr = rref(std::move(aug));
    std::vector<uint8_t> x(A.cols, 0);
    for (size_t k = 0; k < rr.pivot_cols.size(); ++k) {
        if (rr.pivot_cols[k] == A.cols) return std::nullopt;
        x[rr.pivot_cols[k]] = rr.mat.at(static_cast<int>(k), A.cols);
    }
    return x;
}

// Solve A X = B columnwise; nullopt if any column is inconsistent.
inline std::optional<FFMatrix> ff_solve_matrix(const FFMatrix& A, const FFMatrix& B) {
    check_internal(A.rows == B.rows && A.q == B.q, "ff_solve_matrix: mismatch");
    FFMatrix X(A.q, A.cols, B.cols);
    std::vector<uint8_t> b(static_cast<size_t>(A.rows));
    for (int j = 0; j < B.cols; ++j) {
        for (int i = 0; i < A.rows; ++i) b[static_cast<size_t>(i)] = B.at(i, j);
        auto x = ff_solve(A, b);
        if (!x) return std::nullopt;
        for (int i = 0; i < A.cols; ++i) X.at(i, j) = (*x)[static_cast<size_t>(i)];
    }
    return X;
}

// Basis of ker(A) as matrix rows, ordered by ascending free column.
inline FFMatrix ff_kernel(const FFMatrix& A) {
    auto rr = rref(A);
    std::vector<bool> is_pivot(static_cast<size_t>(A.cols), false);
    for (int p : rr.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
    int nfree = A.cols - static_cast<int>(rr.pivot_cols.size());
    FFMatrix K(A.q, nfree, A.cols);
    int k = 0;
    for (int f = 0; f < A.cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        K.at(k, f) = 1;
        for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
            int v = rr.mat.at(static_cast<int>(r), f);
            K.at(k, rr.pivot_cols[r]) = static_cast<uint8_t>(((-v) % A.q + A.q) % A.q);
        }
        ++k;
    }
    return K;
}

inline std::optional<FFMatrix> ff_inverse(const FFMatrix& A) {
    check_internal(A.rows == A.cols, "ff_inverse: not square");
    FFMatrix aug(A.q, A.rows, 2 * A.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols + i) = 1;
    }
    auto rr = rref(std::move(aug));
    if (static_cast<int>(rr.pivot_cols.size()) != A.rows) return std::nullopt;
    for (int k = 0; k < A.rows; ++k)
        if (rr.pivot_cols[static_cast<size_t>(k)] != k) return std::nullopt;
    FFMatrix inv(A.q, A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) inv.at(i, j) = rr.mat.at(i, A.cols + j);
    return inv;
}

inline bool ff_invertible(const FFMatrix& A) {
    return A.rows == A.cols && ff_rank(A) == A.rows;
}

// Membership of v in the row space of an RREF basis.
inline bool rowspace_contains(const RrefResult& basis, std::vector<uint8_t> v) {
    const int q = basis.mat.q;
    check_internal(static_cast<int>(v.size()) == basis.mat.cols, "rowspace_contains: size");
    for (size_t r = 0; r < basis.pivot_cols.size(); ++r) {
        int p = basis.pivot_cols[r];
        int f = v[static_cast<size_t>(p)] % q;
        if (!f) continue;
        for (int c = 0; c < basis.mat.cols; ++c)
            v[static_cast<size_t>(c)] = static_cast<uint8_t>(
                ((v[static_cast<size_t>(c)] - f * basis.mat.at(static_cast<int>(r), c)) % q + q) % q);
    }
    for (uint8_t x : v)
        if (x % q) return false;
    return true;
}

inline int primitive_root(int q) {
    for (int g = 2; g < q; ++g) {
        int x = g, ord = 1;
        while (x != 1) {
            x = x * g % q;
            ++ord;
        }
        if (ord == q - 1) return g;
    }
    return 1;  // q == 2
}

// Generators of GL(d, q) with their inverses: every transvection I + E_ij plus
// one primitive scalar in the corner (redundant for q = 2).
inline std::vector<std::pair<FFMatrix, FFMatrix>> gl_generators(int q, int d) {
    std::vector<std::pair<FFMatrix, FFMatrix>> gens;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            FFMatrix g = FFMatrix::identity(q, d), gi = FFMatrix::identity(q, d);
            g.at(i, j) = 1;
            gi.at(i, j) = static_cast<uint8_t>(q - 1);
            gens.emplace_back(std::move(g), std::move(gi));
        }
    if (q > 2 && d >= 1) {
        int lam = primitive_root(q);
        FFMatrix g = FFMatrix::identity(q, d), gi = FFMatrix::identity(q, d);
        g.at(0, 0) = static_cast<uint8_t>(lam);
        gi.at(0, 0) = static_cast<uint8_t>(ff_inv(lam, q));
        gens.emplace_back(std::move(g), std::move(gi));
    }
    return gens;
}

}  // namespace bhall
