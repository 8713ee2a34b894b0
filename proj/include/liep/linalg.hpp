#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "liep/field.hpp"

namespace liep {

// Dimensions in this project never exceed 4; vectors are row coordinate
// vectors and matrices act on the right throughout.
constexpr int max_dim = 4;

struct Vec {
    // one extra slot: solver rows carry an augmented column
    std::array<Fe, max_dim + 1> c{};
    std::uint8_t n = 0;

    static Vec zero(int n) {
        Vec v;
        v.n = static_cast<std::uint8_t>(n);
        return v;
    }
    static Vec unit(const Field& F, int n, int i) {
        Vec v = zero(n);
        v.c[i] = F.one();
        return v;
    }

    Fe& operator[](int i) { return c[i]; }
    Fe operator[](int i) const { return c[i]; }
    int size() const { return n; }
    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (c[i].v != 0) return false;
        return true;
    }
    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }
    // Canonical order: entrywise lexicographic (left to right).
    friend bool operator<(const Vec& a, const Vec& b) {
        for (int i = 0; i < a.n && i < b.n; ++i)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return a.n < b.n;
    }
};

struct Mat {
    static constexpr int cap = 9; // fits 4x8 augmented systems
    std::array<Fe, cap * cap> e{};
    std::uint8_t rows = 0, cols = 0;

    static Mat zero(int r, int c) {
        Mat m;
        m.rows = static_cast<std::uint8_t>(r);
        m.cols = static_cast<std::uint8_t>(c);
        return m;
    }
    static Mat identity(const Field& F, int n) {
        Mat m = zero(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
        return m;
    }

    Fe& at(int r, int c) { return e[r * cap + c]; }
    Fe at(int r, int c) const { return e[r * cap + c]; }

    Vec row(int r) const {
        Vec v = Vec::zero(cols);
        for (int j = 0; j < cols; ++j) v[j] = at(r, j);
        return v;
    }
    void set_row(int r, const Vec& v) {
        for (int j = 0; j < cols; ++j) at(r, j) = v[j];
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows != b.rows || a.cols != b.cols) return false;
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j)
                if (a.at(i, j) != b.at(i, j)) return false;
        return true;
    }
};

inline Vec vadd(const Field& F, const Vec& a, const Vec& b) {
    Vec r = Vec::zero(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

inline Vec vsub(const Field& F, const Vec& a, const Vec& b) {
    Vec r = Vec::zero(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

inline Vec vneg(const Field& F, const Vec& a) {
    Vec r = Vec::zero(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = F.neg(a[i]);
    return r;
}

inline Vec vscale(const Field& F, Fe s, const Vec& a) {
    Vec r = Vec::zero(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = F.mul(s, a[i]);
    return r;
}

// v * M for a row vector v of length M.rows.
inline Vec mul_vec_mat(const Field& F, const Vec& v, const Mat& M) {
    Vec r = Vec::zero(M.cols);
    for (int i = 0; i < M.rows; ++i) {
        if (v[i].v == 0) continue;
        for (int j = 0; j < M.cols; ++j)
            r[j] = F.add(r[j], F.mul(v[i], M.at(i, j)));
    }
    return r;
}

inline Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    Mat R = Mat::zero(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.at(i, k).v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                R.at(i, j) = F.add(R.at(i, j), F.mul(A.at(i, k), B.at(k, j)));
        }
    return R;
}

inline Fe det(const Field& F, Mat M) {
    Fe d = F.one();
    const int n = M.rows;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (M.at(r, col).v != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return F.zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(M.e[piv * Mat::cap + j], M.e[col * Mat::cap + j]);
            d = F.neg(d);
        }
        d = F.mul(d, M.at(col, col));
        const Fe inv = F.inv(M.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (M.at(r, col).v == 0) continue;
            const Fe f = F.mul(M.at(r, col), inv);
            for (int j = col; j < n; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(col, j)));
        }
    }
    return d;
}

inline std::optional<Mat> mat_inverse(const Field& F, const Mat& M) {
    const int n = M.rows;
    Mat W = Mat::zero(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) W.at(i, j) = M.at(i, j);
        W.at(i, n + i) = F.one();
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (W.at(r, col).v != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(W.e[piv * Mat::cap + j], W.e[col * Mat::cap + j]);
        const Fe inv = F.inv(W.at(col, col));
        for (int j = 0; j < 2 * n; ++j) W.at(col, j) = F.mul(inv, W.at(col, j));
        for (int r = 0; r < n; ++r) {
            if (r == col || W.at(r, col).v == 0) continue;
            const Fe f = W.at(r, col);
            for (int j = 0; j < 2 * n; ++j)
                W.at(r, j) = F.sub(W.at(r, j), F.mul(f, W.at(col, j)));
        }
    }
    Mat R = Mat::zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = W.at(i, n + j);
    return R;
}

// Row space kept in reduced echelon form, so equal subspaces have equal
// basis matrices.
struct Subspace {
    Mat basis; // rref rows
    int ambient = 0;

    static Subspace empty(int ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat::zero(0, ambient);
        return s;
    }
    static Subspace full(const Field& F, int ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat::identity(F, ambient);
        return s;
    }

    int dim() const { return basis.rows; }

    // Reduce v against the basis; the remainder's pivot, if any, extends it.
    bool insert(const Field& F, Vec v) {
        for (int r = 0; r < basis.rows; ++r) {
            int p = pivot(r);
            if (v[p].v != 0) v = vsub(F, v, vscale(F, v[p], basis.row(r)));
        }
        int p = 0;
        while (p < ambient && v[p].v == 0) ++p;
        if (p == ambient) return false;
        v = vscale(F, F.inv(v[p]), v);
        for (int r = 0; r < basis.rows; ++r) {
            Vec row = basis.row(r);
            if (row[p].v != 0) basis.set_row(r, vsub(F, row, vscale(F, row[p], v)));
        }
        int pos = 0;
        while (pos < basis.rows && pivot(pos) < p) ++pos;
        basis.rows = static_cast<std::uint8_t>(basis.rows + 1);
        for (int r = basis.rows - 1; r > pos; --r) basis.set_row(r, basis.row(r - 1));
        basis.set_row(pos, v);
        return true;
    }

    bool contains(const Field& F, Vec v) const {
        for (int r = 0; r < basis.rows; ++r) {
            int p = pivot(r);
            if (v[p].v != 0) v = vsub(F, v, vscale(F, v[p], basis.row(r)));
        }
        return v.is_zero();
    }

    bool contains(const Field& F, const Subspace& other) const {
        for (int r = 0; r < other.basis.rows; ++r)
            if (!contains(F, other.basis.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }

private:
    int pivot(int r) const {
        for (int j = 0; j < ambient; ++j)
            if (basis.at(r, j).v != 0) return j;
        return ambient;
    }
};

// Solutions of the affine system x . coeff_i = rhs_i over n unknowns:
// a particular solution plus the solution space of the homogeneous system.
struct AffineSolutions {
    Vec particular;
    Subspace kernel;
};

inline std::optional<AffineSolutions> solve_equations(
    const Field& F, int n, const std::vector<std::pair<Vec, Fe>>& eqs) {
    // rref of the augmented rows (coeffs | rhs), built incrementally.
    Subspace rows = Subspace::empty(n + 1);
    for (const auto& [coeffs, rhs] : eqs) {
        Vec aug = Vec::zero(n + 1);
        for (int i = 0; i < n; ++i) aug[i] = coeffs[i];
        aug[n] = rhs;
        rows.insert(F, aug);
    }
    std::array<int, max_dim + 1> pivot_row;
    pivot_row.fill(-1);
    for (int r = 0; r < rows.basis.rows; ++r) {
        int p = 0;
        while (rows.basis.at(r, p).v == 0) ++p;
        if (p == n) return std::nullopt; // 0 = nonzero
        pivot_row[p] = r;
    }
    AffineSolutions sol;
    sol.particular = Vec::zero(n);
    for (int j = 0; j < n; ++j)
        if (pivot_row[j] >= 0) sol.particular[j] = rows.basis.at(pivot_row[j], n);
    sol.kernel = Subspace::empty(n);
    for (int j = 0; j < n; ++j) {
        if (pivot_row[j] >= 0) continue; // bound variable
        Vec v = Vec::zero(n);
        v[j] = F.one();
        for (int i = 0; i < n; ++i)
            if (pivot_row[i] >= 0) v[i] = F.neg(rows.basis.at(pivot_row[i], j));
        sol.kernel.insert(F, v);
    }
    return sol;
}

// {v : v * M = 0}; each column of M is one linear condition on v.
inline Subspace left_kernel(const Field& F, const Mat& M) {
    std::vector<std::pair<Vec, Fe>> eqs;
    for (int j = 0; j < M.cols; ++j) {
        Vec col = Vec::zero(M.rows);
        for (int i = 0; i < M.rows; ++i) col[i] = M.at(i, j);
        eqs.emplace_back(col, F.zero());
    }
    auto sol = solve_equations(F, M.rows, eqs);
    return sol->kernel;
}

} // namespace liep
