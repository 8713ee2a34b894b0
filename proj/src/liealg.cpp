#include "liep/liealg.hpp"

#include <stdexcept>

namespace liep {

namespace {

// Lower central series of the given structure constants; returns the class,
// or -1 if the chain stabilises above zero.
int compute_class(const Field& F, int dim, const Vec sc[max_dim][max_dim],
                  std::vector<Subspace>* chain_out) {
    std::vector<Subspace> chain;
    chain.push_back(Subspace::full(F, dim));
    for (;;) {
        const Subspace& g = chain.back();
        Subspace next = Subspace::empty(dim);
        for (int r = 0; r < g.dim(); ++r) {
            Vec u = g.basis.row(r);
            for (int i = 0; i < dim; ++i) {
                Vec w = Vec::zero(dim);
                for (int a = 0; a < dim; ++a) {
                    if (u[a].v == 0) continue;
                    for (int m = 0; m < dim; ++m)
                        w[m] = F.add(w[m], F.mul(u[a], sc[a][i][m]));
                }
                if (!w.is_zero()) next.insert(F, w);
            }
        }
        if (next.dim() == 0) {
            if (chain_out) *chain_out = chain;
            return static_cast<int>(chain.size());
        }
        if (next.dim() == g.dim()) {
            if (chain_out) *chain_out = chain;
            return -1; // stabilised, not nilpotent
        }
        chain.push_back(next);
    }
}

} // namespace

LieAlg::LieAlg(Field field, int dim, const std::vector<BracketEntry>& brackets,
               std::string name)
    : F_(std::move(field)), dim_(dim), name_(std::move(name)) {
    if (dim < 1 || dim > max_dim)
        throw DomainError("dimension must be between 1 and " + std::to_string(max_dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) sc_[i][j] = Vec::zero(dim);
    for (const auto& b : brackets) {
        if (b.i < 0 || b.j >= dim || b.i >= b.j)
            throw DomainError("bracket indices must satisfy 0 <= i < j < dim");
        if (b.value.size() != dim)
            throw DomainError("bracket value has wrong length");
        sc_[b.i][b.j] = b.value;
        sc_[b.j][b.i] = vneg(F_, b.value);
    }
    // Jacobi on basis triples.
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                Vec s = bracket(*this, sc_[i][j], Vec::unit(F_, dim, k));
                s = vadd(F_, s, bracket(*this, sc_[j][k], Vec::unit(F_, dim, i)));
                s = vadd(F_, s, bracket(*this, sc_[k][i], Vec::unit(F_, dim, j)));
                if (!s.is_zero())
                    throw DomainError("structure constants violate the Jacobi identity on triple (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")");
            }
    class_ = compute_class(F_, dim_, sc_, nullptr);
}

Vec bracket(const LieAlg& L, const Vec& u, const Vec& v) {
    const Field& F = L.field();
    Vec r = Vec::zero(L.dim());
    for (int i = 0; i < L.dim(); ++i) {
        if (u[i].v == 0) continue;
        for (int j = 0; j < L.dim(); ++j) {
            if (v[j].v == 0 || i == j) continue;
            const Fe s = F.mul(u[i], v[j]);
            const Vec& c = L.sc(i, j);
            for (int m = 0; m < L.dim(); ++m)
                r[m] = F.add(r[m], F.mul(s, c[m]));
        }
    }
    return r;
}

Mat ad_matrix(const LieAlg& L, const Vec& x) {
    Mat M = Mat::zero(L.dim(), L.dim());
    for (int j = 0; j < L.dim(); ++j) {
        Vec w = bracket(L, Vec::unit(L.field(), L.dim(), j), x);
        M.set_row(j, w);
    }
    return M;
}

AlgInvariants invariants(const LieAlg& L) {
    const Field& F = L.field();
    const int n = L.dim();
    AlgInvariants inv;

    // center: common kernel of all v -> [v, x_i].
    std::vector<std::pair<Vec, Fe>> eqs;
    for (int i = 0; i < n; ++i) {
        Mat M = ad_matrix(L, Vec::unit(F, n, i));
        for (int c = 0; c < n; ++c) {
            Vec col = Vec::zero(n);
            for (int r = 0; r < n; ++r) col[r] = M.at(r, c);
            eqs.emplace_back(col, F.zero());
        }
    }
    inv.center = solve_equations(F, n, eqs)->kernel;

    inv.derived = Subspace::empty(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!L.sc(i, j).is_zero()) inv.derived.insert(F, L.sc(i, j));

    Vec sc_copy[max_dim][max_dim];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sc_copy[i][j] = L.sc(i, j);
    inv.nilpotency_class = compute_class(F, n, sc_copy, &inv.lcs);
    return inv;
}

std::vector<LieAlg> catalog(const Field& F, int dim) {
    if (dim < 1 || dim > max_dim) throw DomainError("catalog dimension must be in [1,4]");
    std::vector<LieAlg> out;
    const std::string abelian = "L_{" + std::to_string(dim) + ",1}";
    out.emplace_back(F, dim, std::vector<BracketEntry>{}, abelian);
    if (dim == 3) {
        Vec x3 = Vec::unit(F, 3, 2);
        out.emplace_back(F, 3, std::vector<BracketEntry>{{0, 1, x3}}, "L_{3,2}");
    }
    if (dim == 4) {
        Vec x3 = Vec::unit(F, 4, 2);
        Vec x4 = Vec::unit(F, 4, 3);
        out.emplace_back(F, 4, std::vector<BracketEntry>{{0, 1, x3}}, "L_{4,2}");
        out.emplace_back(F, 4, std::vector<BracketEntry>{{0, 1, x3}, {0, 2, x4}}, "L_{4,3}");
    }
    return out;
}

LieAlg catalog_algebra(const Field& F, const std::string& name) {
    for (int dim = 1; dim <= max_dim; ++dim)
        for (auto& L : catalog(F, dim))
            if (L.name() == name) return L;
    throw DomainError("unknown catalog algebra '" + name + "'");
}

bool is_catalog_name(const std::string& name) {
    static const char* names[] = {"L_{1,1}", "L_{2,1}", "L_{3,1}", "L_{3,2}",
                                  "L_{4,1}", "L_{4,2}", "L_{4,3}"};
    for (const char* n : names)
        if (name == n) return true;
    return false;
}

namespace {

// Solve [v, w] = c * z for the scalar c, given that [v, w] lies in <z>.
Fe ratio_in_line(const Field& F, const Vec& value, const Vec& z) {
    for (int m = 0; m < value.size(); ++m)
        if (z[m].v != 0) return F.div(value[m], z[m]);
    throw DomainError("internal: zero line");
}

} // namespace

Recognition recognize(const LieAlg& L) {
    const Field& F = L.field();
    const int n = L.dim();
    if (!L.is_nilpotent()) throw DomainError("not nilpotent");
    const int cls = L.nilpotency_class();

    Mat B = Mat::zero(n, n); // rows: the adapted basis in L-coordinates
    std::string name;

    if (cls == 1) {
        name = "L_{" + std::to_string(n) + ",1}";
        B = Mat::identity(F, n);
    } else if (cls == 2) {
        name = n == 3 ? "L_{3,2}" : "L_{4,2}";
        int bi = -1, bj = -1;
        for (int i = 0; i < n && bi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!L.sc(i, j).is_zero()) {
                    bi = i;
                    bj = j;
                    break;
                }
        Vec u = Vec::unit(F, n, bi), v = Vec::unit(F, n, bj);
        Vec w = L.sc(bi, bj);
        B.set_row(0, u);
        B.set_row(1, v);
        B.set_row(2, w);
        if (n == 4) {
            // z: central, independent of w.
            AlgInvariants inv = invariants(L);
            Subspace span_w = Subspace::empty(n);
            span_w.insert(F, w);
            bool found = false;
            for (int r = 0; r < inv.center.dim() && !found; ++r) {
                Vec z = inv.center.basis.row(r);
                if (!span_w.contains(F, z)) {
                    B.set_row(3, z);
                    found = true;
                }
            }
            if (!found) throw DomainError("internal: class-2 center too small");
        }
    } else if (cls == 3) {
        name = "L_{4,3}";
        int ui = -1;
        for (int i = 0; i < n; ++i) {
            Mat M = ad_matrix(L, Vec::unit(F, n, i));
            if (!(mat_mul(F, M, M) == Mat::zero(n, n))) {
                ui = i;
                break;
            }
        }
        if (ui < 0) throw DomainError("internal: class-3 without ad^2 != 0 on the basis");
        Vec u = Vec::unit(F, n, ui);
        int vj = -1;
        Vec w, z;
        for (int j = 0; j < n; ++j) {
            if (j == ui) continue;
            Vec wj = bracket(L, u, Vec::unit(F, n, j));
            Vec zj = bracket(L, u, wj);
            if (!zj.is_zero()) {
                vj = j;
                w = wj;
                z = zj;
                break;
            }
        }
        if (vj < 0) throw DomainError("internal: class-3 basis search failed");
        Vec v = Vec::unit(F, n, vj);
        // force [v, w] = 0 by shifting v along u  ([v,w] lies in gamma_3 = <z>)
        Vec vw = bracket(L, v, w);
        if (!vw.is_zero()) {
            Fe c = ratio_in_line(F, vw, z);
            Vec cu = vscale(F, c, u);
            v = vsub(F, v, cu);
        }
        B.set_row(0, u);
        B.set_row(1, v);
        B.set_row(2, w);
        B.set_row(3, z);
    } else {
        throw DomainError("unsupported nilpotency class");
    }

    auto Tinv_check = mat_inverse(F, B);
    if (!Tinv_check) throw DomainError("internal: recognition basis is singular");
    Recognition rec{name, *Tinv_check, catalog_algebra(F, name)};

    // bracket_std(e_i T, e_j T) must equal bracket_L(e_i, e_j) T.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec lhs = bracket(rec.standard, rec.T.row(i), rec.T.row(j));
            Vec rhs = mul_vec_mat(F, L.sc(i, j), rec.T);
            if (!(lhs == rhs)) throw DomainError("internal: recognition verification failed");
        }
    return rec;
}

} // namespace liep
