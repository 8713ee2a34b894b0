#include "liep/pmap.hpp"

#include <algorithm>

namespace liep {

PmapKey pmap_key(const PMapImages& P) {
    PmapKey k;
    for (int i = 0; i < P.dim; ++i)
        for (int j = 0; j < P.dim; ++j)
            k.b[i * max_dim + j] = static_cast<std::uint8_t>(P.imgs[i][j].v);
    return k;
}

namespace {

// Element of L (x) F[X] truncated at degree p-1: coefficient vectors by
// degree.  Degrees never exceed p-1 here because we bracket p-1 times with
// a degree-1 element.
struct PolyVec {
    std::array<Vec, 24> deg; // p <= 23
    int len = 0;
};

PolyVec poly_bracket(const LieAlg& L, const PolyVec& u, const PolyVec& v, int maxlen) {
    PolyVec r;
    r.len = std::min(maxlen, u.len + v.len - 1);
    for (int d = 0; d < r.len; ++d) r.deg[d] = Vec::zero(L.dim());
    for (int i = 0; i < u.len; ++i) {
        if (u.deg[i].is_zero()) continue;
        for (int j = 0; j < v.len && i + j < r.len; ++j) {
            Vec w = bracket(L, u.deg[i], v.deg[j]);
            r.deg[i + j] = vadd(L.field(), r.deg[i + j], w);
        }
    }
    return r;
}

} // namespace

std::vector<Vec> jacobson_si(const LieAlg& L, const Vec& a, const Vec& b) {
    const Field& F = L.field();
    const int p = F.p();
    PolyVec u; // a X + b
    u.len = 2;
    u.deg[0] = b;
    u.deg[1] = a;
    PolyVec w; // starts at a (x) 1
    w.len = 1;
    w.deg[0] = a;
    for (int step = 0; step < p - 1; ++step) w = poly_bracket(L, w, u, p);
    std::vector<Vec> s(p - 1, Vec::zero(L.dim()));
    for (int i = 1; i <= p - 1; ++i) {
        Vec coeff = i - 1 < w.len ? w.deg[i - 1] : Vec::zero(L.dim());
        s[i - 1] = vscale(F, F.inv(F.from_int(i)), coeff);
    }
    return s;
}

Vec evaluate(const LieAlg& L, const PMapImages& P, const Vec& x) {
    const Field& F = L.field();
    const int n = L.dim();
    if (L.semilinear_pmaps()) {
        Vec r = Vec::zero(n);
        for (int i = 0; i < n; ++i) {
            if (x[i].v == 0) continue;
            const Fe c = F.frobenius(x[i]);
            for (int m = 0; m < n; ++m) r[m] = F.add(r[m], F.mul(c, P.imgs[i][m]));
        }
        return r;
    }
    // general recursion, expanding strictly in basis-index order
    int i = 0;
    while (i < n && x[i].v == 0) ++i;
    if (i == n) return Vec::zero(n);
    Vec head = Vec::zero(n);
    head[i] = x[i];
    Vec rest = x;
    rest[i] = F.zero();
    Vec r = vscale(F, F.frobenius(x[i]), P.imgs[i]);
    bool rest_nonzero = false;
    for (int j = i + 1; j < n; ++j)
        if (rest[j].v != 0) rest_nonzero = true;
    if (rest_nonzero) {
        r = vadd(F, r, evaluate(L, P, rest));
        for (const Vec& s : jacobson_si(L, head, rest)) r = vadd(F, r, s);
    }
    return r;
}

namespace {

Mat mat_pow(const Field& F, const Mat& M, int e) {
    Mat r = Mat::identity(F, M.rows);
    for (int i = 0; i < e; ++i) r = mat_mul(F, r, M);
    return r;
}

} // namespace

bool is_valid_pmap(const LieAlg& L, const PMapImages& P, std::string* why) {
    const Field& F = L.field();
    const int n = L.dim();
    if (P.dim != n) {
        if (why) *why = "image count does not match the dimension";
        return false;
    }
    for (int i = 0; i < n; ++i) {
        Mat lhs = ad_matrix(L, P.imgs[i]);
        Mat rhs = mat_pow(F, ad_matrix(L, Vec::unit(F, n, i)), F.p());
        if (!(lhs == rhs)) {
            if (why)
                *why = "ad(x_" + std::to_string(i + 1) + "^{[p]}) differs from ad(x_" +
                       std::to_string(i + 1) + ")^p";
            return false;
        }
    }
    return true;
}

bool is_p_nilpotent(const LieAlg& L, const PMapImages& P) {
    const Field& F = L.field();
    const int n = L.dim();
    Subspace V = Subspace::full(F, n);
    for (int step = 0; step <= n; ++step) {
        Subspace next = Subspace::empty(n);
        for (int r = 0; r < V.dim(); ++r) {
            Vec w = evaluate(L, P, V.basis.row(r));
            if (!w.is_zero()) next.insert(F, w);
        }
        if (next.dim() == 0) return true;
        V = next;
    }
    return false;
}

bool is_restrictable(const LieAlg& L) {
    const Field& F = L.field();
    const int n = L.dim();
    for (int i = 0; i < n; ++i) {
        Mat target = mat_pow(F, ad_matrix(L, Vec::unit(F, n, i)), F.p());
        // ad(b) = target is linear in b: sum_m b_m ad(x_m) = target.
        std::vector<std::pair<Vec, Fe>> eqs;
        std::array<Mat, max_dim> ad_basis;
        for (int m = 0; m < n; ++m) ad_basis[m] = ad_matrix(L, Vec::unit(F, n, m));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                Vec coeff = Vec::zero(n);
                for (int m = 0; m < n; ++m) coeff[m] = ad_basis[m].at(r, c);
                eqs.emplace_back(coeff, target.at(r, c));
            }
        if (!solve_equations(F, n, eqs)) return false;
    }
    return true;
}

RestrictedAlg make_restricted(LieAlg L, PMapImages P) {
    std::string why;
    if (!is_valid_pmap(L, P, &why)) {
        if (!is_restrictable(L))
            throw DomainError("not restrictable: the algebra admits no [p]-map in characteristic " +
                              std::to_string(L.field().p()));
        throw DomainError("invalid [p]-map: " + why);
    }
    return RestrictedAlg{std::move(L), P};
}

PMapImages transport_pmap(const LieAlg& src, const PMapImages& P, const Mat& T,
                          const LieAlg& dst) {
    const Field& F = src.field();
    auto Tinv = mat_inverse(F, T);
    if (!Tinv) throw DomainError("transport matrix is singular");
    PMapImages out = PMapImages::zero(dst.dim());
    for (int i = 0; i < dst.dim(); ++i) {
        Vec pre = Tinv->row(i); // e_i T^{-1}
        out.imgs[i] = mul_vec_mat(F, evaluate(src, P, pre), T);
    }
    return out;
}

} // namespace liep
