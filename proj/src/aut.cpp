#include "liep/aut.hpp"

namespace liep {

bool is_automorphism(const LieAlg& L, const Mat& A) {
    const Field& F = L.field();
    const int n = L.dim();
    if (A.rows != n || A.cols != n) return false;
    if (det(F, A).v == 0) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec lhs = bracket(L, A.row(i), A.row(j));
            Vec rhs = mul_vec_mat(F, L.sc(i, j), A);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

namespace {

u128 gl_order(int q, int n) {
    u128 qn = 1;
    for (int i = 0; i < n; ++i) qn *= static_cast<unsigned>(q);
    u128 r = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= static_cast<unsigned>(q);
    }
    return r;
}

enum class Shape { Abelian, L32, L42, L43 };

Shape shape_of(const LieAlg& L) {
    const std::string& n = L.name();
    if (n == "L_{3,2}") return Shape::L32;
    if (n == "L_{4,2}") return Shape::L42;
    if (n == "L_{4,3}") return Shape::L43;
    if (is_catalog_name(n)) return Shape::Abelian;
    throw DomainError("automorphism shapes exist for catalog algebras only; use recognize first");
}

// Odometer over `count` field indices; fn returns nothing, iteration is
// lexicographic with params[0] outermost.
template <typename Fn>
void iterate_params(int q, int count, Fn&& fn) {
    std::vector<int> v(count, 0);
    for (;;) {
        fn(v);
        int i = count - 1;
        while (i >= 0 && ++v[i] == q) v[i--] = 0;
        if (i < 0) break;
    }
}

} // namespace

u128 automorphism_count(const LieAlg& L) {
    const int q = L.field().order();
    switch (shape_of(L)) {
        case Shape::Abelian: return gl_order(q, L.dim());
        case Shape::L32: return gl_order(q, 2) * q * q;
        case Shape::L42: {
            u128 r = gl_order(q, 2);
            for (int i = 0; i < 5; ++i) r *= static_cast<unsigned>(q);
            return r * static_cast<unsigned>(q - 1);
        }
        case Shape::L43: {
            u128 r = static_cast<unsigned>(q - 1);
            r *= static_cast<unsigned>(q - 1);
            for (int i = 0; i < 5; ++i) r *= static_cast<unsigned>(q);
            return r;
        }
    }
    return 0;
}

void for_each_automorphism(const LieAlg& L, const std::function<void(const Mat&)>& fn) {
    const Field& F = L.field();
    const int q = F.order();
    const int n = L.dim();
    const Shape shape = shape_of(L);
    auto fe = [](int i) { return Fe{static_cast<std::uint16_t>(i)}; };

    switch (shape) {
        case Shape::Abelian:
            iterate_params(q, n * n, [&](const std::vector<int>& v) {
                Mat A = Mat::zero(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) A.at(i, j) = fe(v[i * n + j]);
                if (det(F, A).v != 0) fn(A);
            });
            break;
        case Shape::L32:
            // params: a11 a12 a13 a21 a22 a23
            iterate_params(q, 6, [&](const std::vector<int>& v) {
                const Fe d = F.sub(F.mul(fe(v[0]), fe(v[4])), F.mul(fe(v[1]), fe(v[3])));
                if (d.v == 0) return;
                Mat A = Mat::zero(3, 3);
                A.at(0, 0) = fe(v[0]); A.at(0, 1) = fe(v[1]); A.at(0, 2) = fe(v[2]);
                A.at(1, 0) = fe(v[3]); A.at(1, 1) = fe(v[4]); A.at(1, 2) = fe(v[5]);
                A.at(2, 2) = d;
                fn(A);
            });
            break;
        case Shape::L42:
            // params: a11 a12 a13 a14 a21 a22 a23 a24 a43 a44
            iterate_params(q, 10, [&](const std::vector<int>& v) {
                const Fe d = F.sub(F.mul(fe(v[0]), fe(v[5])), F.mul(fe(v[1]), fe(v[4])));
                if (d.v == 0 || v[9] == 0) return;
                Mat A = Mat::zero(4, 4);
                for (int j = 0; j < 4; ++j) {
                    A.at(0, j) = fe(v[j]);
                    A.at(1, j) = fe(v[4 + j]);
                }
                A.at(2, 2) = d;
                A.at(3, 2) = fe(v[8]);
                A.at(3, 3) = fe(v[9]);
                fn(A);
            });
            break;
        case Shape::L43:
            // params: a11 a12 a13 a14 a22 a23 a24, with a11 a22 != 0
            iterate_params(q, 7, [&](const std::vector<int>& v) {
                if (v[0] == 0 || v[4] == 0) return;
                const Fe a11 = fe(v[0]), a22 = fe(v[4]), a23 = fe(v[5]);
                const Fe d1 = F.mul(a11, a22);
                Mat A = Mat::zero(4, 4);
                A.at(0, 0) = a11; A.at(0, 1) = fe(v[1]); A.at(0, 2) = fe(v[2]); A.at(0, 3) = fe(v[3]);
                A.at(1, 1) = a22; A.at(1, 2) = a23; A.at(1, 3) = fe(v[6]);
                A.at(2, 2) = d1; A.at(2, 3) = F.mul(a11, a23);
                A.at(3, 3) = F.mul(a11, d1);
                fn(A);
            });
            break;
    }
}

std::vector<Mat> enumerate_automorphisms(const LieAlg& L, std::uint64_t budget) {
    const u128 count = automorphism_count(L);
    if (count > budget)
        throw BudgetError("automorphism group of " + L.name() + " has " +
                          std::to_string(static_cast<double>(count)) +
                          " elements, over the materialisation budget");
    std::vector<Mat> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_automorphism(L, [&](const Mat& A) { out.push_back(A); });
    return out;
}

namespace {

void append_checked(const LieAlg& L, std::vector<Mat>& gens, const Mat& A) {
    if (!is_automorphism(L, A))
        throw DomainError("internal: generator is not an automorphism of " + L.name());
    gens.push_back(A);
}

// GL_n generators: transvections over an additive basis plus one dilation.
void gl_generators(const Field& F, int n, std::vector<Mat>& out) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (Fe c : F.additive_basis()) {
                Mat A = Mat::identity(F, n);
                A.at(i, j) = c;
                out.push_back(A);
            }
        }
    if (F.order() > 2) {
        Mat A = Mat::identity(F, n);
        A.at(0, 0) = F.generator();
        out.push_back(A);
    }
}

} // namespace

std::vector<Mat> aut_generators(const LieAlg& L) {
    const Field& F = L.field();
    const int n = L.dim();
    const Shape shape = shape_of(L);
    std::vector<Mat> gens;

    auto lift_gl2 = [&](const Mat& M) {
        // embed a 2x2 block into the catalog shape, rows 3/4 as forced
        Mat A = Mat::zero(n, n);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A.at(i, j) = M.at(i, j);
        A.at(2, 2) = det(F, M);
        if (n == 4) A.at(3, 3) = F.one();
        return A;
    };

    switch (shape) {
        case Shape::Abelian: {
            std::vector<Mat> raw;
            gl_generators(F, n, raw);
            for (const Mat& A : raw) append_checked(L, gens, A);
            break;
        }
        case Shape::L32:
        case Shape::L42: {
            std::vector<Mat> gl2;
            gl_generators(F, 2, gl2);
            for (const Mat& M : gl2) append_checked(L, gens, lift_gl2(M));
            // x1 -> x1 + c x3 etc.: every free entry of the shape
            std::vector<std::pair<int, int>> free_entries = {{0, 2}, {1, 2}};
            if (shape == Shape::L42) {
                free_entries.push_back({0, 3});
                free_entries.push_back({1, 3});
                free_entries.push_back({3, 2});
            }
            for (auto [i, j] : free_entries)
                for (Fe c : F.additive_basis()) {
                    Mat A = Mat::identity(F, n);
                    A.at(i, j) = c;
                    append_checked(L, gens, A);
                }
            if (shape == Shape::L42 && F.order() > 2) {
                Mat A = Mat::identity(F, 4);
                A.at(3, 3) = F.generator();
                append_checked(L, gens, A);
            }
            break;
        }
        case Shape::L43: {
            auto from_params = [&](Fe a11, Fe a12, Fe a13, Fe a14, Fe a22, Fe a23, Fe a24) {
                Mat A = Mat::zero(4, 4);
                const Fe d1 = F.mul(a11, a22);
                A.at(0, 0) = a11; A.at(0, 1) = a12; A.at(0, 2) = a13; A.at(0, 3) = a14;
                A.at(1, 1) = a22; A.at(1, 2) = a23; A.at(1, 3) = a24;
                A.at(2, 2) = d1; A.at(2, 3) = F.mul(a11, a23);
                A.at(3, 3) = F.mul(a11, d1);
                return A;
            };
            const Fe o = F.one(), z = F.zero(), g = F.generator();
            if (F.order() > 2) {
                append_checked(L, gens, from_params(g, z, z, z, o, z, z));
                append_checked(L, gens, from_params(o, z, z, z, g, z, z));
            }
            for (Fe c : F.additive_basis()) {
                append_checked(L, gens, from_params(o, c, z, z, o, z, z));
                append_checked(L, gens, from_params(o, z, c, z, o, z, z));
                append_checked(L, gens, from_params(o, z, z, c, o, z, z));
                append_checked(L, gens, from_params(o, z, z, z, o, c, z));
                append_checked(L, gens, from_params(o, z, z, z, o, z, c));
            }
            break;
        }
    }
    return gens;
}

PreparedAut prepare_aut(const LieAlg& L, const Mat& A) {
    if (!is_automorphism(L, A)) throw DomainError("matrix is not an automorphism");
    auto inv = mat_inverse(L.field(), A);
    return PreparedAut{A, *inv};
}

PMapImages conjugate_prepared(const LieAlg& L, const PreparedAut& pa, const PMapImages& P) {
    const Field& F = L.field();
    PMapImages out = PMapImages::zero(L.dim());
    for (int i = 0; i < L.dim(); ++i) {
        Vec w = evaluate(L, P, pa.A.row(i));
        out.imgs[i] = mul_vec_mat(F, w, pa.Ainv);
    }
    return out;
}

PMapImages conjugate_pmap(const LieAlg& L, const Mat& A, const PMapImages& P) {
    return conjugate_prepared(L, prepare_aut(L, A), P);
}

} // namespace liep
