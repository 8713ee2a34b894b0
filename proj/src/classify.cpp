#include "liep/classify.hpp"

#include <algorithm>

#include "liep/aut.hpp"

namespace liep {

Fe canonical_xi(const Field& F, Fe xi) {
    Fe best = xi;
    for (Fe k : F.elements())
        if (F.in_artin_schreier(k)) best = std::min(best, F.add(xi, k));
    return best;
}

Fe canonical_square_class(const Field& F, Fe beta) {
    if (beta.v == 0) throw DomainError("square class of zero");
    Fe best = beta;
    for (Fe s : F.elements())
        if (s.v != 0) best = std::min(best, F.mul(beta, F.mul(s, s)));
    return best;
}

bool params_equivalent(const std::string& family, const Field& F,
                       const std::vector<Fe>& p1, const std::vector<Fe>& p2) {
    if (family == "K_{3,2}^1" || family == "K_{4,2}^1" || family == "K_{4,2}^4") {
        if (F.p() != 2) throw DomainError(family + " lives in characteristic 2");
        if (p1.size() != 1 || p2.size() != 1) throw DomainError("xi families take one parameter");
        return F.in_artin_schreier(F.add(p1[0], p2[0]));
    }
    if (family == "L_{4,3}^3") {
        if (F.p() < 5) throw DomainError("L_{4,3}^3 lives in characteristic >= 5");
        if (p1.size() != 1 || p2.size() != 1 || p1[0].v == 0 || p2[0].v == 0)
            throw DomainError("L_{4,3}^3 takes one nonzero parameter");
        return F.is_square(F.div(p1[0], p2[0]));
    }
    if (family == "K_{4,3}^3") {
        if (F.p() != 3) throw DomainError("K_{4,3}^3 lives in characteristic 3");
        if (p1.size() != 2 || p2.size() != 2 || p1[1].v == 0 || p2[1].v == 0)
            throw DomainError("K_{4,3}^3 takes parameters (alpha, beta) with beta != 0");
        const Fe a1 = p1[0], b1 = p1[1], a2 = p2[0], b2 = p2[1];
        Fe s;
        if (!F.is_square(F.div(b2, b1), &s)) return false;
        for (Fe r : {s, F.neg(s)}) {
            const Fe t = F.mul(a2, r);
            if (F.in_k_beta(b1, F.add(t, a1)) || F.in_k_beta(b1, F.sub(t, a1))) return true;
        }
        return false;
    }
    throw DomainError("family " + family + " is not parameterized");
}

std::pair<Fe, Fe> canonical_alpha_beta(const Field& F, Fe alpha, Fe beta) {
    // ascending scan: the first equivalent pair is the lexicographic minimum
    const std::vector<Fe> cur{alpha, beta};
    for (Fe a : F.elements())
        for (Fe b : F.elements()) {
            if (b.v == 0) continue;
            if (params_equivalent("K_{4,3}^3", F, cur, {a, b})) return {a, b};
        }
    return {alpha, beta}; // unreachable: every pair is equivalent to itself
}

namespace {

std::string subscript(int dim, int which) {
    return "{" + std::to_string(dim) + "," + std::to_string(which) + "}";
}

IsoLabel plain(const std::string& family) { return IsoLabel{family, {}}; }

// --- abelian: the chain structure of the semilinear map determines the
// class.  r_j = rank of phi^j, read off the twisted matrix products
// N_{j+1} = frobenius(N_j) * M.
IsoLabel classify_abelian(const LieAlg& L, const PMapImages& P) {
    const Field& F = L.field();
    const int n = L.dim();
    Mat M = Mat::zero(n, n);
    for (int i = 0; i < n; ++i) M.set_row(i, P.imgs[i]);
    std::vector<int> ranks;
    Mat N = M;
    for (int j = 1; j < n; ++j) {
        Subspace rows = Subspace::empty(n);
        for (int r = 0; r < n; ++r) rows.insert(F, N.row(r));
        ranks.push_back(rows.dim());
        Mat Nf = N;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) Nf.at(r, c) = F.frobenius(N.at(r, c));
        N = mat_mul(F, Nf, M);
    }
    int idx = 0;
    switch (n) {
        case 1: idx = 1; break;
        case 2: idx = ranks[0] == 0 ? 1 : 2; break;
        case 3:
            if (ranks == std::vector<int>{0, 0}) idx = 1;
            else if (ranks == std::vector<int>{1, 0}) idx = 2;
            else if (ranks == std::vector<int>{2, 1}) idx = 3;
            break;
        case 4:
            if (ranks == std::vector<int>{0, 0, 0}) idx = 1;
            else if (ranks == std::vector<int>{1, 0, 0}) idx = 2;
            else if (ranks == std::vector<int>{2, 0, 0}) idx = 3;
            else if (ranks == std::vector<int>{2, 1, 0}) idx = 4;
            else if (ranks == std::vector<int>{3, 2, 1}) idx = 5;
            break;
    }
    if (idx == 0) throw DomainError("internal: unexpected abelian rank sequence");
    return plain("L_" + subscript(n, 1) + "^" + std::to_string(idx));
}

void require(bool cond, const char* what) {
    if (!cond) throw DomainError(std::string("internal: ") + what);
}

// --- Heisenberg.  Valid nilpotent maps are (alpha, beta) with
// x1 -> alpha x3, x2 -> beta x3, x3 -> 0.
IsoLabel classify_heisenberg(const LieAlg& L, const PMapImages& P) {
    const Field& F = L.field();
    require(P.imgs[2].is_zero(), "Heisenberg map does not kill x3");
    const Fe alpha = P.imgs[0][2], beta = P.imgs[1][2];
    if (F.p() >= 3)
        return plain(alpha.v == 0 && beta.v == 0 ? "L_{3,2}^1" : "L_{3,2}^2");
    return IsoLabel{"K_{3,2}^1", {canonical_xi(F, F.mul(alpha, beta))}};
}

// Basis-change conjugation: B rows are the new basis in old coordinates.
PMapImages rebase(const LieAlg& L, const Mat& B, const PMapImages& P) {
    return conjugate_pmap(L, B, P);
}

Mat swap12(const LieAlg& L) {
    // x1 <-> x2; the x3 row picks up d = -1.
    const Field& F = L.field();
    Mat B = Mat::identity(F, L.dim());
    B.at(0, 0) = F.zero();
    B.at(0, 1) = F.one();
    B.at(1, 0) = F.one();
    B.at(1, 1) = F.zero();
    B.at(2, 2) = F.neg(F.one());
    return B;
}

IsoLabel classify_l42(const LieAlg& L, PMapImages P) {
    const Field& F = L.field();
    const bool char2 = F.p() == 2;
    const Vec phi3 = P.imgs[2], phi4 = P.imgs[3];

    if (!phi3.is_zero()) {
        // center action x3 -> x4 after replacing x4 with phi(x3)
        const Fe b3 = phi3[3];
        require(b3.v != 0, "nilpotent map with phi(x3) in <x3>");
        Mat B = Mat::identity(F, 4);
        B.at(3, 2) = phi3[2];
        B.at(3, 3) = b3;
        P = rebase(L, B, P);
        require(P.imgs[2] == Vec::unit(F, 4, 3) && P.imgs[3].is_zero(),
                "case-(ii) center normalization failed");
        const Fe a1 = P.imgs[0][2], a2 = P.imgs[1][2];
        if (!char2) return plain(a1.v == 0 && a2.v == 0 ? "L_{4,2}^5" : "L_{4,2}^6");
        return IsoLabel{"K_{4,2}^4", {canonical_xi(F, F.mul(a1, a2))}};
    }

    if (!phi4.is_zero()) {
        // center action x4 -> x3 after rescaling x4
        require(phi4[3].v == 0, "nilpotent map with phi(x4) outside <x3>");
        const Fe a4 = phi4[2];
        Mat B = Mat::identity(F, 4);
        B.at(3, 3) = F.frobenius_root(F.inv(a4));
        P = rebase(L, B, P);
        require(P.imgs[3] == Vec::unit(F, 4, 2) && P.imgs[2].is_zero(),
                "case-(iii) center normalization failed");
        const bool beta_zero = P.imgs[0][3].v == 0 && P.imgs[1][3].v == 0;
        if (!char2) return plain(beta_zero ? "L_{4,2}^7" : "L_{4,2}^8");
        return plain(beta_zero ? "K_{4,2}^5" : "K_{4,2}^6");
    }

    // trivial center action
    const Fe a1 = P.imgs[0][2], b1 = P.imgs[0][3];
    const Fe a2 = P.imgs[1][2], b2 = P.imgs[1][3];
    if (!char2) {
        Mat N = Mat::zero(2, 2);
        N.at(0, 0) = a1;
        N.at(0, 1) = a2;
        N.at(1, 0) = b1;
        N.at(1, 1) = b2;
        Subspace rows = Subspace::empty(2);
        rows.insert(F, N.row(0));
        rows.insert(F, N.row(1));
        switch (rows.dim()) {
            case 0: return plain("L_{4,2}^1");
            case 2: return plain("L_{4,2}^4");
            default: return plain(b1.v == 0 && b2.v == 0 ? "L_{4,2}^2" : "L_{4,2}^3");
        }
    }
    if (b1.v == 0 && b2.v == 0) {
        // image inside <x3>: the K_{3,2}^1(xi) + F analysis applies
        return IsoLabel{"K_{4,2}^1", {canonical_xi(F, F.mul(a1, a2))}};
    }
    // image not inside <x3>: normalize towards the K^2/K^3 shapes
    if (P.imgs[0].is_zero()) P = rebase(L, swap12(L), P);
    require(!P.imgs[0].is_zero(), "case-(i) has some nonzero image");
    if (P.imgs[1].is_zero()) return plain("K_{4,2}^2"); // beta_1 != 0 forced
    if (P.imgs[1][3].v == 0) P = rebase(L, swap12(L), P);
    require(P.imgs[1][3].v != 0, "one of the x4 coefficients is nonzero");
    {
        // x4 <- phi(x2), so phi(x2) = x4
        Mat B = Mat::identity(F, 4);
        B.at(3, 2) = P.imgs[1][2];
        B.at(3, 3) = P.imgs[1][3];
        P = rebase(L, B, P);
    }
    {
        // x1 <- x1 + sqrt(beta_1) x2 removes the x4 part of phi(x1)
        Mat B = Mat::identity(F, 4);
        B.at(0, 1) = F.frobenius_root(P.imgs[0][3]);
        P = rebase(L, B, P);
    }
    require(P.imgs[0][3].v == 0, "phi(x1) should now lie in <x3>");
    if (P.imgs[0][2].v == 0) return plain("K_{4,2}^2"); // phi(x1)=0, phi(x2)=x4
    return plain("K_{4,2}^3");
}

IsoLabel classify_l43(const LieAlg& L, const PMapImages& P) {
    const Field& F = L.field();
    require(P.imgs[3].is_zero(), "nilpotent map with phi(x4) != 0");
    const Fe alpha = P.imgs[0][3], beta = P.imgs[1][3], gamma = P.imgs[2][3];
    if (F.p() == 3) {
        if (gamma.v != 0) return plain("K_{4,3}^2");
        if (beta.v == 0) return plain("K_{4,3}^1");
        auto [ca, cb] = canonical_alpha_beta(F, alpha, beta);
        return IsoLabel{"K_{4,3}^3", {ca, cb}};
    }
    if (gamma.v != 0) return plain("L_{4,3}^4");
    if (beta.v != 0) return IsoLabel{"L_{4,3}^3", {canonical_square_class(F, beta)}};
    if (alpha.v != 0) return plain("L_{4,3}^2");
    return plain("L_{4,3}^1");
}

} // namespace

bool k42_char2_image_meets_x3(const LieAlg& L, const PMapImages& P) {
    const Field& F = L.field();
    const int q = F.order();
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            Vec v = Vec::zero(4);
            v[0] = Fe{static_cast<std::uint16_t>(a)};
            v[1] = Fe{static_cast<std::uint16_t>(b)};
            Vec w = evaluate(L, P, v);
            if (w[2].v != 0 && w[3].v == 0) return true;
        }
    return false;
}

IsoLabel classify(const RestrictedAlg& R) {
    Recognition rec = recognize(R.alg);
    PMapImages P = transport_pmap(R.alg, R.pmap, rec.T, rec.standard);
    std::string why;
    if (!is_valid_pmap(rec.standard, P, &why))
        throw DomainError("invalid [p]-map: " + why);
    if (!is_p_nilpotent(rec.standard, P)) throw DomainError("not [p]-nilpotent");
    const LieAlg& C = rec.standard;
    if (rec.name == "L_{3,2}") return classify_heisenberg(C, P);
    if (rec.name == "L_{4,2}") return classify_l42(C, P);
    if (rec.name == "L_{4,3}") return classify_l43(C, P);
    return classify_abelian(C, P);
}

namespace {

// canonical xi representatives, ascending
std::vector<Fe> xi_reps(const Field& F) {
    std::vector<Fe> reps;
    for (Fe x : F.elements()) {
        Fe c = canonical_xi(F, x);
        if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::vector<Fe> square_class_reps(const Field& F) {
    std::vector<Fe> reps;
    for (Fe x : F.elements()) {
        if (x.v == 0) continue;
        Fe c = canonical_square_class(F, x);
        if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

} // namespace

PMapImages class_representative(const LieAlg& L, const IsoLabel& label) {
    const Field& F = L.field();
    const int n = L.dim();
    PMapImages P = PMapImages::zero(n);
    auto img = [&](int i, int j, Fe c) { P.imgs[i][j] = c; };
    const std::string& f = label.family;
    const auto& par = label.params;

    // abelian chains L_{n,1}^i
    for (int dim = 1; dim <= 4; ++dim) {
        if (f.rfind("L_{" + std::to_string(dim) + ",1}^", 0) == 0) {
            const int idx = f.back() - '0';
            auto chain = [&](std::initializer_list<std::pair<int, int>> arrows) {
                for (auto [i, j] : arrows) img(i, j, F.one());
            };
            if (dim == 2 && idx == 2) chain({{0, 1}});
            if (dim == 3 && idx == 2) chain({{0, 1}});
            if (dim == 3 && idx == 3) chain({{0, 1}, {1, 2}});
            if (dim == 4 && idx == 2) chain({{0, 1}});
            if (dim == 4 && idx == 3) chain({{0, 1}, {2, 3}});
            if (dim == 4 && idx == 4) chain({{0, 1}, {1, 2}});
            if (dim == 4 && idx == 5) chain({{0, 1}, {1, 2}, {2, 3}});
            return P;
        }
    }
    if (f == "L_{3,2}^1") return P;
    if (f == "L_{3,2}^2") { img(0, 2, F.one()); return P; }
    if (f == "K_{3,2}^1") { img(0, 2, F.one()); img(1, 2, par.at(0)); return P; }
    if (f == "L_{4,2}^1") return P;
    if (f == "L_{4,2}^2") { img(0, 2, F.one()); return P; }
    if (f == "L_{4,2}^3") { img(0, 3, F.one()); return P; }
    if (f == "L_{4,2}^4") { img(0, 2, F.one()); img(1, 3, F.one()); return P; }
    if (f == "L_{4,2}^5") { img(2, 3, F.one()); return P; }
    if (f == "L_{4,2}^6") { img(1, 2, F.one()); img(2, 3, F.one()); return P; }
    if (f == "L_{4,2}^7") { img(3, 2, F.one()); return P; }
    if (f == "L_{4,2}^8") { img(3, 2, F.one()); img(1, 3, F.one()); return P; }
    if (f == "K_{4,2}^1") { img(0, 2, F.one()); img(1, 2, par.at(0)); return P; }
    if (f == "K_{4,2}^2") { img(0, 3, F.one()); return P; }
    if (f == "K_{4,2}^3") { img(0, 2, F.one()); img(1, 3, F.one()); return P; }
    if (f == "K_{4,2}^4") { img(2, 3, F.one()); img(0, 2, F.one()); img(1, 2, par.at(0)); return P; }
    if (f == "K_{4,2}^5") { img(3, 2, F.one()); return P; }
    if (f == "K_{4,2}^6") { img(3, 2, F.one()); img(1, 3, F.one()); return P; }
    if (f == "L_{4,3}^1" || f == "K_{4,3}^1") return P;
    if (f == "L_{4,3}^2") { img(0, 3, F.one()); return P; }
    if (f == "L_{4,3}^3") { img(1, 3, par.at(0)); return P; }
    if (f == "L_{4,3}^4" || f == "K_{4,3}^2") { img(2, 3, F.one()); return P; }
    if (f == "K_{4,3}^3") { img(0, 3, par.at(0)); img(1, 3, par.at(1)); return P; }
    throw DomainError("unknown family " + f);
}

ClassList list_classes(const LieAlg& L) {
    const Field& F = L.field();
    const std::string& name = L.name();
    if (!is_catalog_name(name))
        throw DomainError("list_classes expects a catalog algebra; use recognize first");
    ClassList out;
    out.algebra = name;
    auto push = [&](const IsoLabel& lbl) {
        out.entries.push_back({lbl, class_representative(L, lbl)});
    };
    auto push_plain = [&](const std::string& fam) { push(IsoLabel{fam, {}}); };

    if (name == "L_{1,1}") push_plain("L_{1,1}^1");
    else if (name == "L_{2,1}") {
        push_plain("L_{2,1}^1");
        push_plain("L_{2,1}^2");
    } else if (name == "L_{3,1}") {
        for (int i = 1; i <= 3; ++i) push_plain("L_{3,1}^" + std::to_string(i));
    } else if (name == "L_{4,1}") {
        for (int i = 1; i <= 5; ++i) push_plain("L_{4,1}^" + std::to_string(i));
    } else if (name == "L_{3,2}") {
        if (F.p() >= 3) {
            push_plain("L_{3,2}^1");
            push_plain("L_{3,2}^2");
        } else {
            for (Fe xi : xi_reps(F)) push(IsoLabel{"K_{3,2}^1", {xi}});
        }
    } else if (name == "L_{4,2}") {
        if (F.p() >= 3) {
            for (int i = 1; i <= 8; ++i) push_plain("L_{4,2}^" + std::to_string(i));
        } else {
            for (Fe xi : xi_reps(F)) push(IsoLabel{"K_{4,2}^1", {xi}});
            push_plain("K_{4,2}^2");
            push_plain("K_{4,2}^3");
            for (Fe xi : xi_reps(F)) push(IsoLabel{"K_{4,2}^4", {xi}});
            push_plain("K_{4,2}^5");
            push_plain("K_{4,2}^6");
        }
    } else if (name == "L_{4,3}") {
        if (F.p() == 2) {
            out.note = "not restrictable in characteristic 2";
        } else if (F.p() == 3) {
            push_plain("K_{4,3}^1");
            push_plain("K_{4,3}^2");
            // ascending scan: a pair equivalent to no earlier representative
            // is the lexicographic minimum of a fresh class
            std::vector<std::pair<Fe, Fe>> reps;
            for (Fe a : F.elements())
                for (Fe b : F.elements()) {
                    if (b.v == 0) continue;
                    bool known = false;
                    for (auto& [ra, rb] : reps)
                        if (params_equivalent("K_{4,3}^3", F, {a, b}, {ra, rb})) known = true;
                    if (!known) reps.emplace_back(a, b);
                }
            for (auto& [a, b] : reps) push(IsoLabel{"K_{4,3}^3", {a, b}});
        } else {
            push_plain("L_{4,3}^1");
            push_plain("L_{4,3}^2");
            for (Fe b : square_class_reps(F)) push(IsoLabel{"L_{4,3}^3", {b}});
            push_plain("L_{4,3}^4");
        }
    }
    return out;
}

bool are_isomorphic(const RestrictedAlg& R1, const RestrictedAlg& R2) {
    if (!R1.alg.field().same_as(R2.alg.field())) return false;
    if (classify(R1) == classify(R2)) return true;
    return false;
}

} // namespace liep
