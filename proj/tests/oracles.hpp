// Test-only helpers and independent oracles.  Everything here recomputes
// expected values by direct enumeration, without touching the production
// code paths it is used to check.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "liep/aut.hpp"
#include "liep/pmap.hpp"

namespace liep::testing {

inline Fe fe(const Field& F, long long n) { return F.from_int(n); }

// Vector from prime-subfield integers.
inline Vec iv(const Field& F, std::initializer_list<long long> vals) {
    Vec v = Vec::zero(static_cast<int>(vals.size()));
    int i = 0;
    for (long long x : vals) v[i++] = F.from_int(x);
    return v;
}

inline std::vector<Vec> all_vectors(const Field& F, int dim) {
    std::vector<Vec> out;
    std::uint64_t total = 1;
    for (int i = 0; i < dim; ++i) total *= F.order();
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec v = Vec::zero(dim);
        std::uint64_t rest = idx;
        for (int i = dim - 1; i >= 0; --i) {
            v[i] = Fe{static_cast<std::uint16_t>(rest % F.order())};
            rest /= F.order();
        }
        out.push_back(v);
    }
    return out;
}

// Squares by enumeration.
inline std::set<std::uint16_t> square_set(const Field& F) {
    std::set<std::uint16_t> s;
    for (Fe y : F.elements()) s.insert(F.mul(y, y).v);
    return s;
}

// {d + d^2} by enumeration.
inline std::set<std::uint16_t> artin_schreier_set(const Field& F) {
    std::set<std::uint16_t> s;
    for (Fe d : F.elements()) s.insert(F.add(d, F.mul(d, d)).v);
    return s;
}

// {beta d^3 + d} by enumeration.
inline std::set<std::uint16_t> k_beta_set(const Field& F, Fe beta) {
    std::set<std::uint16_t> s;
    for (Fe d : F.elements()) s.insert(F.add(F.mul(beta, F.mul(d, F.mul(d, d))), d).v);
    return s;
}

// Element-wise [p]-nilpotency: every single element must reach 0 under
// iterated evaluation.  Independent of the subspace-chain criterion.
inline bool pnilpotent_oracle(const LieAlg& L, const PMapImages& P) {
    for (const Vec& v0 : all_vectors(L.field(), L.dim())) {
        Vec v = v0;
        bool dead = false;
        std::uint64_t bound = 1;
        for (int i = 0; i < L.dim(); ++i) bound *= L.field().order();
        for (std::uint64_t step = 0; step <= bound; ++step) {
            if (v.is_zero()) {
                dead = true;
                break;
            }
            v = evaluate(L, P, v);
        }
        if (!dead) return false;
    }
    return true;
}

// Count automorphisms by filtering every dim x dim matrix.
inline std::uint64_t brute_force_aut_count(const LieAlg& L) {
    const Field& F = L.field();
    const int n = L.dim();
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= F.order();
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Mat A = Mat::zero(n, n);
        std::uint64_t rest = idx;
        for (int i = n * n - 1; i >= 0; --i) {
            A.e[(i / n) * Mat::cap + (i % n)] = Fe{static_cast<std::uint16_t>(rest % F.order())};
            rest /= F.order();
        }
        if (is_automorphism(L, A)) ++count;
    }
    return count;
}

inline Mat random_invertible(const Field& F, int n, std::mt19937_64& rng) {
    for (;;) {
        Mat A = Mat::zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                A.at(i, j) = Fe{static_cast<std::uint16_t>(rng() % F.order())};
        if (det(F, A).v != 0) return A;
    }
}

// Random automorphism as a random word in the generators (rejection over
// all invertible matrices is hopeless for the sparse groups, e.g. Aut of
// L_{4,3} over GF(5) is a 4e-7 fraction of GL_4).
inline Mat random_automorphism(const LieAlg& L, std::mt19937_64& rng) {
    const auto gens = aut_generators(L);
    Mat A = Mat::identity(L.field(), L.dim());
    if (gens.empty()) return A;
    for (int step = 0; step < 16; ++step)
        A = mat_mul(L.field(), A, gens[rng() % gens.size()]);
    return A;
}

// Rejection sampling over all invertible matrices: uniform over the group
// and independent of the generator set, but only usable when Aut(L) is a
// sizable fraction of GL_n (the abelian algebras).
inline Mat random_automorphism_rejection(const LieAlg& L, std::mt19937_64& rng) {
    for (;;) {
        Mat A = random_invertible(L.field(), L.dim(), rng);
        if (is_automorphism(L, A)) return A;
    }
}

// Orbit membership by BFS closure from `from` (generator conjugation).
inline bool conjugate_oracle(const LieAlg& L, const PMapImages& from, const PMapImages& to) {
    std::vector<PreparedAut> gens;
    for (const Mat& A : aut_generators(L)) gens.push_back(prepare_aut(L, A));
    std::unordered_set<PmapKey, PmapKeyHash> seen;
    std::vector<PMapImages> queue{from};
    seen.insert(pmap_key(from));
    while (!queue.empty()) {
        PMapImages cur = queue.back();
        queue.pop_back();
        if (cur == to) return true;
        for (const auto& g : gens) {
            PMapImages next = conjugate_prepared(L, g, cur);
            if (seen.insert(pmap_key(next)).second) queue.push_back(next);
        }
    }
    return false;
}

} // namespace liep::testing
