#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liep/liealg.hpp"

namespace liep {

// A [p]-map given by the images of the basis vectors: imgs[i] = x_i^{[p]}.
struct PMapImages {
    std::array<Vec, max_dim> imgs{};
    int dim = 0;

    static PMapImages zero(int dim) {
        PMapImages P;
        P.dim = dim;
        for (int i = 0; i < dim; ++i) P.imgs[i] = Vec::zero(dim);
        return P;
    }

    Vec& operator[](int i) { return imgs[i]; }
    const Vec& operator[](int i) const { return imgs[i]; }

    friend bool operator==(const PMapImages& a, const PMapImages& b) {
        if (a.dim != b.dim) return false;
        for (int i = 0; i < a.dim; ++i)
            if (!(a.imgs[i] == b.imgs[i])) return false;
        return true;
    }
    // Lexicographic over the concatenated image rows; the canonical order on
    // [p]-maps (orbit representatives are minima under it).
    friend bool operator<(const PMapImages& a, const PMapImages& b) {
        for (int i = 0; i < a.dim; ++i) {
            for (int j = 0; j < a.dim; ++j) {
                if (a.imgs[i][j] != b.imgs[i][j]) return a.imgs[i][j] < b.imgs[i][j];
            }
        }
        return false;
    }
};

// Compact hashable encoding (row-major image coordinates).
struct PmapKey {
    std::array<std::uint8_t, max_dim * max_dim> b{};
    friend bool operator==(const PmapKey&, const PmapKey&) = default;
};

struct PmapKeyHash {
    std::size_t operator()(const PmapKey& k) const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (auto x : k.b) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

PmapKey pmap_key(const PMapImages& P);

// Jacobson's correction terms: the list s_1(a,b), ..., s_{p-1}(a,b) read off
// from (ad(a X + b))^{p-1}(a) in L (x) F[X], where the X^{i-1} coefficient
// equals i * s_i(a,b).
std::vector<Vec> jacobson_si(const LieAlg& L, const Vec& a, const Vec& b);

// x^{[p]} by recursive expansion along the basis:
// (c a)^{[p]} = c^p a^{[p]} and (a+b)^{[p]} = a^{[p]} + b^{[p]} + sum s_i(a,b).
// When the nilpotency class is below p the map is semilinear and the sum
// collapses to sum_i x_i^p imgs[i].
Vec evaluate(const LieAlg& L, const PMapImages& P, const Vec& x);

// Jacobson's criterion: the images determine a [p]-map iff
// ad(imgs[i]) = ad(x_i)^p for every basis index i.
bool is_valid_pmap(const LieAlg& L, const PMapImages& P, std::string* why = nullptr);

// Subspace-chain test: V_0 = L, V_{m+1} = span of the images of a spanning
// set of V_m; [p]-nilpotent iff the chain reaches 0 (within dim+1 steps).
bool is_p_nilpotent(const LieAlg& L, const PMapImages& P);

// True iff ad(x_i)^p lies in ad(L) for every basis vector.
bool is_restrictable(const LieAlg& L);

// A Lie algebra with a verified [p]-map.
struct RestrictedAlg {
    LieAlg alg;
    PMapImages pmap;
};

RestrictedAlg make_restricted(LieAlg L, PMapImages P);

// Push a [p]-map through the isomorphism v -> v*T (T as produced by
// recognize): the returned images define the same restricted structure on
// the codomain algebra.
PMapImages transport_pmap(const LieAlg& src, const PMapImages& P, const Mat& T,
                          const LieAlg& dst);

} // namespace liep
