#include <doctest.h>

#include <unordered_map>

#include "liep/verify.hpp"
#include "oracles.hpp"

using namespace liep;
using namespace liep::testing;

TEST_SUITE_BEGIN("classify");

namespace {

RestrictedAlg restricted(const LieAlg& L, std::initializer_list<Vec> rows) {
    PMapImages P = PMapImages::zero(L.dim());
    int i = 0;
    for (const Vec& r : rows) P.imgs[i++] = r;
    return make_restricted(L, P);
}

std::vector<Field> all_fields() {
    return {Field::prime(2), Field::prime(3), Field::make(2, 2), Field::prime(5)};
}

} // namespace

TEST_CASE("classify: spec examples") {
    {
        // Heisenberg over GF(3), phi = (2,1) is in the orbit of (1,0)
        Field F = Field::prime(3);
        LieAlg H = catalog_algebra(F, "L_{3,2}");
        RestrictedAlg R = restricted(H, {iv(F, {0, 0, 2}), iv(F, {0, 0, 1}), iv(F, {0, 0, 0})});
        CHECK(classify(R) == IsoLabel{"L_{3,2}^2", {}});
        CHECK(classify(restricted(H, {iv(F, {0, 0, 0}), iv(F, {0, 0, 0}), iv(F, {0, 0, 0})})) ==
              IsoLabel{"L_{3,2}^1", {}});
    }
    {
        // Heisenberg over GF(2), zero map normalizes to K^1_{3,2}(0)
        Field F = Field::prime(2);
        LieAlg H = catalog_algebra(F, "L_{3,2}");
        RestrictedAlg R = restricted(H, {iv(F, {0, 0, 0}), iv(F, {0, 0, 0}), iv(F, {0, 0, 0})});
        CHECK(classify(R) == IsoLabel{"K_{3,2}^1", {F.zero()}});
        // images (x3, 0, 0) also gives xi = 0
        CHECK(classify(restricted(H, {iv(F, {0, 0, 1}), iv(F, {0, 0, 0}), iv(F, {0, 0, 0})})) ==
              IsoLabel{"K_{3,2}^1", {F.zero()}});
        // (1,1) is the other class
        CHECK(classify(restricted(H, {iv(F, {0, 0, 1}), iv(F, {0, 0, 1}), iv(F, {0, 0, 0})})) ==
              IsoLabel{"K_{3,2}^1", {F.one()}});
    }
    {
        // L_{4,3} over GF(5), phi = (0,3,0): beta-class of 3 is {2,3}, min 2
        Field F = Field::prime(5);
        LieAlg L = catalog_algebra(F, "L_{4,3}");
        RestrictedAlg R = restricted(L, {iv(F, {0, 0, 0, 0}), iv(F, {0, 0, 0, 3}),
                                         iv(F, {0, 0, 0, 0}), iv(F, {0, 0, 0, 0})});
        CHECK(classify(R) == IsoLabel{"L_{4,3}^3", {fe(F, 2)}});
    }
    {
        // non-nilpotent [p]-maps are rejected
        Field F = Field::prime(3);
        LieAlg A = catalog_algebra(F, "L_{1,1}");
        PMapImages P = PMapImages::zero(1);
        P.imgs[0] = iv(F, {1});
        CHECK_THROWS_WITH_AS(classify(RestrictedAlg{A, P}), "not [p]-nilpotent", DomainError);
    }
}

TEST_CASE("params_equivalent: xi families") {
    Field F4 = Field::make(2, 2);
    Fe t = F4.from_coeffs({0, 1}), t1 = F4.from_coeffs({1, 1});
    CHECK(params_equivalent("K_{3,2}^1", F4, {t}, {t1}));      // t + (t+1) = 1 in K
    CHECK_FALSE(params_equivalent("K_{3,2}^1", F4, {F4.zero()}, {t}));
    Field F2 = Field::prime(2);
    CHECK_FALSE(params_equivalent("K_{3,2}^1", F2, {F2.zero()}, {F2.one()})); // 1 not in K
    CHECK(params_equivalent("K_{4,2}^1", F2, {F2.one()}, {F2.one()}));
    CHECK(params_equivalent("K_{4,2}^4", F4, {t}, {t1}));
    CHECK_THROWS_AS(params_equivalent("K_{3,2}^1", Field::prime(3), {fe(Field::prime(3), 0)},
                                      {fe(Field::prime(3), 0)}),
                    DomainError);
    CHECK_THROWS_AS(params_equivalent("L_{3,2}^1", F2, {}, {}), DomainError);
}

TEST_CASE("params_equivalent: beta square classes for L_{4,3}^3") {
    Field F = Field::prime(5);
    CHECK(params_equivalent("L_{4,3}^3", F, {fe(F, 1)}, {fe(F, 4)}));
    CHECK(params_equivalent("L_{4,3}^3", F, {fe(F, 2)}, {fe(F, 3)}));
    CHECK_FALSE(params_equivalent("L_{4,3}^3", F, {fe(F, 1)}, {fe(F, 2)}));
    CHECK_THROWS_AS(params_equivalent("L_{4,3}^3", F, {fe(F, 0)}, {fe(F, 1)}), DomainError);
    CHECK_THROWS_AS(params_equivalent("L_{4,3}^3", Field::prime(3), {fe(Field::prime(3), 1)},
                                      {fe(Field::prime(3), 1)}),
                    DomainError);
}

TEST_CASE("params_equivalent: K_{4,3}^3 over GF(3)") {
    Field F = Field::prime(3);
    auto eq = [&](int a1, int b1, int a2, int b2) {
        return params_equivalent("K_{4,3}^3", F, {fe(F, a1), fe(F, b1)}, {fe(F, a2), fe(F, b2)});
    };
    CHECK(eq(1, 2, 2, 2));       // spec example
    CHECK(eq(0, 1, 1, 1));       // K_1 = GF(3) merges all alpha at beta = 1
    CHECK(eq(0, 1, 2, 1));
    CHECK_FALSE(eq(0, 2, 1, 2)); // K_2 = {0} separates alpha = 0 from alpha = 1
    CHECK_FALSE(eq(0, 1, 0, 2)); // 2 is not a square mod 3
    CHECK(eq(1, 2, 1, 2));
}

TEST_CASE("params_equivalent agrees with the orbit oracle on every pair") {
    // xi families over GF(2) and GF(4)
    for (const Field& F : {Field::prime(2), Field::make(2, 2)}) {
        CAPTURE(F.order());
        LieAlg H = catalog_algebra(F, "L_{3,2}");
        for (Fe x1 : F.elements())
            for (Fe x2 : F.elements()) {
                PMapImages P1 = PMapImages::zero(3), P2 = PMapImages::zero(3);
                P1.imgs[0] = Vec::unit(F, 3, 2);
                P1.imgs[1] = vscale(F, x1, Vec::unit(F, 3, 2));
                P2.imgs[0] = Vec::unit(F, 3, 2);
                P2.imgs[1] = vscale(F, x2, Vec::unit(F, 3, 2));
                CHECK(params_equivalent("K_{3,2}^1", F, {x1}, {x2}) ==
                      conjugate_oracle(H, P1, P2));
            }
    }
    // beta square classes over GF(5)
    {
        Field F = Field::prime(5);
        LieAlg L = catalog_algebra(F, "L_{4,3}");
        for (Fe b1 : F.elements())
            for (Fe b2 : F.elements()) {
                if (b1.v == 0 || b2.v == 0) continue;
                PMapImages P1 = PMapImages::zero(4), P2 = PMapImages::zero(4);
                P1.imgs[1] = vscale(F, b1, Vec::unit(F, 4, 3));
                P2.imgs[1] = vscale(F, b2, Vec::unit(F, 4, 3));
                CHECK(params_equivalent("L_{4,3}^3", F, {b1}, {b2}) ==
                      conjugate_oracle(L, P1, P2));
            }
    }
    // (alpha, beta) pairs over GF(3)
    {
        Field F = Field::prime(3);
        LieAlg L = catalog_algebra(F, "L_{4,3}");
        for (Fe a1 : F.elements())
            for (Fe b1 : F.elements()) {
                if (b1.v == 0) continue;
                for (Fe a2 : F.elements())
                    for (Fe b2 : F.elements()) {
                        if (b2.v == 0) continue;
                        PMapImages P1 = PMapImages::zero(4), P2 = PMapImages::zero(4);
                        P1.imgs[0] = vscale(F, a1, Vec::unit(F, 4, 3));
                        P1.imgs[1] = vscale(F, b1, Vec::unit(F, 4, 3));
                        P2.imgs[0] = vscale(F, a2, Vec::unit(F, 4, 3));
                        P2.imgs[1] = vscale(F, b2, Vec::unit(F, 4, 3));
                        CHECK(params_equivalent("K_{4,3}^3", F, {a1, b1}, {a2, b2}) ==
                              conjugate_oracle(L, P1, P2));
                    }
            }
    }
}

TEST_CASE("list_classes: counts per field") {
    auto count = [](const Field& F, const char* name) {
        return list_classes(catalog_algebra(F, name)).entries.size();
    };
    for (const Field& F : all_fields()) {
        CAPTURE(F.order());
        CHECK(count(F, "L_{1,1}") == 1);
        CHECK(count(F, "L_{2,1}") == 2);
        CHECK(count(F, "L_{3,1}") == 3);
        CHECK(count(F, "L_{3,2}") == 2);
        CHECK(count(F, "L_{4,1}") == 5);
        CHECK(count(F, "L_{4,2}") == 8);
    }
    CHECK(count(Field::prime(3), "L_{4,3}") == 5);
    CHECK(count(Field::prime(5), "L_{4,3}") == 5);
    CHECK(count(Field::prime(7), "L_{4,3}") == 5);
    CHECK(count(Field::prime(2), "L_{4,3}") == 0);
    CHECK(count(Field::make(2, 2), "L_{4,3}") == 0);
    CHECK(list_classes(catalog_algebra(Field::prime(2), "L_{4,3}")).note ==
          "not restrictable in characteristic 2");

    // canonical xi representatives over GF(4) are 0 and t (lex minima of
    // the two Artin-Schreier cosets {0,1} and {t,t+1})
    {
        Field F4 = Field::make(2, 2);
        ClassList cl = list_classes(catalog_algebra(F4, "L_{3,2}"));
        REQUIRE(cl.entries.size() == 2);
        CHECK(cl.entries[0].label == IsoLabel{"K_{3,2}^1", {F4.zero()}});
        CHECK(cl.entries[1].label == IsoLabel{"K_{3,2}^1", {F4.from_coeffs({0, 1})}});
    }
    // beta square-class representatives over GF(5) are 1 and 2
    {
        Field F5 = Field::prime(5);
        ClassList cl = list_classes(catalog_algebra(F5, "L_{4,3}"));
        REQUIRE(cl.entries.size() == 5);
        CHECK(cl.entries[2].label == IsoLabel{"L_{4,3}^3", {fe(F5, 1)}});
        CHECK(cl.entries[3].label == IsoLabel{"L_{4,3}^3", {fe(F5, 2)}});
    }

    // the GF(3) K^3 classes are exactly (0,1), (0,2), (1,2)
    Field F3 = Field::prime(3);
    ClassList cl = list_classes(catalog_algebra(F3, "L_{4,3}"));
    REQUIRE(cl.entries.size() == 5);
    CHECK(cl.entries[0].label == IsoLabel{"K_{4,3}^1", {}});
    CHECK(cl.entries[1].label == IsoLabel{"K_{4,3}^2", {}});
    CHECK(cl.entries[2].label == IsoLabel{"K_{4,3}^3", {fe(F3, 0), fe(F3, 1)}});
    CHECK(cl.entries[3].label == IsoLabel{"K_{4,3}^3", {fe(F3, 0), fe(F3, 2)}});
    CHECK(cl.entries[4].label == IsoLabel{"K_{4,3}^3", {fe(F3, 1), fe(F3, 2)}});
}

TEST_CASE("list_classes: every representative classifies to its own label") {
    for (const Field& F : {Field::prime(2), Field::prime(3), Field::make(2, 2), Field::prime(5),
                           Field::make(3, 2)}) {
        CAPTURE(F.order());
        for (int dim = 1; dim <= 4; ++dim)
            for (const LieAlg& L : catalog(F, dim)) {
                CAPTURE(L.name());
                ClassList cl = list_classes(L);
                for (const ClassEntry& e : cl.entries) {
                    REQUIRE(is_valid_pmap(L, e.rep));
                    REQUIRE(is_p_nilpotent(L, e.rep));
                    CHECK(classify(RestrictedAlg{L, e.rep}) == e.label);
                }
                // pairwise non-isomorphic
                for (std::size_t i = 0; i < cl.entries.size(); ++i)
                    for (std::size_t j = i + 1; j < cl.entries.size(); ++j)
                        CHECK_FALSE(are_isomorphic(RestrictedAlg{L, cl.entries[i].rep},
                                                   RestrictedAlg{L, cl.entries[j].rep}));
            }
    }
}

TEST_CASE("classify is invariant under conjugation (sampled automorphisms)") {
    std::mt19937_64 rng(99);
    for (const Field& F : all_fields()) {
        CAPTURE(F.order());
        for (int dim = 1; dim <= 4; ++dim)
            for (const LieAlg& L : catalog(F, dim)) {
                CAPTURE(L.name());
                for (const ClassEntry& e : list_classes(L).entries) {
                    for (int t = 0; t < 25; ++t) {
                        Mat A = random_automorphism(L, rng);
                        PMapImages Q = conjugate_pmap(L, A, e.rep);
                        CHECK(classify(RestrictedAlg{L, Q}) == e.label);
                    }
                }
            }
    }
}

TEST_CASE("classify is exhaustively invariant over GF(2)") {
    // every valid nilpotent pmap, every automorphism
    Field F = Field::prime(2);
    for (const char* name : {"L_{3,2}", "L_{4,2}"}) {
        LieAlg L = catalog_algebra(F, name);
        auto pmaps = enumerate_pnilpotent_pmaps(L);
        auto auts = enumerate_automorphisms(L);
        for (const PMapImages& P : pmaps) {
            IsoLabel base = classify(RestrictedAlg{L, P});
            for (const Mat& A : auts)
                CHECK(classify(RestrictedAlg{L, conjugate_pmap(L, A, P)}) == base);
        }
    }
}

TEST_CASE("classify is constant on every orbit over GF(3)") {
    // exhaustive over the pmaps: together with the orbit closure checks this
    // gives classify(conj(A, R)) = classify(R) for all A and all R
    Field F = Field::prime(3);
    for (const char* name : {"L_{3,2}", "L_{4,2}", "L_{4,3}", "L_{3,1}"}) {
        CAPTURE(name);
        LieAlg L = catalog_algebra(F, name);
        auto pmaps = enumerate_pnilpotent_pmaps(L);
        std::vector<PreparedAut> gens;
        for (const Mat& A : aut_generators(L)) gens.push_back(prepare_aut(L, A));
        std::unordered_map<PmapKey, IsoLabel, PmapKeyHash> label_of_orbit;
        for (const Orbit& o : orbit_partition(L, pmaps)) {
            IsoLabel rep_label = classify(RestrictedAlg{L, o.representative});
            std::vector<PMapImages> queue{o.representative};
            label_of_orbit.emplace(pmap_key(o.representative), rep_label);
            while (!queue.empty()) {
                PMapImages cur = queue.back();
                queue.pop_back();
                for (const auto& g : gens) {
                    PMapImages next = conjugate_prepared(L, g, cur);
                    if (label_of_orbit.emplace(pmap_key(next), rep_label).second)
                        queue.push_back(next);
                }
            }
        }
        REQUIRE(label_of_orbit.size() == pmaps.size());
        for (const PMapImages& P : pmaps)
            CHECK(classify(RestrictedAlg{L, P}) == label_of_orbit.at(pmap_key(P)));
    }
}

TEST_CASE("are_isomorphic") {
    Field F = Field::prime(3);
    LieAlg H = catalog_algebra(F, "L_{3,2}");
    RestrictedAlg R1 = restricted(H, {iv(F, {0, 0, 1}), iv(F, {0, 0, 0}), iv(F, {0, 0, 0})});
    RestrictedAlg R2 = restricted(H, {iv(F, {0, 0, 2}), iv(F, {0, 0, 2}), iv(F, {0, 0, 0})});
    RestrictedAlg Z = restricted(H, {iv(F, {0, 0, 0}), iv(F, {0, 0, 0}), iv(F, {0, 0, 0})});
    CHECK(are_isomorphic(R1, R2));
    CHECK_FALSE(are_isomorphic(R1, Z));
    // conjugates are isomorphic by construction
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        Mat A = random_automorphism(H, rng);
        CHECK(are_isomorphic(R1, RestrictedAlg{H, conjugate_pmap(H, A, R1.pmap)}));
    }
    // different underlying algebras are never isomorphic
    LieAlg A3 = catalog_algebra(F, "L_{3,1}");
    CHECK_FALSE(are_isomorphic(Z, RestrictedAlg{A3, PMapImages::zero(3)}));
    // different fields are never isomorphic
    Field F9 = Field::make(3, 2);
    CHECK_FALSE(are_isomorphic(Z, RestrictedAlg{catalog_algebra(F9, "L_{3,2}"),
                                                PMapImages::zero(3)}));
}

TEST_CASE("K^1/K^2/K^3 on L_{4,2} in characteristic 2 match the invariant probe") {
    for (const Field& F : {Field::prime(2), Field::make(2, 2)}) {
        CAPTURE(F.order());
        LieAlg L = catalog_algebra(F, "L_{4,2}");
        for (const PMapImages& P : enumerate_pnilpotent_pmaps(L)) {
            if (!P.imgs[2].is_zero() || !P.imgs[3].is_zero()) continue; // trivial center action only
            IsoLabel label = classify(RestrictedAlg{L, P});
            const bool beta_zero = P.imgs[0][3].v == 0 && P.imgs[1][3].v == 0;
            if (beta_zero) {
                CHECK(label.family == "K_{4,2}^1");
            } else if (k42_char2_image_meets_x3(L, P)) {
                CHECK(label.family == "K_{4,2}^3");
            } else {
                CHECK(label.family == "K_{4,2}^2");
            }
        }
    }
}

TEST_CASE("classification transports through scrambled bases") {
    std::mt19937_64 rng(1234);
    for (const Field& F : {Field::prime(3), Field::prime(2)}) {
        for (const char* name : {"L_{3,2}", "L_{4,2}", "L_{4,3}", "L_{4,1}"}) {
            LieAlg L = catalog_algebra(F, name);
            ClassList cl = list_classes(L);
            for (const ClassEntry& e : cl.entries) {
                for (int t = 0; t < 10; ++t) {
                    Mat S = random_invertible(F, L.dim(), rng);
                    auto Sinv = mat_inverse(F, S);
                    std::vector<BracketEntry> entries;
                    for (int i = 0; i < L.dim(); ++i)
                        for (int j = i + 1; j < L.dim(); ++j) {
                            Vec w = mul_vec_mat(F, bracket(L, S.row(i), S.row(j)), *Sinv);
                            if (!w.is_zero()) entries.push_back({i, j, w});
                        }
                    LieAlg scrambled(F, L.dim(), entries);
                    // transport the pmap along psi(v) = v Sinv (basis y_i = row_i(S))
                    PMapImages P = transport_pmap(L, e.rep, *Sinv, scrambled);
                    REQUIRE(is_valid_pmap(scrambled, P));
                    CHECK(classify(RestrictedAlg{scrambled, P}) == e.label);
                }
            }
        }
    }
}

TEST_SUITE_END();
