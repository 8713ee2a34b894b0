#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liep/aut.hpp"
#include "liep/classify.hpp"

namespace liep {

struct VerifyOptions {
    // Cap on |coset|^dim candidate tuples in the [p]-map search.
    std::uint64_t budget_pmaps = 100000000ull;
    // Cap on conjugation steps during orbit closure.
    std::uint64_t budget_conj = 100000000ull;
    // Worker threads for candidate filtering; 0 = hardware concurrency.
    unsigned workers = 0;
};

// |coset of Z(L)|^dim, the size of the candidate space (0 when some basis
// vector admits no solution of ad(b) = ad(x_i)^p, i.e. L is not
// restrictable).
u128 pmap_search_space(const LieAlg& L);

// Every valid [p]-nilpotent [p]-map on the catalog algebra L, exactly once,
// in deterministic (lexicographic) order: per basis vector the solutions of
// ad(b) = ad(x_i)^p form a coset of the center; the Cartesian product of
// those cosets is filtered by is_p_nilpotent.
std::vector<PMapImages> enumerate_pnilpotent_pmaps(const LieAlg& L,
                                                   const VerifyOptions& opts = {});

struct Orbit {
    std::uint64_t size = 0;
    PMapImages representative; // lexicographically minimal element
};

// Partition into Aut(L)-orbits by BFS closure under conjugation by
// aut_generators(L).
std::vector<Orbit> orbit_partition(const LieAlg& L, const std::vector<PMapImages>& pmaps,
                                   const VerifyOptions& opts = {});

// Same closure under an explicit conjugator list (used to cross-validate the
// generator closure against the full group at tiny fields).
std::vector<Orbit> orbit_partition_with(const LieAlg& L, const std::vector<PMapImages>& pmaps,
                                        const std::vector<Mat>& conjugators,
                                        std::uint64_t budget_conj = 100000000ull);

struct OrbitEntry {
    std::uint64_t size = 0;
    PMapImages representative;
    IsoLabel label;
};

struct OrbitReport {
    std::string algebra;
    std::uint64_t total = 0;          // valid p-nilpotent pmaps
    std::vector<OrbitEntry> orbits;   // sorted by (size, representative)
    std::vector<std::string> mismatches;
    std::string note;                 // e.g. "not restrictable" remarks
};

// The oracle: enumerate everything, partition into orbits, classify each
// representative and reconcile with list_classes.  Any disagreement lands in
// `mismatches` (the report is still returned).
OrbitReport cross_check(const LieAlg& L, const VerifyOptions& opts = {});

} // namespace liep
