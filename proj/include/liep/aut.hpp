#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "liep/pmap.hpp"

namespace liep {

using u128 = unsigned __int128;

// Invertible and bracket-preserving on all basis pairs.
bool is_automorphism(const LieAlg& L, const Mat& A);

// |Aut(L)| for catalog algebras, from the parameter shapes:
//   L_{n,1}:  |GL_n(q)|
//   L_{3,2}:  |GL_2(q)| q^2
//   L_{4,2}:  |GL_2(q)| q^5 (q-1)
//   L_{4,3}:  (q-1)^2 q^5
u128 automorphism_count(const LieAlg& L);

// Stream the full automorphism group of a catalog algebra by iterating the
// free parameters of its shape in lexicographic order and filtering
// invertibility.  Deterministic order.
void for_each_automorphism(const LieAlg& L, const std::function<void(const Mat&)>& fn);

// Materialised enumeration; refuses groups larger than `budget`.
std::vector<Mat> enumerate_automorphisms(const LieAlg& L, std::uint64_t budget = 1u << 22);

// A small generating set: elementary parameter moves over an additive basis
// of the field plus diagonal scalings by a multiplicative generator.  The
// generated subgroup equals the full group (checked by closure in the test
// suite at small fields).
std::vector<Mat> aut_generators(const LieAlg& L);

// An automorphism with its inverse precomputed, for use in orbit loops.
struct PreparedAut {
    Mat A;
    Mat Ainv;
};

PreparedAut prepare_aut(const LieAlg& L, const Mat& A); // validates A

// phi -> A phi A^{-1}, computed entrywise as x_i -> ((x_i A) phi) A^{-1}.
// Validity and [p]-nilpotency of the result are preserved.  Throws when A is
// not an automorphism.
PMapImages conjugate_pmap(const LieAlg& L, const Mat& A, const PMapImages& P);

// Same action without re-validating A (the PreparedAut did it once).
PMapImages conjugate_prepared(const LieAlg& L, const PreparedAut& pa, const PMapImages& P);

} // namespace liep
