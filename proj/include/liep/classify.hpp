#pragma once

#include <string>
#include <vector>

#include "liep/pmap.hpp"

namespace liep {

// A canonical isomorphism-class label: the family name in its printed form
// (e.g. "K_{4,2}^1") plus normalized parameters.  Parameters are stored as
// the minimum representative of their equivalence class under the canonical
// total order on field elements.
struct IsoLabel {
    std::string family;
    std::vector<Fe> params;
    friend bool operator==(const IsoLabel&, const IsoLabel&) = default;
};

// Canonical label of a [p]-nilpotent restricted Lie algebra of dimension
// <= 4: recognizes the underlying algebra, transports the [p]-map to the
// standard basis and normalizes it per family.  Invariant under conjugation
// by any automorphism.
IsoLabel classify(const RestrictedAlg& R);

// The paper-level parameter equivalences:
//   xi families (char 2):        xi_1 + xi_2 in K
//   L_{4,3}^3(beta) (char >= 5): beta_1 beta_2^{-1} a square
//   K_{4,3}^3(alpha,beta) (char 3): beta_2/beta_1 = s^2 and
//       alpha_2 s + alpha_1 in K_{beta_1} or alpha_2 s - alpha_1 in K_{beta_1},
//       for either sign of the root s.
bool params_equivalent(const std::string& family, const Field& F,
                       const std::vector<Fe>& p1, const std::vector<Fe>& p2);

// min of xi + K under the canonical order (char 2).
Fe canonical_xi(const Field& F, Fe xi);
// min of beta * (F*)^2 (odd characteristic, beta != 0).
Fe canonical_square_class(const Field& F, Fe beta);
// lexicographic minimum of the K_{4,3}^3 equivalence class of (alpha, beta).
std::pair<Fe, Fe> canonical_alpha_beta(const Field& F, Fe alpha, Fe beta);

struct ClassEntry {
    IsoLabel label;
    PMapImages rep;
};

struct ClassList {
    std::string algebra;
    std::vector<ClassEntry> entries;
    std::string note; // nonempty when the list is empty for a structural reason
};

// One canonical representative per isomorphism class of [p]-nilpotent
// [p]-maps on the given catalog algebra, materialising the parameterized
// families over the algebra's field.  Empty (with a note) for L_{4,3} in
// characteristic 2.
ClassList list_classes(const LieAlg& L);

// Standard images for a label on its catalog algebra.
PMapImages class_representative(const LieAlg& L, const IsoLabel& label);

// classify(R1) == classify(R2); false (not an error) when the underlying
// Lie algebras or fields differ.
bool are_isomorphic(const RestrictedAlg& R1, const RestrictedAlg& R2);

// Test probe for the characteristic-2 L_{4,2} case with trivial center
// action and image not inside <x3>: distinguishes the K^2/K^3 families by
// whether some [2]-th power lands in <x3> \ {0}.  Asserted consistent with
// classify in the test suite.
bool k42_char2_image_meets_x3(const LieAlg& L, const PMapImages& P);

} // namespace liep
