#pragma once

#include <string>
#include <vector>

#include "liep/field.hpp"
#include "liep/linalg.hpp"

namespace liep {

// One bracket [x_i, x_j] = value with 0-based i < j; pairs not listed are
// zero.
struct BracketEntry {
    int i, j;
    Vec value;
};

// A Lie algebra of dimension <= 4 by structure constants over a finite
// field.  Antisymmetry is built in (only i < j is stored externally) and the
// Jacobi identity is verified on every basis triple at construction.
class LieAlg {
public:
    LieAlg(Field field, int dim, const std::vector<BracketEntry>& brackets,
           std::string name = "");

    const Field& field() const { return F_; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    // Nilpotency class; -1 when the algebra is not nilpotent.
    int nilpotency_class() const { return class_; }
    bool is_nilpotent() const { return class_ >= 0; }
    // True when every [p]-map on this algebra is semilinear (class < p);
    // enables the fast evaluation path.
    bool semilinear_pmaps() const { return class_ >= 0 && class_ < F_.p(); }

    // [x_i, x_j] on basis indices (0-based).
    const Vec& sc(int i, int j) const { return sc_[i][j]; }

private:
    Field F_;
    int dim_;
    std::string name_;
    int class_;
    Vec sc_[max_dim][max_dim]; // dense, antisymmetric

    friend Vec bracket(const LieAlg&, const Vec&, const Vec&);
};

// Bilinear extension of the structure constants.
Vec bracket(const LieAlg& L, const Vec& u, const Vec& v);

// Matrix of ad(x) acting on row vectors: v * ad_matrix(x) = [v, x].
Mat ad_matrix(const LieAlg& L, const Vec& x);

struct AlgInvariants {
    Subspace center;
    Subspace derived;
    std::vector<Subspace> lcs; // gamma_1, gamma_2, ... down to 0 (exclusive)
    int nilpotency_class;      // -1 if not nilpotent
};

AlgInvariants invariants(const LieAlg& L);

// The nilpotent Lie algebras of the given dimension in their standard bases:
// the abelian algebra L_{n,1}, plus L_{3,2} ([x1,x2]=x3) in dimension 3,
// plus L_{4,2} ([x1,x2]=x3) and L_{4,3} ([x1,x2]=x3, [x1,x3]=x4) in
// dimension 4.
std::vector<LieAlg> catalog(const Field& F, int dim);

// Catalog member by name ("L_{3,2}", ...).
LieAlg catalog_algebra(const Field& F, const std::string& name);

bool is_catalog_name(const std::string& name);

struct Recognition {
    std::string name; // catalog name
    Mat T;            // v -> v*T maps L-coordinates to standard coordinates
    LieAlg standard;  // the catalog algebra over the same field
};

// Constructive recognition of a nilpotent algebra of dimension <= 4: returns
// the isomorphic catalog member and a base-change matrix T such that
// bracket_std(u*T, v*T) = bracket_L(u, v)*T (verified before returning).
Recognition recognize(const LieAlg& L);

} // namespace liep
