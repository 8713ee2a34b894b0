#pragma once

#include <cstdint>
#include <compare>
#include <vector>

#include "liep/errors.hpp"

namespace liep {

// Element of a finite field, held as an index into the owning Field's
// tables.  Indices are ordered so that `a.v < b.v` is exactly the
// lexicographic order on coefficient lists (constant term first); this is
// the canonical total order used everywhere a minimum representative is
// chosen.
struct Fe {
    std::uint16_t v = 0;
    friend constexpr bool operator==(Fe, Fe) = default;
    friend constexpr auto operator<=>(Fe a, Fe b) { return a.v <=> b.v; }
};

// GF(p^k) with full operation tables.  Elements are residues of polynomials
// over F_p modulo a monic irreducible polynomial of degree k; all arithmetic
// is exact and every unary predicate (squares, Artin-Schreier membership,
// ...) is realised by exhaustive enumeration, which is why the field order
// is capped (default 25).
class Field {
public:
    static constexpr int default_max_order = 25;

    // modulus: coefficient list of length k+1, constant term first, monic.
    // For k == 1 the modulus is the placeholder X (i.e. {0, 1}) and may be
    // passed empty.
    Field(int p, int k, std::vector<int> modulus, int max_order = default_max_order);

    // GF(p).
    static Field prime(int p, int max_order = default_max_order);

    // GF(p^k) with the shipped modulus (GF(4): t^2+t+1, GF(9): t^2+1,
    // GF(25): t^2+t+1).  Throws for orders we ship no modulus for.
    static Field make(int p, int k, int max_order = default_max_order);

    int p() const { return p_; }
    int k() const { return k_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // Fields are interchangeable only when (p, k, modulus) coincide.
    bool same_as(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return one_; }

    // n mod p embedded in the prime subfield.
    Fe from_int(long long n) const;
    Fe from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs(Fe a) const;

    Fe add(Fe a, Fe b) const { return Fe{add_[a.v * q_ + b.v]}; }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe mul(Fe a, Fe b) const { return Fe{mul_[a.v * q_ + b.v]}; }
    Fe neg(Fe a) const { return Fe{neg_[a.v]}; }
    Fe inv(Fe a) const {
        if (a.v == 0) throw DomainError("zero has no inverse");
        return Fe{inv_[a.v]};
    }
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::uint64_t e) const;

    // x -> x^p and its inverse; both are bijections since the field is finite
    // (hence perfect).
    Fe frobenius(Fe a) const { return Fe{frob_[a.v]}; }
    Fe frobenius_root(Fe a) const { return Fe{frob_root_[a.v]}; }

    // True iff a = y^2 for some y; the witness (when requested) is the
    // smallest such y in the canonical order.
    bool is_square(Fe a, Fe* witness = nullptr) const {
        if (sqrt_[a.v] == no_value) return false;
        if (witness) *witness = Fe{sqrt_[a.v]};
        return true;
    }
    Fe sqrt(Fe a) const {
        if (sqrt_[a.v] == no_value) throw DomainError("element is not a square");
        return Fe{sqrt_[a.v]};
    }

    // Membership in K = {d + d^2 : d in F}, characteristic 2 only.
    bool in_artin_schreier(Fe x) const {
        if (p_ != 2) throw DomainError("Artin-Schreier subspace requires characteristic 2");
        return as2_[x.v] != 0;
    }

    // Membership in K_beta = {beta d^3 + d : d in F}, characteristic 3 only,
    // beta != 0.
    bool in_k_beta(Fe beta, Fe x) const;

    // A generator of the multiplicative group (smallest in canonical order).
    Fe generator() const { return gen_; }

    // The F_p-basis 1, t, ..., t^{k-1} of F as additive group.
    std::vector<Fe> additive_basis() const;

    std::vector<Fe> elements() const {
        std::vector<Fe> out(q_);
        for (int i = 0; i < q_; ++i) out[i] = Fe{static_cast<std::uint16_t>(i)};
        return out;
    }

private:
    static constexpr std::uint16_t no_value = 0xffff;

    int p_, k_, q_;
    std::vector<int> modulus_;
    Fe one_, gen_;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_, inv_, frob_, frob_root_, sqrt_;
    std::vector<std::uint8_t> as2_, kbeta_;

    std::vector<int> idx_to_poly(int idx) const;
    int poly_to_idx(const std::vector<int>& c) const;
    void build_tables();
};

} // namespace liep
