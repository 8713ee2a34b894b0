#include "liep/field.hpp"

#include <algorithm>
#include <string>

namespace liep {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int mod(long long x, int p) {
    long long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a by b over F_p, b monic.  Coefficient lists constant term
// first, may carry trailing zeros.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
        int c = a[d] % p;
        if (c == 0) continue;
        for (int i = 0; i <= db; ++i)
            a[d - db + i] = mod(a[d - db + i] - static_cast<long long>(c) * b[i], p);
    }
    a.resize(db);
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Irreducibility over F_p by trial division with every monic polynomial of
// degree up to deg/2; the fields are tiny so this is cheap.
bool poly_irreducible(const std::vector<int>& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::vector<int> g(d + 1, 0);
        g[d] = 1;
        for (;;) {
            if (poly_is_zero(poly_rem(f, g, p))) return false;
            int i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0; // odometer over lower coefficients
            if (i == d) break;
        }
    }
    return true;
}

} // namespace

Field::Field(int p, int k, std::vector<int> modulus, int max_order) : p_(p), k_(k) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw DomainError("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > max_order)
            throw DomainError("field order p^k = " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds the supported bound " + std::to_string(max_order));
    }
    q_ = static_cast<int>(q);

    if (k == 1) {
        if (!modulus.empty() && modulus != std::vector<int>{0, 1})
            throw DomainError("modulus for a prime field must be omitted or the placeholder X");
        modulus_ = {0, 1};
    } else {
        if (modulus.size() != static_cast<std::size_t>(k) + 1)
            throw DomainError("modulus must have degree exactly k");
        for (int& c : modulus) c = mod(c, p);
        if (modulus.back() != 1) throw DomainError("modulus must be monic");
        if (!poly_irreducible(modulus, p))
            throw DomainError("modulus is reducible over F_p");
        modulus_ = std::move(modulus);
    }
    build_tables();
}

Field Field::prime(int p, int max_order) { return Field(p, 1, {}, max_order); }

Field Field::make(int p, int k, int max_order) {
    if (k == 1) return prime(p, max_order);
    if (p == 2 && k == 2) return Field(2, 2, {1, 1, 1}, max_order);
    if (p == 3 && k == 2) return Field(3, 2, {1, 0, 1}, max_order);
    if (p == 5 && k == 2) return Field(5, 2, {1, 1, 1}, max_order);
    throw DomainError("no shipped modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) +
                      "); pass one explicitly");
}

std::vector<int> Field::idx_to_poly(int idx) const {
    std::vector<int> c(k_);
    for (int i = k_ - 1; i >= 0; --i) { // index is big-endian in the coefficients
        c[i] = idx % p_;
        idx /= p_;
    }
    return c;
}

int Field::poly_to_idx(const std::vector<int>& c) const {
    int idx = 0;
    for (int i = 0; i < k_; ++i) idx = idx * p_ + c[i];
    return idx;
}

Fe Field::from_int(long long n) const {
    std::vector<int> c(k_, 0);
    c[0] = mod(n, p_);
    return Fe{static_cast<std::uint16_t>(poly_to_idx(c))};
}

Fe Field::from_coeffs(const std::vector<int>& coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(k_))
        throw ParseError("field element needs exactly k = " + std::to_string(k_) + " coefficients");
    for (int c : coeffs)
        if (c < 0 || c >= p_)
            throw ParseError("field element coefficient " + std::to_string(c) +
                             " is not reduced mod " + std::to_string(p_));
    return Fe{static_cast<std::uint16_t>(poly_to_idx(coeffs))};
}

std::vector<int> Field::coeffs(Fe a) const { return idx_to_poly(a.v); }

Fe Field::pow(Fe a, std::uint64_t e) const {
    Fe r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool Field::in_k_beta(Fe beta, Fe x) const {
    if (p_ != 3) throw DomainError("K_beta requires characteristic 3");
    if (beta.v == 0) throw DomainError("K_beta requires beta != 0");
    return kbeta_[beta.v * q_ + x.v] != 0;
}

std::vector<Fe> Field::additive_basis() const {
    std::vector<Fe> basis(k_);
    for (int i = 0; i < k_; ++i) {
        std::vector<int> c(k_, 0);
        c[i] = 1;
        basis[i] = Fe{static_cast<std::uint16_t>(poly_to_idx(c))};
    }
    return basis;
}

void Field::build_tables() {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);
    frob_root_.resize(q_);
    sqrt_.assign(q_, no_value);
    as2_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        const auto pa = idx_to_poly(a);
        std::vector<int> nc(k_);
        for (int i = 0; i < k_; ++i) nc[i] = mod(-pa[i], p_);
        neg_[a] = static_cast<std::uint16_t>(poly_to_idx(nc));
        for (int b = 0; b < q_; ++b) {
            const auto pb = idx_to_poly(b);
            std::vector<int> s(k_);
            for (int i = 0; i < k_; ++i) s[i] = mod(pa[i] + pb[i], p_);
            add_[a * q_ + b] = static_cast<std::uint16_t>(poly_to_idx(s));
            std::vector<int> prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[i + j] = mod(prod[i + j] + static_cast<long long>(pa[i]) * pb[j], p_);
            const auto r = poly_rem(std::move(prod), modulus_, p_);
            mul_[a * q_ + b] = static_cast<std::uint16_t>(poly_to_idx(r));
        }
    }

    {
        std::vector<int> c(k_, 0);
        c[0] = 1;
        one_ = Fe{static_cast<std::uint16_t>(poly_to_idx(c))};
    }

    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == one_.v) {
                inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }

    for (int a = 0; a < q_; ++a) {
        Fe f = pow(Fe{static_cast<std::uint16_t>(a)}, static_cast<std::uint64_t>(p_));
        frob_[a] = f.v;
        frob_root_[f.v] = static_cast<std::uint16_t>(a);
    }

    for (int y = q_ - 1; y >= 0; --y) // downward so the smallest witness wins
        sqrt_[mul_[y * q_ + y]] = static_cast<std::uint16_t>(y);

    if (p_ == 2)
        for (int d = 0; d < q_; ++d)
            as2_[add_[d * q_ + mul_[d * q_ + d]]] = 1;

    if (p_ == 3) {
        kbeta_.assign(q_ * q_, 0);
        for (int b = 1; b < q_; ++b)
            for (int d = 0; d < q_; ++d) {
                Fe beta{static_cast<std::uint16_t>(b)}, de{static_cast<std::uint16_t>(d)};
                kbeta_[b * q_ + add(mul(beta, mul(de, mul(de, de))), de).v] = 1;
            }
    }

    gen_ = one_;
    for (int g = 1; g < q_; ++g) {
        Fe x{static_cast<std::uint16_t>(g)};
        Fe acc = x;
        int ord = 1;
        while (acc != one_) {
            acc = mul(acc, x);
            ++ord;
        }
        if (ord == q_ - 1) {
            gen_ = x;
            break;
        }
    }
}

} // namespace liep
