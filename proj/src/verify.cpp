#include "liep/verify.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace liep {

namespace {

struct Coset {
    Vec particular;
    std::vector<Vec> elements; // particular + center, fixed order
};

// Solutions of ad(b) = ad(x_i)^p as particular + center; nullopt when the
// system is inconsistent (non-restrictable algebra).
std::optional<AffineSolutions> power_coset(const LieAlg& L, int i) {
    const Field& F = L.field();
    const int n = L.dim();
    std::array<Mat, max_dim> ad_basis;
    for (int m = 0; m < n; ++m) ad_basis[m] = ad_matrix(L, Vec::unit(F, n, m));
    Mat target = Mat::identity(F, n);
    for (int e = 0; e < F.p(); ++e) target = mat_mul(F, target, ad_basis[i]);
    std::vector<std::pair<Vec, Fe>> eqs;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Vec coeff = Vec::zero(n);
            for (int m = 0; m < n; ++m) coeff[m] = ad_basis[m].at(r, c);
            eqs.emplace_back(coeff, target.at(r, c));
        }
    return solve_equations(F, n, eqs);
}

std::vector<Vec> span_elements(const Field& F, const Subspace& S) {
    const int z = S.dim();
    std::uint64_t count = 1;
    for (int i = 0; i < z; ++i) count *= F.order();
    std::vector<Vec> out;
    out.reserve(count);
    std::vector<int> digits(z, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Vec v = Vec::zero(S.ambient);
        std::uint64_t rest = idx;
        for (int m = z - 1; m >= 0; --m) {
            int d = static_cast<int>(rest % F.order());
            rest /= F.order();
            if (d != 0)
                v = vadd(F, v, vscale(F, Fe{static_cast<std::uint16_t>(d)}, S.basis.row(m)));
        }
        out.push_back(v);
    }
    return out;
}

// Nilpotency of a semilinear map on the whole space: the twisted power
// N_{j+1} = frobenius(N_j) * M must vanish by step dim.
bool semilinear_nilpotent(const Field& F, const Mat& M) {
    Mat N = M;
    const int n = M.rows;
    for (int j = 1; j < n; ++j) {
        bool zero = true;
        for (int r = 0; r < n && zero; ++r)
            for (int c = 0; c < n; ++c)
                if (N.at(r, c).v != 0) {
                    zero = false;
                    break;
                }
        if (zero) return true;
        Mat Nf = N;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) Nf.at(r, c) = F.frobenius(N.at(r, c));
        N = mat_mul(F, Nf, M);
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (N.at(r, c).v != 0) return false;
    return true;
}

unsigned effective_workers(unsigned requested) {
    if (requested) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

} // namespace

u128 pmap_search_space(const LieAlg& L) {
    const int n = L.dim();
    u128 space = 1;
    for (int i = 0; i < n; ++i) {
        auto sol = power_coset(L, i);
        if (!sol) return 0;
        u128 csize = 1;
        for (int m = 0; m < sol->kernel.dim(); ++m) csize *= L.field().order();
        space *= csize;
    }
    return space;
}

std::vector<PMapImages> enumerate_pnilpotent_pmaps(const LieAlg& L, const VerifyOptions& opts) {
    const Field& F = L.field();
    const int n = L.dim();

    std::array<std::vector<Vec>, max_dim> cosets;
    for (int i = 0; i < n; ++i) {
        auto sol = power_coset(L, i);
        if (!sol) return {}; // not restrictable: no [p]-map at all
        std::vector<Vec> elems = span_elements(F, sol->kernel);
        for (Vec& v : elems) v = vadd(F, v, sol->particular);
        cosets[i] = std::move(elems);
    }

    u128 space = 1;
    for (int i = 0; i < n; ++i) space *= cosets[i].size();
    if (space > opts.budget_pmaps)
        throw BudgetError("search space too large: " + u128_str(space) + " candidate [p]-maps on " +
                          L.name() + " over GF(" + std::to_string(F.order()) + ") exceeds budget " +
                          std::to_string(opts.budget_pmaps));
    const std::uint64_t total = static_cast<std::uint64_t>(space);
    const bool fast = L.semilinear_pmaps();

    auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<PMapImages>& out) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            PMapImages P = PMapImages::zero(n);
            std::uint64_t rest = idx;
            for (int i = n - 1; i >= 0; --i) {
                P.imgs[i] = cosets[i][rest % cosets[i].size()];
                rest /= cosets[i].size();
            }
            bool ok;
            if (fast) {
                Mat M = Mat::zero(n, n);
                for (int i = 0; i < n; ++i) M.set_row(i, P.imgs[i]);
                ok = semilinear_nilpotent(F, M);
            } else {
                ok = is_p_nilpotent(L, P);
            }
            if (ok) out.push_back(P);
        }
    };

    const unsigned workers = std::min<std::uint64_t>(effective_workers(opts.workers),
                                                     std::max<std::uint64_t>(total / 4096, 1));
    if (workers <= 1) {
        std::vector<PMapImages> out;
        scan(0, total, out);
        return out;
    }
    std::vector<std::vector<PMapImages>> parts(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t b = w * chunk, e = std::min(total, b + chunk);
        threads.emplace_back([&, b, e, w] { scan(b, e, parts[w]); });
    }
    for (auto& t : threads) t.join();
    std::vector<PMapImages> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

namespace {

std::vector<Orbit> partition_impl(const LieAlg& L, const std::vector<PMapImages>& pmaps,
                                  const std::vector<PreparedAut>& gens, std::uint64_t budget_conj) {
    std::unordered_map<PmapKey, std::uint32_t, PmapKeyHash> index;
    index.reserve(pmaps.size() * 2);
    for (std::uint32_t i = 0; i < pmaps.size(); ++i) index.emplace(pmap_key(pmaps[i]), i);

    std::vector<std::int32_t> orbit_of(pmaps.size(), -1);
    std::vector<Orbit> orbits;
    std::vector<std::uint32_t> queue;
    std::uint64_t steps = 0;

    for (std::uint32_t start = 0; start < pmaps.size(); ++start) {
        if (orbit_of[start] >= 0) continue;
        const std::int32_t oid = static_cast<std::int32_t>(orbits.size());
        Orbit o;
        o.representative = pmaps[start];
        queue.clear();
        queue.push_back(start);
        orbit_of[start] = oid;
        std::size_t head = 0;
        while (head < queue.size()) {
            const std::uint32_t cur = queue[head++];
            ++o.size;
            for (const PreparedAut& g : gens) {
                if (++steps > budget_conj)
                    throw BudgetError("orbit closure exceeded the conjugation budget of " +
                                      std::to_string(budget_conj) + " steps");
                PMapImages img = conjugate_prepared(L, g, pmaps[cur]);
                auto it = index.find(pmap_key(img));
                if (it == index.end())
                    throw DomainError("internal: conjugation left the enumerated [p]-map set");
                if (orbit_of[it->second] < 0) {
                    orbit_of[it->second] = oid;
                    queue.push_back(it->second);
                    if (pmaps[it->second] < o.representative) o.representative = pmaps[it->second];
                }
            }
        }
        orbits.push_back(o);
    }
    return orbits;
}

} // namespace

std::vector<Orbit> orbit_partition(const LieAlg& L, const std::vector<PMapImages>& pmaps,
                                   const VerifyOptions& opts) {
    std::vector<PreparedAut> gens;
    for (const Mat& A : aut_generators(L)) gens.push_back(prepare_aut(L, A));
    return partition_impl(L, pmaps, gens, opts.budget_conj);
}

std::vector<Orbit> orbit_partition_with(const LieAlg& L, const std::vector<PMapImages>& pmaps,
                                        const std::vector<Mat>& conjugators,
                                        std::uint64_t budget_conj) {
    std::vector<PreparedAut> gens;
    for (const Mat& A : conjugators) gens.push_back(prepare_aut(L, A));
    return partition_impl(L, pmaps, gens, budget_conj);
}

namespace {

std::string label_str(const Field& F, const IsoLabel& l) {
    std::string s = l.family;
    if (!l.params.empty()) {
        s += "(";
        for (std::size_t i = 0; i < l.params.size(); ++i) {
            if (i) s += ",";
            const auto cs = F.coeffs(l.params[i]);
            if (cs.size() == 1) {
                s += std::to_string(cs[0]);
            } else {
                s += "[";
                for (std::size_t j = 0; j < cs.size(); ++j) {
                    if (j) s += " ";
                    s += std::to_string(cs[j]);
                }
                s += "]";
            }
        }
        s += ")";
    }
    return s;
}

} // namespace

OrbitReport cross_check(const LieAlg& L, const VerifyOptions& opts) {
    const Field& F = L.field();
    OrbitReport rep;
    rep.algebra = L.name();

    std::vector<PMapImages> pmaps = enumerate_pnilpotent_pmaps(L, opts);
    rep.total = pmaps.size();
    std::vector<Orbit> orbits = orbit_partition(L, pmaps, opts);
    ClassList classes = list_classes(L);
    rep.note = classes.note;

    for (const Orbit& o : orbits) {
        OrbitEntry e;
        e.size = o.size;
        e.representative = o.representative;
        e.label = classify(RestrictedAlg{L, o.representative});
        rep.orbits.push_back(std::move(e));
    }
    std::sort(rep.orbits.begin(), rep.orbits.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.representative < b.representative;
    });

    // reconcile with the classification
    if (rep.orbits.size() != classes.entries.size())
        rep.mismatches.push_back("orbit count " + std::to_string(rep.orbits.size()) +
                                 " != class count " + std::to_string(classes.entries.size()));
    for (std::size_t i = 0; i < rep.orbits.size(); ++i)
        for (std::size_t j = i + 1; j < rep.orbits.size(); ++j)
            if (rep.orbits[i].label == rep.orbits[j].label)
                rep.mismatches.push_back("two orbits share the label " +
                                         label_str(F, rep.orbits[i].label));

    std::uint64_t size_sum = 0;
    const u128 aut_order = automorphism_count(L);
    for (const OrbitEntry& o : rep.orbits) {
        size_sum += o.size;
        if (aut_order % o.size != 0)
            rep.mismatches.push_back("orbit size " + std::to_string(o.size) +
                                     " does not divide |Aut| = " + u128_str(aut_order));
    }
    if (size_sum != rep.total)
        rep.mismatches.push_back("orbit sizes sum to " + std::to_string(size_sum) +
                                 ", expected " + std::to_string(rep.total));

    // every theoretical class representative must land in exactly one orbit
    // carrying its own label
    std::unordered_map<PmapKey, std::size_t, PmapKeyHash> where;
    for (std::size_t i = 0; i < pmaps.size(); ++i) where.emplace(pmap_key(pmaps[i]), i);
    for (const ClassEntry& c : classes.entries) {
        auto it = where.find(pmap_key(c.rep));
        if (it == where.end()) {
            rep.mismatches.push_back("class representative of " + label_str(F, c.label) +
                                     " was not enumerated");
            continue;
        }
        bool found = false;
        for (const OrbitEntry& o : rep.orbits)
            if (o.label == c.label) found = true;
        if (!found)
            rep.mismatches.push_back("class " + label_str(F, c.label) +
                                     " matches no orbit representative");
        IsoLabel direct = classify(RestrictedAlg{L, c.rep});
        if (!(direct == c.label))
            rep.mismatches.push_back("class representative of " + label_str(F, c.label) +
                                     " classifies as " + label_str(F, direct));
    }
    return rep;
}

} // namespace liep
