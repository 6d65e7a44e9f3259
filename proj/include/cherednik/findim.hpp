#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/linalg.hpp"
#include "cherednik/rat.hpp"
#include "cherednik/symmpair.hpp"

namespace cherednik {

struct ModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The 2m+1 dimensional module over the rank-one algebra at c = m + 1/2:
// basis t^0..t^{2m}, x acts by truncating shift, s by parity sign, T by the
// rank-one Dunkl formula.
class CherednikModuleA1 {
public:
    explicit CherednikModuleA1(int m) : m_(m), c_(Rat(2 * m + 1, 2)) {
        if (m < 0) throw ModuleError("m >= 0 required");
    }

    int m() const { return m_; }
    const Rat& c() const { return c_; }
    std::size_t dim() const { return 2 * m_ + 1; }

    RatVec basis_vector(int j) const {
        RatVec v(dim(), Rat(0));
        v.at(j) = 1;
        return v;
    }

    RatVec apply_x(const RatVec& v) const {
        RatVec out(dim(), Rat(0));
        for (std::size_t j = 0; j + 1 < dim(); ++j) out[j + 1] = v[j];
        return out;  // x * t^{2m} = 0
    }

    RatVec apply_s(const RatVec& v) const {
        RatVec out(dim(), Rat(0));
        for (std::size_t j = 0; j < dim(); ++j) out[j] = (j % 2 == 0) ? v[j] : -v[j];
        return out;
    }

    // T(t^j) = (j - c(1 - (-1)^j)) t^{j-1}.
    RatVec apply_T(const RatVec& v) const {
        RatVec out(dim(), Rat(0));
        for (std::size_t j = 1; j < dim(); ++j) {
            const Rat factor = (j % 2 == 0) ? Rat(static_cast<long>(j))
                                            : Rat(static_cast<long>(j)) - 2 * c_;
            out[j - 1] = factor * v[j];
        }
        return out;
    }

    int dim_trivial() const { return m_ + 1; }  // even basis degrees
    int dim_sign() const { return m_; }         // odd basis degrees

private:
    int m_;
    Rat c_;
};

struct RelationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Checks on every basis vector: [T,x] = 1 - 2c s, s x s = -x, s T s = -T,
// x t^{2m} = 0, T t^0 = 0.
inline RelationReport module_relation_check(const CherednikModuleA1& M) {
    RelationReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.failures.push_back(what);
    };
    const Rat two_c = 2 * M.c();
    for (int j = 0; j < static_cast<int>(M.dim()); ++j) {
        const RatVec v = M.basis_vector(j);
        const RatVec bracket = [&] {
            RatVec a = M.apply_T(M.apply_x(v));
            const RatVec b = M.apply_x(M.apply_T(v));
            for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
            return a;
        }();
        RatVec expected = v;
        const RatVec sv = M.apply_s(v);
        for (std::size_t i = 0; i < expected.size(); ++i) expected[i] -= two_c * sv[i];
        if (bracket != expected) fail("[T,x] != 1 - 2c s on t^" + std::to_string(j));

        RatVec sxs = M.apply_s(M.apply_x(M.apply_s(v)));
        RatVec neg_x = M.apply_x(v);
        for (auto& e : neg_x) e = -e;
        if (sxs != neg_x) fail("s x s != -x on t^" + std::to_string(j));

        RatVec sTs = M.apply_s(M.apply_T(M.apply_s(v)));
        RatVec neg_T = M.apply_T(v);
        for (auto& e : neg_T) e = -e;
        if (sTs != neg_T) fail("s T s != -T on t^" + std::to_string(j));
    }
    const RatVec top = M.basis_vector(2 * M.m());
    if (M.apply_x(top) != RatVec(M.dim(), Rat(0))) fail("x t^{2m} != 0");
    const RatVec bottom = M.basis_vector(0);
    if (M.apply_T(bottom) != RatVec(M.dim(), Rat(0))) fail("T t^0 != 0");
    return rep;
}

// Element of W(B_p) = S_p x (Z/2)^p: a place permutation and a sign vector.
struct BpElement {
    std::vector<int> perm;  // position i moves to perm[i]
    std::vector<int> eps;   // +1 or -1 per position

    int sgn() const {
        // sign of the permutation times the product of the eps.
        int s = 1;
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        for (int e : eps) s *= e;
        return s;
    }
};

inline std::vector<BpElement> enumerate_Bp(int p) {
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<BpElement> out;
    for (const auto& s : perms)
        for (int mask = 0; mask < (1 << p); ++mask) {
            std::vector<int> eps(p);
            for (int i = 0; i < p; ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back({s, eps});
        }
    return out;
}

// X_r = U_r^{tensor p}: basis u^j, j in {0..r-1}^p, W(B_p) acting by signed
// place permutation: (sigma,eps) u^j = prod_i eps_i^{j_i} u^{j'} with
// j'_{sigma(i)} = j_i.
class XrModule {
public:
    XrModule(int p, int r) : p_(p), r_(r) {
        if (p < 1 || r < 1 || r % 2 == 0)
            throw ModuleError("X_r needs p >= 1 and odd r >= 1");
        group_ = enumerate_Bp(p);
        dim_ = 1;
        for (int i = 0; i < p; ++i) dim_ *= r;
    }

    int p() const { return p_; }
    int r() const { return r_; }
    long dim() const { return dim_; }
    const std::vector<BpElement>& group() const { return group_; }

    std::vector<int> index_tuple(long idx) const {
        std::vector<int> j(p_);
        for (int i = 0; i < p_; ++i) {
            j[i] = static_cast<int>(idx % r_);
            idx /= r_;
        }
        return j;
    }

    long tuple_index(const std::vector<int>& j) const {
        long idx = 0;
        for (int i = p_ - 1; i >= 0; --i) idx = idx * r_ + j[i];
        return idx;
    }

    // Image of basis vector idx under w: (target index, sign).
    std::pair<long, int> apply(const BpElement& w, long idx) const {
        const std::vector<int> j = index_tuple(idx);
        std::vector<int> out(p_);
        int sign = 1;
        for (int i = 0; i < p_; ++i) {
            out[w.perm[i]] = j[i];
            if (w.eps[i] == -1 && (j[i] & 1)) sign = -sign;
        }
        return {tuple_index(out), sign};
    }

private:
    int p_, r_;
    long dim_;
    std::vector<BpElement> group_;
};

// r = 2(c1 + (p-1) c2) must be an odd positive integer.
inline XrModule build_X_r(int p, const Rat& c1, const Rat& c2) {
    const Rat r = 2 * (c1 + (p - 1) * c2);
    if (!is_integer(r) || r < 1 || floor_int(r) % 2 == 0)
        throw ModuleError("2(c1 + (p-1)c2) = " + rat_to_string(r) +
                          " is not an odd positive integer");
    return XrModule(p, static_cast<int>(floor_int(r)));
}

// Character of W(B_p) as a function; chi(w) in {+1,-1}.
using BpCharacter = std::function<int(const BpElement&)>;

inline BpCharacter bp_trivial() {
    return [](const BpElement&) { return 1; };
}
inline BpCharacter bp_sign() {
    return [](const BpElement& w) { return w.sgn(); };
}

// Twist: same space, w acts as chi(w) * (old action). Represented by keeping
// the module and composing characters at evaluation time.
struct TwistedXr {
    const XrModule* module;
    BpCharacter twist_chi;

    std::pair<long, int> apply(const BpElement& w, long idx) const {
        auto [target, sign] = module->apply(w, idx);
        return {target, sign * twist_chi(w)};
    }
};

inline TwistedXr twist(const XrModule& M, BpCharacter chi) {
    return {&M, std::move(chi)};
}

// dim M[chi] by the trace formula (1/|W|) sum chi(w) tr(w).
template <typename Module>
inline Rat isotypic_dim_trace_bp(const Module& M, const std::vector<BpElement>& group,
                                 long dim, const BpCharacter& chi) {
    Rat total(0);
    for (const auto& w : group) {
        long tr = 0;
        for (long idx = 0; idx < dim; ++idx) {
            auto [target, sign] = M.apply(w, idx);
            if (target == idx) tr += sign;
        }
        total += Rat(chi(w) * tr);
    }
    return total / Rat(static_cast<long>(group.size()));
}

// dim M[chi] as the rank of the idempotent projection. The basis splits into
// W-orbits and each orbit carries chi with multiplicity at most one, so the
// rank is the number of orbits whose projection is nonzero.
template <typename Module>
inline long isotypic_dim_projection_bp(const Module& M, const std::vector<BpElement>& group,
                                       long dim, const BpCharacter& chi) {
    std::vector<bool> seen(dim, false);
    long rank = 0;
    for (long idx = 0; idx < dim; ++idx) {
        if (seen[idx]) continue;
        std::map<long, long> coeffs;  // target index -> sum of chi(w) * sign
        for (const auto& w : group) {
            auto [target, sign] = M.apply(w, idx);
            seen[target] = true;
            coeffs[target] += chi(w) * sign;
        }
        for (const auto& [t, c] : coeffs)
            if (c != 0) {
                ++rank;
                break;
            }
    }
    return rank;
}

// dim X_r[sgn] via the exterior-power model: strictly increasing p-tuples of
// odd exponents in {0..r-1}; with m = (r+1)/2 there are m-1 odd exponents,
// giving binom(m-1, p).
inline long sgn_dim_exterior_count(int p, int r) {
    const int odd_count = (r - 1) / 2;
    // binom(odd_count, p)
    if (p > odd_count) return 0;
    long num = 1, den = 1;
    for (int i = 0; i < p; ++i) {
        num *= odd_count - i;
        den *= i + 1;
    }
    return num / den;
}

inline long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

struct SgnDimReport {
    long by_projection;
    Rat by_trace;
    long by_exterior;
    long expected_binom;  // binom(m-1, p), m = (r+1)/2
    bool agree;
};

inline SgnDimReport sgn_isotypic_dim(const XrModule& M) {
    SgnDimReport rep;
    const BpCharacter sgn = bp_sign();
    rep.by_trace = isotypic_dim_trace_bp(M, M.group(), M.dim(), sgn);
    rep.by_projection = isotypic_dim_projection_bp(M, M.group(), M.dim(), sgn);
    rep.by_exterior = sgn_dim_exterior_count(M.p(), M.r());
    rep.expected_binom = binom((M.r() + 1) / 2 - 1, M.p());
    rep.agree = rep.by_trace == Rat(rep.by_projection) &&
                rep.by_projection == rep.by_exterior &&
                rep.by_exterior == rep.expected_binom;
    return rep;
}

// Simple-root length pattern in Bourbaki order: 0 = short orbit, 1 = long
// orbit (0 everywhere for a single orbit), plus the adjacent simple pairs
// joined by a double bond (the B2/C2 sub-systems).
struct SimpleRootPattern {
    std::vector<int> orbit;
    std::vector<int> double_bond_at;  // pair (i, i+1), 0-based i
};

inline SimpleRootPattern simple_root_pattern(char family, int rank) {
    SimpleRootPattern pat;
    switch (family) {
        case 'A':
        case 'D':
        case 'E':
        case 's':
            pat.orbit.assign(rank, 0);
            break;
        case 'B':
            pat.orbit.assign(rank, 1);
            pat.orbit[rank - 1] = 0;
            pat.double_bond_at.push_back(rank - 2);
            break;
        case 'C':
            pat.orbit.assign(rank, 0);
            pat.orbit[rank - 1] = 1;
            pat.double_bond_at.push_back(rank - 2);
            break;
        case 'F':
            pat.orbit = {1, 1, 0, 0};
            pat.double_bond_at.push_back(1);
            break;
        case 'G':
            pat.orbit = {0, 1};  // triple bond, no B2 sub-system
            break;
        default:
            throw ModuleError("unknown family");
    }
    return pat;
}

struct WitnessReport {
    char mechanism;      // 'a' or 'b'
    int root_index;      // 1-based simple root (mechanism a) or first of the pair (b)
    Rat c;               // the multiplicity value at the witness root (a)
    long r;              // 2(c_j + c_{j+1}) for (b); 2m+1 for (a)
    long m;
};

// Scans a pair's restricted root system for the two non-simplicity
// mechanisms, (a) before (b): (a) a simple root with c = m + 1/2, m >= 1;
// (b) an adjacent double-bond pair with r = 2(c_j + c_{j+1}) odd and >= 5.
// Witnesses are evaluated at the positive values c = k.
inline std::optional<WitnessReport> parabolic_witness(const PairInstance& inst) {
    const SimpleRootPattern pat = simple_root_pattern(inst.family, inst.rank);
    auto c_of = [&](int i) { return pat.orbit[i] == 0 ? inst.k_short : inst.k_long; };
    for (int i = 0; i < static_cast<int>(pat.orbit.size()); ++i) {
        const Rat c = c_of(i);
        if (is_half_integer(c) && c >= Rat(3, 2)) {
            const long m = static_cast<long>(floor_int(c));  // c = m + 1/2
            return WitnessReport{'a', i + 1, c, 2 * m + 1, m};
        }
    }
    for (int i : pat.double_bond_at) {
        const Rat r = 2 * (c_of(i) + c_of(i + 1));
        if (is_integer(r) && r >= 5 && floor_int(r) % 2 != 0) {
            const long rv = static_cast<long>(floor_int(r));
            return WitnessReport{'b', i + 1, c_of(i), rv, (rv + 1) / 2};
        }
    }
    return std::nullopt;
}

}  // namespace cherednik
