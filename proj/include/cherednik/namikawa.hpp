#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cherednik/rankone.hpp"
#include "cherednik/rat.hpp"

namespace cherednik {

struct NamikawaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Permutation of the residue indices {0..l-1} at one hyperplane orbit.
using ResiduePerm = std::vector<int>;

inline bool is_permutation_of_range(const ResiduePerm& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    for (int v : sigma) {
        if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// (sigma * kappa)_i = kappa_{sigma(i)} + (sigma(i) - i)/l + (delta_{sigma(i),0} - delta_{i,0}).
inline RatVec twisted_action(const ResiduePerm& sigma, const RatVec& kappa) {
    const int ell = static_cast<int>(kappa.size());
    if (static_cast<int>(sigma.size()) != ell || !is_permutation_of_range(sigma))
        throw NamikawaError("sigma is not a permutation of {0..l-1}");
    RatVec out(ell);
    for (int i = 0; i < ell; ++i) {
        const int s = sigma[i];
        out[i] = kappa[s] + Rat(s - i, ell) + Rat((s == 0 ? 1 : 0) - (i == 0 ? 1 : 0));
    }
    return out;
}

// lambda_i = kappa_i + i/l + delta_{i,0} - 1; the action permutes this list:
// lambda(sigma * kappa) = lambda(kappa) composed with sigma.
inline RatVec lambda_of_kappa(const RatVec& kappa) {
    const int ell = static_cast<int>(kappa.size());
    RatVec out(ell);
    for (int i = 0; i < ell; ++i)
        out[i] = kappa[i] + Rat(i, ell) + Rat((i == 0 ? 1 : 0) - 1);
    return out;
}

// Composition convention making the twisted action a group action:
// compose(sigma, tau)(i) = tau(sigma(i)), so that
// twisted_action(compose(sigma, tau), kappa) = sigma * (tau * kappa).
inline ResiduePerm compose(const ResiduePerm& sigma, const ResiduePerm& tau) {
    if (sigma.size() != tau.size()) throw NamikawaError("permutation size mismatch");
    ResiduePerm out(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = tau[sigma[i]];
    return out;
}

struct InvarianceReport {
    bool ok = true;
    RatVec twisted_kappa;
    std::vector<long> disagreements;  // monomial exponents where the operators differ
};

// The spherical generator Phi(Y) is unchanged by the twisted action: its
// factor multiset {lambda_i} is permuted. Verified on z^m for |m| <= N.
inline InvarianceReport verify_invariance_rank1(int ell, const RatVec& kappa,
                                                const ResiduePerm& sigma, int N) {
    if (static_cast<int>(kappa.size()) != ell) throw NamikawaError("|kappa| != l");
    InvarianceReport rep;
    rep.twisted_kappa = twisted_action(sigma, kappa);
    const SphericalYCyclic before = spherical_Y_cyclic(ell, kappa);
    const SphericalYCyclic after = spherical_Y_cyclic(ell, rep.twisted_kappa);
    for (long m = -N; m <= N; ++m) {
        const Laurent1 z = Laurent1::monomial(m);
        if (!(before.apply(z) == after.apply(z))) {
            rep.ok = false;
            rep.disagreements.push_back(m);
        }
    }
    return rep;
}

}  // namespace cherednik
