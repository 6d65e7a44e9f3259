#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cherednik/rat.hpp"

namespace cherednik {

// Deterministic source of small rationals and permutations for the property
// suites. Same seed, same sequence, on every platform (mt19937_64 is pinned
// by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rat rational(long max_num = 9, long max_den = 9) {
        return Rat(integer(-max_num, max_num), integer(1, max_den));
    }

    Rat nonzero_rational(long max_num = 9, long max_den = 9) {
        Rat r;
        do {
            r = rational(max_num, max_den);
        } while (r == 0);
        return r;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(p[i], p[integer(0, i)]);
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace cherednik
