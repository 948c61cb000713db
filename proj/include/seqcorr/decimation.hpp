#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "seqcorr/errors.hpp"

namespace seqcorr {

// A decimation d with d*(2^l+1) = 2^i (mod 2^n-1) and the derived structure
// constants: k = gcd(l,n), n = k*r, l = k*s, t = n+l. The stored l is
// normalized, i.e. gcd(2^l+1, 2^m-1) = 1 with m = 2n, which makes s even,
// 0 < s < r, gcd(r,s) = 1 and r >= 3 odd.
struct DecimationParams {
    int n = 0;
    uint64_t d = 0;
    int l = 0;
    int i = 0;
    int k = 0;
    int r = 0;
    int s = 0;
    int t = 0;                 // n + l
    uint64_t coset_leader = 0; // smallest element of {d * 2^j mod 2^n-1}
    // every normalized (l, i) solving the congruence for this d; the
    // canonical one above is the smallest l
    std::vector<std::pair<int, int>> pairs;

    int m() const { return 2 * n; }
};

// Smallest member of the cyclotomic coset of d modulo 2^n-1.
uint64_t coset_leader(uint64_t d, int n);

// Smallest normalized l in (0, n) admitting an i with d*(2^l+1) = 2^i
// (mod 2^n-1), together with that i. Normalized means gcd(2^l+1, 2^m-1) = 1;
// whenever the congruence is solvable at all, a normalized l exists.
std::optional<std::pair<int, int>> find_l_i(uint64_t d, int n);

// Replace l by n-l when needed so that gcd(2^l+1, 2^m-1) = 1. Identity on
// already-normalized input; throws no_valid_l when neither choice works
// (which happens exactly when n is a power of two).
int normalize_l(int l, int n);

// Validate the congruence for (d, l, i) and fill in (k, r, s, t).
DecimationParams derive_params(uint64_t d, int l, int i, int n);

// All decimations d in [1, 2^n-2] coprime to 2^n-1 that satisfy the
// congruence for some (l, i), with derived parameters, sorted by d.
std::vector<DecimationParams> enumerate_decimations(int n);

// The canonical decimation for a given normalized l: the inverse of 2^l+1
// modulo 2^n-1 (i = 0). Convenience for rank censuses indexed by (m, l).
uint64_t d_for_l(int n, int l);

} // namespace seqcorr
