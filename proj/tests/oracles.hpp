#pragma once

// Independent oracles used by the tests: straightforward reimplementations
// kept deliberately naive so they share as little as possible with the
// library's fast paths.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "seqcorr/field.hpp"

namespace oracle {

// schoolbook multiply-then-reduce in F_2[x]/(poly), poly of degree deg
inline uint64_t poly_mulmod(uint64_t a, uint64_t b, uint64_t poly, int deg) {
    uint64_t prod = 0;
    for (int i = 0; i < 64; ++i)
        if (b >> i & 1) prod ^= a << i;
    for (int bit = 63; bit >= deg; --bit)
        if (prod >> bit & 1) prod ^= poly << (bit - deg);
    return prod;
}

// multiplicative order of x in F_2[x]/(poly) by stepping y = x, x^2, ...;
// returns 0 if 1 is never reached within 2^deg - 1 steps
inline uint64_t order_of_x(uint64_t poly, int deg) {
    const uint64_t bound = (uint64_t{1} << deg) - 1;
    uint64_t y = 2; // y = x^j at the top of iteration j
    for (uint64_t j = 1; j <= bound; ++j) {
        if (y == 1) return j;
        y = poly_mulmod(y, 2, poly, deg);
    }
    return 0;
}

// smallest primitive polynomial of degree deg by scan with the stepping oracle
inline uint64_t smallest_primitive(int deg) {
    const uint64_t bound = (uint64_t{1} << deg) - 1;
    for (uint64_t p = (uint64_t{1} << deg) + 1;; p += 2) {
        if (order_of_x(p, deg) == bound) return p;
    }
}

// one period of the long/short sequences through the checked Field API only
inline std::vector<uint8_t> long_sequence(const seqcorr::Field& f) {
    std::vector<uint8_t> s;
    for (uint64_t t = 0; t < f.order(); ++t)
        s.push_back(static_cast<uint8_t>(f.trace(f.pow(f.alpha(), static_cast<int64_t>(t)), f.m(), 1)));
    return s;
}

inline std::vector<uint8_t> short_sequence(const seqcorr::Field& f) {
    std::vector<uint8_t> u;
    for (uint64_t t = 0; t < f.suborder(); ++t)
        u.push_back(static_cast<uint8_t>(f.trace(f.pow(f.beta(), static_cast<int64_t>(t)), f.n(), 1)));
    return u;
}

// literal time-domain cross-correlation from precomputed sequences
inline int64_t direct_corr(const std::vector<uint8_t>& s, const std::vector<uint8_t>& u, uint64_t d,
                           uint64_t tau) {
    int64_t c = 0;
    const uint64_t so = u.size();
    for (uint64_t t = 0; t < s.size(); ++t) c += (s[t] ^ u[d * (t + tau) % so]) ? -1 : 1;
    return c;
}

inline std::map<int64_t, uint64_t> direct_spectrum(const seqcorr::Field& f, uint64_t d) {
    auto s = long_sequence(f);
    auto u = short_sequence(f);
    std::map<int64_t, uint64_t> spec;
    for (uint64_t tau = 0; tau < u.size(); ++tau) ++spec[direct_corr(s, u, d, tau)];
    return spec;
}

} // namespace oracle
