#include "seqcorr/decimation.hpp"

#include <algorithm>
#include <bit>

#include "seqcorr/field.hpp"

namespace seqcorr {

namespace {

void check_n(int n) {
    if (n < 2 || n > 13) raise(Errc::m_out_of_range, "half-degree n must lie in [2, 13]");
}

// all (l, i) solving d(2^l+1) = 2^i (mod 2^n-1), no normalization
std::vector<std::pair<int, int>> raw_solutions(uint64_t d, int n) {
    const uint64_t mod = (uint64_t{1} << n) - 1;
    std::vector<std::pair<int, int>> out;
    for (int l = 1; l < n; ++l) {
        uint64_t v = d * ((uint64_t{1} << l) + 1) % mod;
        if (v != 0 && std::has_single_bit(v)) out.emplace_back(l, std::countr_zero(v));
    }
    return out;
}

bool l_is_normalized(int l, int n) { return gcd_pow2(2 * n, l, GcdSign::plus) == 1; }

} // namespace

uint64_t coset_leader(uint64_t d, int n) {
    const uint64_t mod = (uint64_t{1} << n) - 1;
    uint64_t leader = d, v = d;
    for (int j = 1; j < n; ++j) {
        v = v * 2 % mod;
        leader = std::min(leader, v);
    }
    return leader;
}

std::optional<std::pair<int, int>> find_l_i(uint64_t d, int n) {
    check_n(n);
    const uint64_t mod = (uint64_t{1} << n) - 1;
    if (d < 1 || d >= mod) raise(Errc::bad_parameters, "d must lie in [1, 2^n-2]");
    if (gcd_u64(d, mod) != 1) raise(Errc::d_not_coprime, "gcd(d, 2^n-1) != 1");
    for (auto [l, i] : raw_solutions(d, n))
        if (l_is_normalized(l, n)) return std::make_pair(l, i);
    return std::nullopt;
}

int normalize_l(int l, int n) {
    if (l <= 0 || l >= n) raise(Errc::bad_parameters, "l must lie in (0, n)");
    if (l_is_normalized(l, n)) return l;
    if (l_is_normalized(n - l, n)) return n - l;
    raise(Errc::no_valid_l, "neither l nor n-l has gcd(2^l+1, 2^m-1) = 1");
}

DecimationParams derive_params(uint64_t d, int l, int i, int n) {
    check_n(n);
    const uint64_t mod = (uint64_t{1} << n) - 1;
    if (d < 1 || d >= mod || gcd_u64(d, mod) != 1)
        raise(Errc::invariant_violation, "d not coprime to 2^n-1 or out of range");
    if (l <= 0 || l >= n || i < 0 || i >= n)
        raise(Errc::invariant_violation, "l or i out of range");
    if (d * ((uint64_t{1} << l) + 1) % mod != (uint64_t{1} << i) % mod)
        raise(Errc::invariant_violation, "d(2^l+1) != 2^i (mod 2^n-1)");
    if (!l_is_normalized(l, n))
        raise(Errc::invariant_violation, "l not normalized: gcd(2^l+1, 2^m-1) > 1");

    DecimationParams p;
    p.n = n;
    p.d = d;
    p.l = l;
    p.i = i;
    p.k = static_cast<int>(gcd_u64(l, n));
    p.r = n / p.k;
    p.s = l / p.k;
    p.t = n + l;
    p.coset_leader = coset_leader(d, n);

    if (p.s % 2 != 0 || p.s <= 0 || p.s >= p.r)
        raise(Errc::invariant_violation, "s = l/k must be even with 0 < s < r");
    if (gcd_u64(p.r, p.s) != 1) raise(Errc::invariant_violation, "gcd(r, s) != 1");
    if (gcd_u64(p.t, 2 * n) != static_cast<uint64_t>(p.k) ||
        gcd_u64(p.t, n) != static_cast<uint64_t>(p.k))
        raise(Errc::invariant_violation, "gcd(t, m) or gcd(t, n) differs from k");
    return p;
}

std::vector<DecimationParams> enumerate_decimations(int n) {
    check_n(n);
    const uint64_t mod = (uint64_t{1} << n) - 1;
    std::vector<DecimationParams> out;
    for (uint64_t d = 1; d < mod; ++d) {
        if (gcd_u64(d, mod) != 1) continue;
        std::vector<std::pair<int, int>> normalized;
        for (auto [l, i] : raw_solutions(d, n))
            if (l_is_normalized(l, n)) normalized.emplace_back(l, i);
        if (normalized.empty()) continue;
        auto [l, i] = normalized.front(); // smallest l is canonical
        DecimationParams p = derive_params(d, l, i, n);
        p.pairs = std::move(normalized);
        out.push_back(std::move(p));
    }
    return out;
}

uint64_t d_for_l(int n, int l) {
    check_n(n);
    if (normalize_l(l, n) != l) raise(Errc::l_not_normalized, "l=" + std::to_string(l));
    const uint64_t mod = (uint64_t{1} << n) - 1;
    uint64_t base = ((uint64_t{1} << l) + 1) % mod;
    // modular inverse by extended Euclid
    int64_t r0 = static_cast<int64_t>(mod), r1 = static_cast<int64_t>(base);
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) raise(Errc::d_not_coprime, "2^l+1 not invertible mod 2^n-1");
    int64_t inv = t0 % static_cast<int64_t>(mod);
    if (inv < 0) inv += static_cast<int64_t>(mod);
    return static_cast<uint64_t>(inv);
}

} // namespace seqcorr
