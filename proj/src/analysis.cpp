#include "seqcorr/analysis.hpp"

#include <algorithm>

#include "seqcorr/parallel.hpp"

namespace seqcorr {

std::map<int64_t, uint64_t> TheoremPrediction::nonzero() const {
    std::map<int64_t, uint64_t> out;
    for (const Row& r : rows)
        if (r.count) out[r.value] = r.count;
    return out;
}

TheoremPrediction theorem1_prediction(int n, int k) {
    if (k < 1 || n < 1 || n % k != 0 || (n / k) % 2 == 0)
        raise(Errc::bad_parameters, "need k | n with n/k odd");
    TheoremPrediction p;
    p.n = n;
    p.k = k;
    const int64_t two_n = int64_t{1} << n;
    const int64_t two_nk = int64_t{1} << (n + k);
    // all divisions below are exact because k | n and n/k is odd
    uint64_t m1 = (uint64_t{1} << (n - k)) - 1;
    uint64_t m2 = ((uint64_t{1} << n) + 1) / ((uint64_t{1} << k) + 1) * (uint64_t{1} << (k - 1));
    uint64_t m3 = ((uint64_t{1} << n) - 1) / ((uint64_t{1} << k) - 1) * ((uint64_t{1} << (k - 1)) - 1);
    uint64_t m5 = ((uint64_t{1} << (n - k)) - 1) / ((uint64_t{1} << (2 * k)) - 1);
    p.rows = {{-1, m1}, {-1 + two_n, m2}, {-1 - two_n, m3}, {-1 - two_nk, m5}};
    return p;
}

bool lemma6_check(const CorrelationSpectrum& spec, uint64_t nu, int m) {
    const int n = spec.n;
    const uint64_t shifts = (uint64_t{1} << n) - 1;
    if (spec.total_count() != shifts)
        raise(Errc::incomplete_spectrum, "spectrum does not cover all shifts");
    __int128 s1 = 0, s2 = 0, s3 = 0;
    for (const auto& [v, c] : spec.entries) {
        __int128 cnt = c;
        __int128 vp1 = v + 1;
        s1 += static_cast<__int128>(v) * cnt;
        s2 += vp1 * vp1 * cnt;
        s3 += vp1 * vp1 * vp1 * cnt;
    }
    const __int128 rhs2 = static_cast<__int128>(uint64_t{1} << m) * shifts;
    const __int128 rhs3 = -(static_cast<__int128>(1) << (2 * m)) +
                          static_cast<__int128>(nu + 3) * (static_cast<__int128>(1) << (n + m));
    return s1 == 1 && s2 == rhs2 && s3 == rhs3;
}

uint64_t count_nu(const Field& field, uint64_t d) {
    const uint64_t so = field.suborder();
    if (gcd_u64(d % so, so) != 1) raise(Errc::d_not_coprime, "gcd(d, 2^n-1) != 1");
    const uint64_t ord = field.order();
    const uint64_t e = d % so * field.norm_exponent() % ord;
    uint64_t nu = 0;
    if (field.has_log_table()) {
        for (uint64_t j = 0; j < ord; ++j) {
            uint32_t x1 = field.exp_alpha(j);
            uint32_t x2 = x1 ^ 1u;
            if (x2 == 0) continue; // x1 = 1 makes x2 zero
            uint32_t p1 = field.exp_alpha(j * e % ord);
            uint32_t p2 = field.exp_alpha(field.log(x2) * e % ord);
            if ((p1 ^ p2 ^ 1u) == 0) ++nu;
        }
    } else {
        uint32_t x1 = 1;
        for (uint64_t j = 0; j < ord; ++j) {
            uint32_t x2 = x1 ^ 1u;
            if (x2 != 0) {
                uint32_t p1 = field.pow(x1, static_cast<int64_t>(e));
                uint32_t p2 = field.pow(x2, static_cast<int64_t>(e));
                if ((p1 ^ p2 ^ 1u) == 0) ++nu;
            }
            x1 = field.mul(x1, field.alpha());
        }
    }
    return nu;
}

VerifyReport verify_theorem1(const Field& field, const DecimationParams& params, int threads) {
    VerifyReport rep;
    rep.m = field.m();
    rep.d = params.d;
    rep.l = params.l;
    rep.k = params.k;

    auto fiber = detail::fiber_sums_quad(field, params.l, threads);
    rep.empirical = detail::spectrum_from_bins(field, params.d, detail::rebin_by_decimation(field, fiber, 1));
    rep.predicted = theorem1_prediction(params.n, params.k);
    rep.census = rank_census(field, params, threads);

    rep.pass = true;
    if (rep.empirical.entries != rep.predicted.nonzero()) {
        rep.pass = false;
        rep.detail = "spectrum differs from the closed-form distribution";
    }
    const int64_t two_n = int64_t{1} << params.n;
    uint64_t plus = rep.empirical.entries.count(-1 + two_n) ? rep.empirical.entries.at(-1 + two_n) : 0;
    uint64_t minus = rep.empirical.entries.count(-1 - two_n) ? rep.empirical.entries.at(-1 - two_n) : 0;
    if (plus + minus != rep.census.r_full) {
        rep.pass = false;
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += "count of values -1 +- 2^n differs from the full-rank census";
    }
    return rep;
}

int classify_valuedness(const CorrelationSpectrum& spec) { return spec.distinct_values(); }

std::vector<SearchRecord> search_decimations(const Field& field, int max_values, int threads) {
    const int n = field.n();
    if (field.m() > 20) raise(Errc::m_too_large, "full search is bounded at m = 20");
    if (max_values < 3) raise(Errc::bad_parameters, "max_values must be >= 3");

    const uint64_t so = field.suborder();
    std::vector<uint64_t> leaders;
    for (uint64_t d = 1; d < so; ++d)
        if (gcd_u64(d, so) == 1 && coset_leader(d, n) == d) leaders.push_back(d);

    auto fiber = detail::fiber_sums_tr(field, threads);
    std::vector<std::optional<SearchRecord>> slots(leaders.size());
    parallel_ranges(leaders.size(), threads, [&](int, uint64_t b, uint64_t e) {
        for (uint64_t idx = b; idx < e; ++idx) {
            uint64_t d = leaders[idx];
            CorrelationSpectrum spec =
                detail::spectrum_from_bins(field, d, detail::rebin_by_decimation(field, fiber, d));
            int values = spec.distinct_values();
            if (values > max_values) continue;
            SearchRecord rec;
            rec.m = field.m();
            rec.d = d;
            rec.num_values = values;
            rec.spectrum = std::move(spec);
            rec.matched = find_l_i(d, n);
            slots[idx] = std::move(rec);
        }
    });

    std::vector<SearchRecord> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

} // namespace seqcorr
