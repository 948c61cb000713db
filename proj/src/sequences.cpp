#include "seqcorr/sequences.hpp"

#include <algorithm>

#include "seqcorr/parallel.hpp"
#include "seqcorr/quadform.hpp"

namespace seqcorr {

uint64_t CorrelationSpectrum::total_count() const {
    uint64_t t = 0;
    for (const auto& [v, c] : entries) t += c;
    return t;
}

int CorrelationSpectrum::distinct_values() const {
    int k = 0;
    for (const auto& [v, c] : entries)
        if (c) ++k;
    return k;
}

void CorrelationSpectrum::validate(int m) const {
    const uint64_t shifts = (uint64_t{1} << n) - 1;
    if (total_count() != shifts) raise(Errc::incomplete_spectrum, "counts do not cover all shifts");
    int64_t s1 = 0;
    int64_t s2 = 0;
    for (const auto& [v, c] : entries) {
        s1 += v * static_cast<int64_t>(c);
        s2 += (v + 1) * (v + 1) * static_cast<int64_t>(c);
    }
    if (s1 != 1 || s2 != static_cast<int64_t>((uint64_t{1} << m) * shifts))
        raise(Errc::invariant_violation, "spectrum moment identities violated");
}

std::vector<uint8_t> m_sequence(const Field& field, SeqKind which) {
    if (which == SeqKind::short_seq) return field.subfield().tr1_by_log;
    if (field.has_log_table()) return field.trbit_by_log();
    std::vector<uint8_t> s(field.order());
    uint32_t x = 1;
    for (uint64_t t = 0; t < field.order(); ++t) {
        s[t] = static_cast<uint8_t>(field.trace_bit(x));
        x = field.mul(x, field.alpha());
    }
    return s;
}

int64_t cross_correlation_direct(const Field& field, uint64_t d, uint64_t tau) {
    const uint64_t so = field.suborder();
    if (gcd_u64(d, so) != 1) raise(Errc::d_not_coprime, "gcd(d, 2^n-1) != 1");
    if (tau >= so) raise(Errc::tau_out_of_range, "tau must lie in [0, 2^n-2]");
    std::vector<uint8_t> s = m_sequence(field, SeqKind::long_seq);
    std::vector<uint8_t> u = m_sequence(field, SeqKind::short_seq);
    uint64_t ui = d * tau % so;
    const uint64_t step = d % so;
    int64_t sum = 0;
    for (uint64_t t = 0; t < field.order(); ++t) {
        sum += (s[t] ^ u[ui]) ? -1 : 1;
        ui += step;
        if (ui >= so) ui -= so;
    }
    return sum;
}

int64_t cross_correlation_charsum(const Field& field, uint64_t d, uint32_t a) {
    if (a == 0) raise(Errc::a_zero, "a must be nonzero");
    if (!field.in_subfield(a, field.n()))
        raise(Errc::a_not_in_subfield, "a must lie in the half-degree subfield");
    const Subfield& sf = field.subfield();
    const uint64_t so = field.suborder();
    const uint64_t la = sf.log_of(a);
    // a * x^{dT} = beta^{la + j d} for x = alpha^j
    uint64_t js = la % so;
    const uint64_t step = d % so;
    int64_t sum = 0;
    if (field.has_log_table()) {
        const std::vector<uint8_t>& tr = field.trbit_by_log();
        for (uint64_t j = 0; j < field.order(); ++j) {
            sum += (tr[j] ^ sf.tr1_by_log[js]) ? -1 : 1;
            js += step;
            if (js >= so) js -= so;
        }
    } else {
        uint32_t x = 1;
        for (uint64_t j = 0; j < field.order(); ++j) {
            sum += (field.trace_bit(x) ^ sf.tr1_by_log[js]) ? -1 : 1;
            js += step;
            if (js >= so) js -= so;
            x = field.mul(x, field.alpha());
        }
    }
    return sum;
}

int64_t correlation_via_quadform(const Field& field, const DecimationParams& params, uint32_t a) {
    if (gcd_pow2(2 * params.n, params.l, GcdSign::plus) != 1)
        raise(Errc::l_not_normalized, "gcd(2^l+1, 2^m-1) != 1");
    QuadFormInstance inst = make_instance(field, params, a);
    return -1 + trace_transform_at_zero(inst);
}

namespace detail {

namespace {

std::vector<int64_t> merge_locals(std::vector<std::vector<int64_t>>& locals) {
    std::vector<int64_t> out(locals.front().size(), 0);
    for (const auto& loc : locals)
        for (size_t i = 0; i < out.size(); ++i) out[i] += loc[i];
    return out;
}

} // namespace

std::vector<int64_t> fiber_sums_tr(const Field& field, int threads) {
    const uint64_t so = field.suborder();
    const int ws = resolve_threads(threads);
    std::vector<std::vector<int64_t>> locals(std::max(1, ws), std::vector<int64_t>(so, 0));
    if (field.has_log_table()) {
        const std::vector<uint8_t>& tr = field.trbit_by_log();
        parallel_ranges(field.order(), ws, [&](int w, uint64_t b, uint64_t e) {
            std::vector<int64_t>& bin = locals[w];
            uint64_t js = b % so;
            for (uint64_t j = b; j < e; ++j) {
                bin[js] += tr[j] ? -1 : 1;
                if (++js == so) js = 0;
            }
        });
    } else {
        parallel_ranges(field.order(), ws, [&](int w, uint64_t b, uint64_t e) {
            std::vector<int64_t>& bin = locals[w];
            uint64_t js = b % so;
            uint32_t x = field.exp_alpha(b);
            for (uint64_t j = b; j < e; ++j) {
                bin[js] += field.trace_bit(x) ? -1 : 1;
                if (++js == so) js = 0;
                x = field.mul(x, field.alpha());
            }
        });
    }
    return merge_locals(locals);
}

std::vector<int64_t> fiber_sums_quad(const Field& field, int l, int threads) {
    const uint64_t so = field.suborder();
    const uint64_t ord = field.order();
    const uint64_t exp = ((uint64_t{1} << l) + 1) % ord;
    const int ws = resolve_threads(threads);
    std::vector<std::vector<int64_t>> locals(std::max(1, ws), std::vector<int64_t>(so, 0));
    if (field.has_log_table()) {
        const std::vector<uint8_t>& tr = field.trbit_by_log();
        parallel_ranges(ord, ws, [&](int w, uint64_t b, uint64_t e) {
            std::vector<int64_t>& bin = locals[w];
            uint64_t js = b % so;
            uint64_t ep = b * exp % ord;
            for (uint64_t j = b; j < e; ++j) {
                bin[js] += tr[ep] ? -1 : 1;
                if (++js == so) js = 0;
                ep += exp;
                if (ep >= ord) ep -= ord;
            }
        });
    } else {
        const uint32_t g = field.exp_alpha(exp);
        parallel_ranges(ord, ws, [&](int w, uint64_t b, uint64_t e) {
            std::vector<int64_t>& bin = locals[w];
            uint64_t js = b % so;
            uint32_t p = field.exp_alpha(b * exp % ord);
            for (uint64_t j = b; j < e; ++j) {
                bin[js] += field.trace_bit(p) ? -1 : 1;
                if (++js == so) js = 0;
                p = field.mul(p, g);
            }
        });
    }
    return merge_locals(locals);
}

std::vector<int64_t> rebin_by_decimation(const Field& field, const std::vector<int64_t>& fiber,
                                         uint64_t d) {
    const Subfield& sf = field.subfield();
    const uint64_t so = field.suborder();
    std::vector<int64_t> bins(uint64_t{1} << field.n(), 0);
    uint64_t jd = 0;
    const uint64_t step = d % so;
    for (uint64_t j = 0; j < so; ++j) {
        bins[sf.coord_by_log[jd]] += fiber[j];
        jd += step;
        if (jd >= so) jd -= so;
    }
    return bins;
}

void wht_inplace(std::vector<int64_t>& v) {
    const size_t size = v.size();
    for (size_t len = 1; len < size; len <<= 1)
        for (size_t blk = 0; blk < size; blk += len << 1)
            for (size_t i = blk; i < blk + len; ++i) {
                int64_t a = v[i];
                int64_t b = v[i + len];
                v[i] = a + b;
                v[i + len] = a - b;
            }
}

CorrelationSpectrum spectrum_from_bins(const Field& field, uint64_t d, std::vector<int64_t> bins) {
    wht_inplace(bins);
    if (bins[0] != -1) raise(Errc::invariant_violation, "fiber bins lost mass");
    CorrelationSpectrum spec;
    spec.n = field.n();
    spec.d = d;
    for (size_t lam = 1; lam < bins.size(); ++lam) ++spec.entries[bins[lam]];
    spec.validate(field.m());
    return spec;
}

} // namespace detail

CorrelationSpectrum spectrum(const Field& field, uint64_t d, int threads) {
    const uint64_t so = field.suborder();
    const uint64_t dr = d % so;
    if (d < 1 || gcd_u64(dr, so) != 1) raise(Errc::d_not_coprime, "gcd(d, 2^n-1) != 1");
    if (auto li = find_l_i(dr, field.n()); li.has_value()) {
        auto fiber = detail::fiber_sums_quad(field, li->first, threads);
        return detail::spectrum_from_bins(field, d, detail::rebin_by_decimation(field, fiber, 1));
    }
    auto fiber = detail::fiber_sums_tr(field, threads);
    return detail::spectrum_from_bins(field, d, detail::rebin_by_decimation(field, fiber, dr));
}

} // namespace seqcorr
