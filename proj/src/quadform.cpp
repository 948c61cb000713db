#include "seqcorr/quadform.hpp"

#include <algorithm>

#include "seqcorr/gf2linalg.hpp"
#include "seqcorr/parallel.hpp"

namespace seqcorr {

namespace {

uint64_t upow(uint64_t base, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

uint64_t exact_div(uint64_t num, uint64_t den, const char* what) {
    if (den == 0 || num % den != 0) raise(Errc::bad_parameters, std::string("non-integer count: ") + what);
    return num / den;
}

// f_a with fixed (field, t): images of the basis under x -> x^{2^{2t}} and
// x -> x^{2^t} are a-independent, so censuses reuse them across all a.
struct LinearizedFamily {
    const Field& field;
    std::vector<uint32_t> frob_2t;
    std::vector<uint32_t> frob_t;

    LinearizedFamily(const Field& f, int t) : field(f) {
        const int m = f.m();
        for (int i = 0; i < m; ++i) {
            uint32_t e = uint32_t{1} << i;
            frob_t.push_back(f.frob(e, t % m));
            frob_2t.push_back(f.frob(e, 2 * t % m));
        }
    }

    int kernel_dim(uint32_t a_pow_2l) const {
        const int m = field.m();
        std::vector<uint32_t> cols(m);
        for (int i = 0; i < m; ++i)
            cols[i] = frob_2t[i] ^ field.mul(a_pow_2l, frob_t[i]) ^ (uint32_t{1} << i);
        return static_cast<int>(gf2::nullspace(cols, m).size());
    }
};

} // namespace

QuadFormInstance make_instance(const Field& field, const DecimationParams& params, uint32_t a) {
    if (a == 0) raise(Errc::a_zero, "a must be nonzero");
    if (!field.in_subfield(a, field.n()))
        raise(Errc::a_not_in_subfield, "a must lie in the half-degree subfield");
    if (params.n != field.n()) raise(Errc::field_mismatch, "params derived for a different field");
    QuadFormInstance inst;
    inst.field = &field;
    inst.params = params;
    inst.a = a;
    inst.a_pow_2l = field.frob(a, params.l);
    return inst;
}

int rho_eval(const QuadFormInstance& inst, uint32_t x) {
    const Field& f = *inst.field;
    uint32_t x_quad = f.mul(f.frob(x, inst.params.l), x);         // x^{2^l+1}
    uint32_t x_norm = f.mul(f.frob(x, f.n()), x);                 // x^{2^n+1}, in the subfield
    return f.trace_bit(x_quad) ^ f.subfield_trace_bit(f.mul(inst.a, x_norm));
}

int64_t trace_transform_at_zero(const QuadFormInstance& inst) {
    const Field& f = *inst.field;
    const Subfield& sf = f.subfield();
    const uint64_t ord = f.order();
    const uint64_t so = f.suborder();
    const uint64_t exp = ((uint64_t{1} << inst.params.l) + 1) % ord;
    const uint64_t la = sf.log_of(inst.a);
    int64_t sum = 1; // x = 0 contributes (-1)^0
    uint64_t js = la % so;
    if (f.has_log_table()) {
        const std::vector<uint8_t>& tr = f.trbit_by_log();
        uint64_t ep = 0;
        for (uint64_t j = 0; j < ord; ++j) {
            sum += (tr[ep] ^ sf.tr1_by_log[js]) ? -1 : 1;
            ep += exp;
            if (ep >= ord) ep -= ord;
            if (++js == so) js = 0;
        }
    } else {
        const uint32_t g = f.exp_alpha(exp);
        uint32_t p = 1;
        for (uint64_t j = 0; j < ord; ++j) {
            sum += (f.trace_bit(p) ^ sf.tr1_by_log[js]) ? -1 : 1;
            p = f.mul(p, g);
            if (++js == so) js = 0;
        }
    }
    return sum;
}

std::map<int64_t, uint64_t> lemma2_distribution(int m, int h) {
    if (h < 1 || 2 * h > m) raise(Errc::h_out_of_range, "need 1 <= h <= m/2");
    std::map<int64_t, uint64_t> out;
    const int64_t mag = int64_t{1} << (m - h);
    out[mag] = (uint64_t{1} << (2 * h - 1)) + (uint64_t{1} << (h - 1));
    out[-mag] = (uint64_t{1} << (2 * h - 1)) - (uint64_t{1} << (h - 1));
    out[0] = (uint64_t{1} << m) - (uint64_t{1} << (2 * h));
    return out;
}

uint64_t count_roots_f(const QuadFormInstance& inst) {
    LinearizedFamily fam(*inst.field, inst.params.t);
    return uint64_t{1} << fam.kernel_dim(inst.a_pow_2l);
}

RankResult rank_of(const QuadFormInstance& inst) {
    LinearizedFamily fam(*inst.field, inst.params.t);
    const int m = inst.field->m();
    int dim = fam.kernel_dim(inst.a_pow_2l);
    if (dim % inst.params.k != 0 || dim % 2 != 0)
        raise(Errc::non_power_of_two_kernel,
              "kernel dimension " + std::to_string(dim) + " is not an even multiple of k");
    RankResult r;
    r.a = inst.a;
    r.kernel_dim = dim;
    r.rank = m - dim;
    r.half_rank = r.rank / 2;
    return r;
}

uint64_t count_roots_g(const Field& field, FieldDeg deg, const DecimationParams& params, uint32_t a) {
    if (a == 0) raise(Errc::a_zero, "a must be nonzero");
    if (!field.in_subfield(a, field.n()))
        raise(Errc::a_not_in_subfield, "a must lie in the half-degree subfield");
    const uint32_t a2l = field.frob(a, params.l);
    const int t = params.t;
    uint64_t count = 0;
    if (deg == FieldDeg::full_m) {
        const uint64_t ord = field.order();
        const uint64_t exp = ((uint64_t{1} << (t % field.m())) + 1) % ord;
        const uint32_t g1 = field.exp_alpha(exp);
        uint32_t u = 1;    // y^{2^t+1}
        uint32_t v = a2l;  // a^{2^l} y
        for (uint64_t j = 0; j < ord; ++j) {
            if ((u ^ v ^ 1u) == 0) ++count;
            u = field.mul(u, g1);
            v = field.mul(v, field.alpha());
        }
    } else {
        const Subfield& sf = field.subfield();
        const uint64_t so = field.suborder();
        const uint64_t exp = ((uint64_t{1} << (t % field.n())) + 1) % so;
        const uint64_t la = sf.log_of(a2l);
        uint64_t ju = 0, jv = la % so;
        for (uint64_t j = 0; j < so; ++j) {
            if ((sf.pow_beta[ju] ^ sf.pow_beta[jv] ^ 1u) == 0) ++count;
            ju += exp;
            if (ju >= so) ju -= so;
            if (++jv == so) jv = 0;
        }
    }
    return count;
}

uint64_t count_roots_h(const Field& field, FieldDeg deg, int t, uint32_t c) {
    if (t < 1) raise(Errc::bad_parameters, "t must be >= 1");
    if (c == 0) return 1; // h_0(z) = z^{2^t+1}, only root z = 0
    uint64_t count = 0;
    if (deg == FieldDeg::full_m) {
        const uint64_t ord = field.order();
        const uint64_t exp = ((uint64_t{1} << (t % field.m())) + 1) % ord;
        const uint32_t g1 = field.exp_alpha(exp);
        uint32_t u = 1; // z^{2^t+1}
        uint32_t v = c; // c z
        for (uint64_t j = 0; j < ord; ++j) {
            if ((u ^ v ^ c) == 0) ++count;
            u = field.mul(u, g1);
            v = field.mul(v, field.alpha());
        }
    } else {
        if (!field.in_subfield(c, field.n()))
            raise(Errc::a_not_in_subfield, "c must lie in the half-degree subfield");
        const Subfield& sf = field.subfield();
        const uint64_t so = field.suborder();
        const uint64_t exp = ((uint64_t{1} << (t % field.n())) + 1) % so;
        const uint64_t lc = sf.log_of(c);
        uint64_t ju = 0, jv = lc % so;
        for (uint64_t j = 0; j < so; ++j) {
            if ((sf.pow_beta[ju] ^ sf.pow_beta[jv] ^ c) == 0) ++count;
            ju += exp;
            if (ju >= so) ju -= so;
            if (++jv == so) jv = 0;
        }
    }
    return count;
}

Lemma5Counts lemma5_counts(uint64_t q, int mu) {
    if (q < 2 || (q & (q - 1)) != 0) raise(Errc::bad_parameters, "q must be a power of two >= 2");
    if (mu < 1 || mu % 2 == 0) raise(Errc::mu_even, "mu must be odd and >= 1");
    Lemma5Counts c;
    c.n0 = exact_div(upow(q, mu + 1) + q, 2 * (q + 1), "N_0");
    c.n1 = upow(q, mu - 1) - 1;
    c.n2 = exact_div((q - 2) * (upow(q, mu) - 1), 2 * (q - 1), "N_2");
    c.nq1 = exact_div(upow(q, mu - 1) - 1, q * q - 1, "N_{q+1}");
    return c;
}

uint64_t rank_census_full_formula(int n, int k) {
    uint64_t num = (uint64_t{1} << (n + 2 * k)) - (uint64_t{1} << (n + k)) - (uint64_t{1} << n) + 1;
    return exact_div(num, (uint64_t{1} << (2 * k)) - 1, "R_m");
}

uint64_t rank_census_reduced_formula(int n, int k) {
    uint64_t num = (uint64_t{1} << (n + k)) - (uint64_t{1} << (2 * k));
    return exact_div(num, (uint64_t{1} << (2 * k)) - 1, "R_{m-2k}");
}

RankCensus rank_census(const Field& field, const DecimationParams& params, int threads) {
    const int m = field.m();
    const int k = params.k;
    const Subfield& sf = field.subfield();
    const uint64_t so = field.suborder();
    const LinearizedFamily fam(field, params.t);

    const int ws = resolve_threads(threads);
    std::vector<std::vector<uint64_t>> locals(std::max(1, ws), std::vector<uint64_t>(m + 1, 0));
    parallel_ranges(so, ws, [&](int w, uint64_t b, uint64_t e) {
        for (uint64_t j = b; j < e; ++j) {
            uint32_t a2l = field.frob(sf.pow_beta[j], params.l);
            ++locals[w][fam.kernel_dim(a2l)];
        }
    });

    RankCensus census;
    census.m = m;
    census.l = params.l;
    census.k = k;
    for (const auto& loc : locals)
        for (int dim = 0; dim <= m; ++dim)
            if (loc[dim]) census.by_rank[m - dim] += loc[dim];

    for (const auto& [rank, cnt] : census.by_rank)
        if (rank != m && rank != m - 2 * k)
            raise(Errc::census_mismatch, "unexpected rank " + std::to_string(rank));
    census.r_full = census.by_rank.count(m) ? census.by_rank.at(m) : 0;
    census.r_reduced = census.by_rank.count(m - 2 * k) ? census.by_rank.at(m - 2 * k) : 0;
    if (census.r_full != rank_census_full_formula(params.n, k) ||
        census.r_reduced != rank_census_reduced_formula(params.n, k))
        raise(Errc::census_mismatch, "empirical rank tallies differ from the closed forms");
    return census;
}

} // namespace seqcorr
