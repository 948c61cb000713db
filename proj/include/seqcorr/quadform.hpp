#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "seqcorr/decimation.hpp"
#include "seqcorr/field.hpp"

namespace seqcorr {

// The quadratic form rho_a(x) = tr^m_1(x^{2^l+1}) + tr^n_1(a x^{2^n+1}) for a
// nonzero a in the half-degree subfield, with l (and t = n+l, k) taken from a
// normalized decimation.
struct QuadFormInstance {
    const Field* field = nullptr;
    DecimationParams params;
    uint32_t a = 0;
    uint32_t a_pow_2l = 0; // a^(2^l), the coefficient of f_a and g_a
};

QuadFormInstance make_instance(const Field& field, const DecimationParams& params, uint32_t a);

// rho_a(x) as a bit.
int rho_eval(const QuadFormInstance& inst, uint32_t x);

// Transform value at zero: sum over all x in F_{2^m} of (-1)^{rho_a(x)}.
int64_t trace_transform_at_zero(const QuadFormInstance& inst);

// Predicted distribution of transform values of a rank-2h quadratic form on
// F_{2^m}: value -> count over all 2^m transform points.
std::map<int64_t, uint64_t> lemma2_distribution(int m, int h);

// Number of roots in F_{2^m} of the linearized polynomial
// f_a(x) = x^{2^{2t}} + a^{2^l} x^{2^t} + x, computed as the kernel size of
// the associated m x m bit matrix.
uint64_t count_roots_f(const QuadFormInstance& inst);

struct RankResult {
    uint32_t a = 0;
    int kernel_dim = 0; // log2 of the number of roots of f_a
    int rank = 0;       // m - kernel_dim
    int half_rank = 0;  // rank / 2
};

RankResult rank_of(const QuadFormInstance& inst);

enum class FieldDeg { full_m, half_n };

// Roots of g_a(y) = y^{2^t+1} + a^{2^l} y + 1 in F_{2^m} or F_{2^n},
// by exhaustive evaluation.
uint64_t count_roots_g(const Field& field, FieldDeg deg, const DecimationParams& params, uint32_t a);

// Roots of h_c(z) = z^{2^t+1} + c z + c for any t >= 1; deg selects the field.
uint64_t count_roots_h(const Field& field, FieldDeg deg, int t, uint32_t c);

struct Lemma5Counts {
    uint64_t n0 = 0;
    uint64_t n1 = 0;
    uint64_t n2 = 0;
    uint64_t nq1 = 0; // parameters with q+1 roots
};

// Closed-form census of root counts of h_c over F_{q^mu}^* fibers, q = 2^k,
// mu = n/k odd.
Lemma5Counts lemma5_counts(uint64_t q, int mu);

struct RankCensus {
    int m = 0;
    int l = 0;
    int k = 0;
    std::map<int, uint64_t> by_rank; // rank value -> number of a attaining it
    uint64_t r_full = 0;             // rank m
    uint64_t r_reduced = 0;          // rank m - 2k
};

// Tally rank_of over all a in the subfield's multiplicative group and check
// the tallies against the closed forms; divergence throws census_mismatch.
RankCensus rank_census(const Field& field, const DecimationParams& params, int threads = 0);

// Closed forms for the census above.
uint64_t rank_census_full_formula(int n, int k);    // R_m
uint64_t rank_census_reduced_formula(int n, int k); // R_{m-2k}

} // namespace seqcorr
