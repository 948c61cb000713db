#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "seqcorr/decimation.hpp"
#include "seqcorr/field.hpp"

namespace seqcorr {

// Multiset of cross-correlation values over all shifts tau in [0, 2^n-2].
struct CorrelationSpectrum {
    int n = 0;
    uint64_t d = 0;
    std::map<int64_t, uint64_t> entries; // value -> count, ascending by value

    uint64_t total_count() const;
    int distinct_values() const;
    // Checks the shift count and the first two moment identities, which hold
    // for every d coprime to 2^n-1. Divergence means a computation bug.
    void validate(int m) const;
};

enum class SeqKind { long_seq, short_seq };

// One full period of s_t = tr^m_1(alpha^t) (long) or u_t = tr^n_1(beta^t)
// (short), as 0/1 bytes.
std::vector<uint8_t> m_sequence(const Field& field, SeqKind which);

// Time-domain sum over one long period; tau in [0, 2^n-2].
int64_t cross_correlation_direct(const Field& field, uint64_t d, uint64_t tau);

// Character-sum form: sum over x in F_{2^m}* of (-1)^{tr^m_1(x) + tr^n_1(a x^{dT})},
// with a = beta^{d tau} a nonzero element of the half-degree subfield.
int64_t cross_correlation_charsum(const Field& field, uint64_t d, uint32_t a);

// Quadratic-form route: -1 + sum over x of (-1)^{rho_a(x)}. Requires the
// normalized l of `params` (the substitution x = y^{2^l+1} must be bijective).
int64_t correlation_via_quadform(const Field& field, const DecimationParams& params, uint32_t a);

// Full spectrum over all shifts; picks the quadratic-form route when the
// congruence d(2^l+1) = 2^i (mod 2^n-1) is solvable, else the character-sum
// route. Both routes are evaluated through norm-fiber binning plus a fast
// Walsh-Hadamard transform over the subfield, so the cost is one pass over
// F_{2^m} regardless of n.
CorrelationSpectrum spectrum(const Field& field, uint64_t d, int threads = 0);

namespace detail {

// fiber[j'] = sum of (-1)^{tr^m_1(x)} over x = alpha^j with j = j' (mod 2^n-1)
std::vector<int64_t> fiber_sums_tr(const Field& field, int threads);
// fiber[j'] = sum of (-1)^{tr^m_1(x^{2^l+1})} over the same fibers
std::vector<int64_t> fiber_sums_quad(const Field& field, int l, int threads);
// bins[coord(w^d)] += fiber[log w]
std::vector<int64_t> rebin_by_decimation(const Field& field, const std::vector<int64_t>& fiber,
                                         uint64_t d);
void wht_inplace(std::vector<int64_t>& v);
// multiset of transform values at the 2^n-1 nonzero points
CorrelationSpectrum spectrum_from_bins(const Field& field, uint64_t d, std::vector<int64_t> bins);

} // namespace detail

} // namespace seqcorr
