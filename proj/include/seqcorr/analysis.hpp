#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqcorr/decimation.hpp"
#include "seqcorr/field.hpp"
#include "seqcorr/quadform.hpp"
#include "seqcorr/sequences.hpp"

namespace seqcorr {

// Closed-form correlation distribution for a decimation with parameters
// (n, k): four rows, zero-count rows retained.
struct TheoremPrediction {
    struct Row {
        int64_t value = 0;
        uint64_t count = 0;
    };
    int n = 0;
    int k = 0;
    std::vector<Row> rows; // -1, -1+2^n, -1-2^n, -1-2^{n+k}

    std::map<int64_t, uint64_t> nonzero() const;
};

TheoremPrediction theorem1_prediction(int n, int k);

// The three moment identities; exact integer arithmetic, nu as computed by
// count_nu (or 2^k-2 for decimations satisfying the congruence).
bool lemma6_check(const CorrelationSpectrum& spec, uint64_t nu, int m);

// Number of ordered pairs (x1, x2) of nonzero elements with x1 + x2 + 1 = 0
// and x1^{dT} + x2^{dT} + 1 = 0, T = 2^n + 1.
uint64_t count_nu(const Field& field, uint64_t d);

struct VerifyReport {
    int m = 0;
    uint64_t d = 0;
    int l = 0;
    int k = 0;
    bool pass = false;
    CorrelationSpectrum empirical;
    TheoremPrediction predicted;
    RankCensus census;
    std::string detail; // empty on pass
};

// Empirical spectrum vs the closed-form prediction (exact multiset equality)
// plus the cross-check that the two +-2^n counts sum to the full-rank census.
VerifyReport verify_theorem1(const Field& field, const DecimationParams& params, int threads = 0);

int classify_valuedness(const CorrelationSpectrum& spec);

struct SearchRecord {
    int m = 0;
    uint64_t d = 0; // coset leader
    int num_values = 0;
    CorrelationSpectrum spectrum;
    std::optional<std::pair<int, int>> matched; // (l, i) when the congruence holds
};

// Character-sum spectra of every cyclotomic coset leader coprime to 2^n-1,
// keeping those with at most max_values distinct correlation values.
std::vector<SearchRecord> search_decimations(const Field& field, int max_values, int threads = 0);

} // namespace seqcorr
