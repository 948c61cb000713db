#pragma once

#include <string>

#include "seqcorr/analysis.hpp"

// Renderers for the machine-readable CLI formats. All output is
// deterministic: fixed key order, decimal integers, hex polynomials.
namespace seqcorr {

std::string spectrum_json(const CorrelationSpectrum& spec, int m);
std::string enumerate_csv(const std::vector<DecimationParams>& list);
std::string search_csv(const std::vector<SearchRecord>& records);
std::string rank_census_json(const RankCensus& census);
std::string verify_report_json(const VerifyReport& rep);
std::string field_info_json(const Field& field);
std::string field_info_table(const Field& field);

} // namespace seqcorr
