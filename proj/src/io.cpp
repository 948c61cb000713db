#include "seqcorr/io.hpp"

#include <sstream>

#include <json.hpp>

namespace seqcorr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json entries_array(const std::map<int64_t, uint64_t>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& [v, c] : entries) {
        ordered_json row;
        row["c"] = v;
        row["count"] = c;
        arr.push_back(std::move(row));
    }
    return arr;
}

ordered_json ranks_object(const RankCensus& census) {
    ordered_json ranks;
    for (auto it = census.by_rank.rbegin(); it != census.by_rank.rend(); ++it)
        ranks[std::to_string(it->first)] = it->second;
    return ranks;
}

std::string hex_poly(uint32_t poly) {
    std::ostringstream os;
    os << "0x" << std::hex << std::uppercase << poly;
    return os.str();
}

} // namespace

std::string spectrum_json(const CorrelationSpectrum& spec, int m) {
    ordered_json j;
    j["m"] = m;
    j["d"] = spec.d;
    j["values"] = entries_array(spec.entries);
    return j.dump() + "\n";
}

std::string enumerate_csv(const std::vector<DecimationParams>& list) {
    std::ostringstream os;
    os << "n,d,coset_leader,l,i,k,r,s\n";
    for (const DecimationParams& p : list)
        os << p.n << ',' << p.d << ',' << p.coset_leader << ',' << p.l << ',' << p.i << ',' << p.k
           << ',' << p.r << ',' << p.s << '\n';
    return os.str();
}

std::string search_csv(const std::vector<SearchRecord>& records) {
    std::ostringstream os;
    os << "m,d,num_values,values,l,i,k\n";
    for (const SearchRecord& rec : records) {
        os << rec.m << ',' << rec.d << ',' << rec.num_values << ',';
        bool first = true;
        for (const auto& [v, c] : rec.spectrum.entries) {
            if (!first) os << ';';
            os << v << ':' << c;
            first = false;
        }
        if (rec.matched) {
            int l = rec.matched->first;
            os << ',' << l << ',' << rec.matched->second << ','
               << gcd_u64(l, rec.m / 2);
        } else {
            os << ",,,";
        }
        os << '\n';
    }
    return os.str();
}

std::string rank_census_json(const RankCensus& census) {
    ordered_json j;
    j["m"] = census.m;
    j["l"] = census.l;
    j["k"] = census.k;
    j["ranks"] = ranks_object(census);
    return j.dump() + "\n";
}

std::string verify_report_json(const VerifyReport& rep) {
    ordered_json j;
    j["m"] = rep.m;
    j["d"] = rep.d;
    j["pass"] = rep.pass;
    j["empirical"] = entries_array(rep.empirical.entries);
    ordered_json pred = ordered_json::array();
    for (const TheoremPrediction::Row& row : rep.predicted.rows) {
        ordered_json r;
        r["c"] = row.value;
        r["count"] = row.count;
        pred.push_back(std::move(r));
    }
    j["predicted"] = pred;
    j["rank_census"] = ranks_object(rep.census);
    if (!rep.pass) j["detail"] = rep.detail;
    return j.dump() + "\n";
}

std::string field_info_json(const Field& field) {
    ordered_json j;
    j["m"] = field.m();
    j["n"] = field.n();
    j["poly"] = hex_poly(field.prim_poly());
    j["T"] = field.norm_exponent();
    j["alpha_order"] = field.element_order(field.alpha());
    j["beta_order"] = field.element_order(field.beta());
    return j.dump() + "\n";
}

std::string field_info_table(const Field& field) {
    std::ostringstream os;
    os << "m:           " << field.m() << '\n'
       << "n:           " << field.n() << '\n'
       << "poly:        " << hex_poly(field.prim_poly()) << '\n'
       << "T:           " << field.norm_exponent() << '\n'
       << "alpha_order: " << field.element_order(field.alpha()) << '\n'
       << "beta_order:  " << field.element_order(field.beta()) << '\n';
    return os.str();
}

} // namespace seqcorr
