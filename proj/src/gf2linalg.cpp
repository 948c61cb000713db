#include "seqcorr/gf2linalg.hpp"

#include <bit>

namespace seqcorr::gf2 {

namespace {

inline int lead_bit(uint32_t v) { return 31 - std::countl_zero(v); }

} // namespace

int rank(std::vector<uint32_t> rows) {
    int r = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t v = rows[i];
        if (!v) continue;
        int lb = lead_bit(v);
        ++r;
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] >> lb & 1) rows[j] ^= v;
    }
    return r;
}

std::vector<uint32_t> nullspace(const std::vector<uint32_t>& cols, int dim) {
    Echelon ech;
    std::vector<uint32_t> kernel;
    for (int i = 0; i < dim; ++i)
        if (!ech.add(cols[i], 1u << i)) {
            // cols[i] reduced to zero: the reduction combo is a kernel vector
            auto combo = ech.solve(cols[i]);
            kernel.push_back(*combo ^ (1u << i));
        }
    return kernel;
}

bool Echelon::add(uint32_t v, uint32_t combo) {
    for (const Row& row : pivots_)
        if (v >> lead_bit(row.value) & 1) {
            v ^= row.value;
            combo ^= row.combo;
        }
    if (!v) return false;
    // keep rows fully reduced against the new pivot
    int lb = lead_bit(v);
    for (Row& row : pivots_)
        if (row.value >> lb & 1) {
            row.value ^= v;
            row.combo ^= combo;
        }
    pivots_.push_back({v, combo});
    return true;
}

std::optional<uint32_t> Echelon::solve(uint32_t w) const {
    uint32_t combo = 0;
    for (const Row& row : pivots_)
        if (w >> lead_bit(row.value) & 1) {
            w ^= row.value;
            combo ^= row.combo;
        }
    if (w) return std::nullopt;
    return combo;
}

} // namespace seqcorr::gf2
