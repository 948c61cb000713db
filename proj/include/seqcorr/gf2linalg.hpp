#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Linear algebra over GF(2) on small matrices (dimension <= 32), rows held as
// bit masks. Everything here is plain Gaussian elimination on machine words.
namespace seqcorr::gf2 {

// Rank of the span of `rows` (each row a bit mask).
int rank(std::vector<uint32_t> rows);

// Kernel of the linear map c |-> XOR_{i : c_i = 1} cols[i], where c ranges
// over dim-bit vectors. Returns a basis of the kernel as dim-bit masks.
std::vector<uint32_t> nullspace(const std::vector<uint32_t>& cols, int dim);

// Incremental echelon form used to express vectors in terms of a fixed basis.
class Echelon {
public:
    // Insert basis vector `v` tagged with `combo` (caller's coordinate mask).
    // Returns false if v is linearly dependent on what is already stored.
    bool add(uint32_t v, uint32_t combo);

    // Coordinates of w over the inserted basis, or nullopt if w is outside
    // the span.
    std::optional<uint32_t> solve(uint32_t w) const;

    int dim() const { return static_cast<int>(pivots_.size()); }

private:
    struct Row {
        uint32_t value;
        uint32_t combo;
    };
    std::vector<Row> pivots_; // kept reduced, descending leading bit
};

} // namespace seqcorr::gf2
