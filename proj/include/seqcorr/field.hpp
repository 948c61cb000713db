#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "seqcorr/errors.hpp"

namespace seqcorr {

// gcd(2^u-1, 2^v-1) and gcd(2^u-1, 2^v+1) in closed form.
enum class GcdSign { minus, plus };
uint64_t gcd_pow2(int u, int v, GcdSign sign);

uint64_t gcd_u64(uint64_t a, uint64_t b);
std::vector<uint64_t> distinct_prime_factors(uint64_t x);

// True iff `poly` (bit i = coefficient of x^i) is primitive of degree m,
// i.e. x has multiplicative order 2^m-1 in F_2[x]/(poly).
bool is_primitive_poly(uint32_t poly, int m);

// Lexicographically smallest primitive polynomial of even degree m in [4,26].
uint32_t default_prim_poly(int m);

class Field;

// An element of F_{2^m} in the polynomial basis, tagged with its field.
// Arithmetic between elements of different fields throws field_mismatch.
// The Field must outlive its elements.
struct Elem {
    uint32_t bits = 0;
    const Field* field = nullptr;

    Elem operator+(Elem other) const;
    Elem operator*(Elem other) const;
    bool operator==(Elem other) const;
};

Elem mul(Elem x, Elem y);
Elem pow(Elem x, int64_t e);
Elem trace(Elem x, int from_deg, int to_deg);
bool is_in_subfield(Elem x, int u);

// Precomputed view of the half-degree subfield F_{2^n} inside F_{2^m}.
// Elements are indexed two ways: by discrete log base beta and by their
// coordinate mask over `basis` (an F_2-basis of the subfield).
struct Subfield {
    int n = 0;
    uint64_t order = 0; // 2^n - 1
    std::vector<uint32_t> basis;
    std::vector<uint32_t> pow_beta;      // beta^j, j in [0, 2^n-2]
    std::vector<uint32_t> coord_by_log;  // coords(beta^j)
    std::vector<uint32_t> mask_by_coord; // coord -> element mask (size 2^n)
    std::vector<uint8_t> tr1_by_log;     // tr^n_1(beta^j)

    // Discrete log base beta of a nonzero subfield element.
    uint32_t log_of(uint32_t mask) const;

private:
    friend class Field;
    std::unordered_map<uint32_t, uint32_t> log_index_;
};

// The tower F_{2^k} < F_{2^n} < F_{2^m}, m = 2n, as bit-mask arithmetic
// modulo a primitive polynomial. Copies share immutable state; the lazily
// built tables (discrete logs, subfield frame) are initialized exactly once
// and are safe to trigger from concurrent threads.
class Field {
public:
    struct Options {
        // Discrete-log tables (2 * 2^m words) are built lazily up to this
        // degree; above it pow() falls back to square-and-multiply.
        int log_table_max_m = 20;
    };

    explicit Field(int m);
    Field(int m, uint32_t prim_poly);
    Field(int m, uint32_t prim_poly, Options opt);

    int m() const;
    int n() const;
    uint32_t prim_poly() const;
    uint64_t order() const;         // 2^m - 1
    uint64_t suborder() const;      // 2^n - 1
    uint64_t norm_exponent() const; // T = 2^n + 1
    uint32_t alpha() const { return 2; }
    uint32_t beta() const;

    // identity of the shared state, for element/field matching
    const void* id() const;

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t sqr(uint32_t a) const { return mul(a, a); }
    uint32_t frob(uint32_t a, int e) const; // a^(2^e)
    uint32_t pow(uint32_t a, int64_t e) const;
    uint32_t inv(uint32_t a) const;

    // tr^m_1 as a bit (parity against a precomputed mask).
    int trace_bit(uint32_t a) const;
    // tr^n_1 of an element of the n-subfield, as a bit.
    int subfield_trace_bit(uint32_t a) const;
    // Checked trace between subfields of degrees from_deg -> to_deg.
    uint32_t trace(uint32_t a, int from_deg, int to_deg) const;
    bool in_subfield(uint32_t a, int u) const;

    // multiplicative order of a nonzero element
    uint64_t element_order(uint32_t a) const;

    bool has_log_table() const;
    uint64_t log(uint32_t a) const;        // requires log table
    uint32_t exp_alpha(uint64_t e) const;  // alpha^e (table or pow)
    // tr^m_1(alpha^j) indexed by j; built with the log tables.
    const std::vector<uint8_t>& trbit_by_log() const;

    const Subfield& subfield() const;
    // n-bit mask with bit i = tr^n_1(a * basis[i]); a in the n-subfield.
    uint32_t lambda_mask(uint32_t a) const;

    Elem elem(uint32_t bits) const { return Elem{bits, this}; }

private:
    struct State;
    std::shared_ptr<State> s_;
};

// Spec-facing constructors.
Field build_field(int m);
Field build_field(int m, uint32_t prim_poly);

} // namespace seqcorr
