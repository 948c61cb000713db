#include "seqcorr/field.hpp"

#include <bit>
#include <mutex>

#include "seqcorr/gf2linalg.hpp"

namespace seqcorr {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::odd_degree: return "OddDegree";
        case Errc::m_out_of_range: return "MOutOfRange";
        case Errc::not_primitive: return "NotPrimitive";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::zero_inverse: return "ZeroInverse";
        case Errc::not_in_subfield: return "NotInSubfield";
        case Errc::non_divisor_degrees: return "NonDivisorDegrees";
        case Errc::d_not_coprime: return "DNotCoprime";
        case Errc::no_valid_l: return "NoValidL";
        case Errc::invariant_violation: return "InvariantViolation";
        case Errc::tau_out_of_range: return "TauOutOfRange";
        case Errc::a_zero: return "AZero";
        case Errc::a_not_in_subfield: return "ANotInSubfield";
        case Errc::l_not_normalized: return "LNotNormalized";
        case Errc::h_out_of_range: return "HOutOfRange";
        case Errc::mu_even: return "MuEven";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::incomplete_spectrum: return "IncompleteSpectrum";
        case Errc::census_mismatch: return "CensusMismatch";
        case Errc::non_power_of_two_kernel: return "NonPowerOfTwoKernel";
        case Errc::m_too_large: return "MTooLarge";
        case Errc::unsupported: return "Unsupported";
    }
    return "Error";
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t gcd_pow2(int u, int v, GcdSign sign) {
    if (u < 1 || v < 1) raise(Errc::bad_parameters, "gcd_pow2 requires u, v >= 1");
    int w = static_cast<int>(gcd_u64(u, v));
    if (sign == GcdSign::minus) return (uint64_t{1} << w) - 1;
    return (u / w) % 2 == 1 ? 1 : (uint64_t{1} << w) + 1;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t x) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= x; ++p)
        if (x % p == 0) {
            out.push_back(p);
            while (x % p == 0) x /= p;
        }
    if (x > 1) out.push_back(x);
    return out;
}

namespace {

inline uint32_t clmul_reduce(uint32_t a, uint32_t b, uint32_t poly, int m) {
    uint64_t acc = 0;
    uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int bit = 2 * m - 2; bit >= m; --bit)
        if (acc >> bit & 1) acc ^= static_cast<uint64_t>(poly) << (bit - m);
    return static_cast<uint32_t>(acc);
}

uint32_t poly_pow_mod(uint32_t x, uint64_t e, uint32_t poly, int m) {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = clmul_reduce(r, x, poly, m);
        x = clmul_reduce(x, x, poly, m);
        e >>= 1;
    }
    return r;
}

// Smallest primitive polynomial per even degree, found by ascending-mask scan
// with the order check below (re-derived by the unit tests).
struct DefaultPoly {
    int m;
    uint32_t poly;
};
constexpr DefaultPoly kDefaultPolys[] = {
    {4, 0x13},        {6, 0x43},        {8, 0x11D},      {10, 0x409},
    {12, 0x1053},     {14, 0x402B},     {16, 0x1002D},   {18, 0x40027},
    {20, 0x100009},   {22, 0x400003},   {24, 0x100001B}, {26, 0x4000047},
};

} // namespace

bool is_primitive_poly(uint32_t poly, int m) {
    if (m < 1 || m > 26) return false;
    if (poly >> m != 1u) return false; // must be monic of degree exactly m
    if (!(poly & 1)) return false;     // x divides poly
    const uint64_t n = (uint64_t{1} << m) - 1;
    if (poly_pow_mod(2, n, poly, m) != 1) return false;
    for (uint64_t q : distinct_prime_factors(n))
        if (poly_pow_mod(2, n / q, poly, m) == 1) return false;
    return true;
}

uint32_t default_prim_poly(int m) {
    for (const auto& e : kDefaultPolys)
        if (e.m == m) return e.poly;
    raise(Errc::m_out_of_range, "no default polynomial for m=" + std::to_string(m));
}

struct Field::State {
    int m = 0;
    int n = 0;
    uint32_t poly = 0;
    uint64_t order = 0;    // 2^m - 1
    uint64_t suborder = 0; // 2^n - 1
    uint64_t texp = 0;     // 2^n + 1
    uint32_t beta = 0;
    uint32_t trace_mask = 0;            // tr^m_1(x) = parity(x & trace_mask)
    std::vector<uint32_t> subtr_images; // L(x^i), L(y) = sum_{j<n} y^(2^j)
    int log_table_max_m = 20;

    mutable std::once_flag log_once;
    mutable std::vector<uint32_t> antilog; // size order, alpha^j
    mutable std::vector<uint64_t> logtab;  // size 2^m, log of nonzero masks
    mutable std::vector<uint8_t> trbit;    // tr^m_1(alpha^j)

    mutable std::once_flag sub_once;
    mutable Subfield sub;

    uint32_t mul(uint32_t a, uint32_t b) const { return clmul_reduce(a, b, poly, m); }

    uint32_t pow_generic(uint32_t a, uint64_t e) const { return poly_pow_mod(a, e, poly, m); }

    void build_log_tables() const {
        std::call_once(log_once, [this] {
            antilog.resize(order);
            logtab.assign(uint64_t{1} << m, 0);
            trbit.resize(order);
            uint32_t x = 1;
            for (uint64_t j = 0; j < order; ++j) {
                antilog[j] = x;
                logtab[x] = j;
                trbit[j] = static_cast<uint8_t>(std::popcount(x & trace_mask) & 1);
                x = mul(x, 2);
            }
        });
    }

    void build_subfield() const {
        std::call_once(sub_once, [this] {
            Subfield& sf = sub;
            sf.n = n;
            sf.order = suborder;

            // basis of the n-subfield: kernel of x -> x^(2^n) + x
            std::vector<uint32_t> cols(m);
            for (int i = 0; i < m; ++i) {
                uint32_t e = uint32_t{1} << i;
                uint32_t f = e;
                for (int j = 0; j < n; ++j) f = mul(f, f);
                cols[i] = f ^ e;
            }
            sf.basis = gf2::nullspace(cols, m);

            gf2::Echelon ech;
            for (size_t i = 0; i < sf.basis.size(); ++i) ech.add(sf.basis[i], uint32_t{1} << i);

            sf.pow_beta.resize(suborder);
            sf.coord_by_log.resize(suborder);
            sf.tr1_by_log.resize(suborder);
            sf.log_index_.reserve(suborder);
            uint32_t w = 1;
            for (uint64_t j = 0; j < suborder; ++j) {
                sf.pow_beta[j] = w;
                sf.coord_by_log[j] = *ech.solve(w);
                sf.tr1_by_log[j] = static_cast<uint8_t>(subfield_trace_raw(w));
                sf.log_index_.emplace(w, static_cast<uint32_t>(j));
                w = mul(w, beta);
            }
            sf.mask_by_coord.assign(uint64_t{1} << n, 0);
            for (uint64_t c = 0; c < (uint64_t{1} << n); ++c) {
                uint32_t v = 0;
                for (int i = 0; i < n; ++i)
                    if (c >> i & 1) v ^= sf.basis[i];
                sf.mask_by_coord[c] = v;
            }
        });
    }

    // tr^n_1 on the subfield, evaluated through precomputed basis images
    int subfield_trace_raw(uint32_t a) const {
        uint32_t acc = 0;
        uint32_t v = a;
        while (v) {
            int i = std::countr_zero(v);
            v &= v - 1;
            acc ^= subtr_images[i];
        }
        // acc = sum_{j<n} a^(2^j); lands in {0,1} exactly when a is in the subfield
        if (acc > 1) raise(Errc::not_in_subfield, "element not in the half-degree subfield");
        return static_cast<int>(acc);
    }
};

Field::Field(int m) : Field(m, 0, Options{}) {}
Field::Field(int m, uint32_t prim_poly) : Field(m, prim_poly, Options{}) {}

Field::Field(int m, uint32_t prim_poly, Options opt) {
    if (m % 2 != 0) raise(Errc::odd_degree, "extension degree must be even, got " + std::to_string(m));
    if (m < 4 || m > 26) raise(Errc::m_out_of_range, "extension degree must lie in [4, 26]");
    uint32_t poly = prim_poly ? prim_poly : default_prim_poly(m);
    if (poly >> m != 1u)
        raise(Errc::not_primitive, "polynomial mask does not have degree " + std::to_string(m));
    if (!is_primitive_poly(poly, m))
        raise(Errc::not_primitive, "polynomial is not primitive of degree " + std::to_string(m));

    auto s = std::make_shared<State>();
    s->m = m;
    s->n = m / 2;
    s->poly = poly;
    s->order = (uint64_t{1} << m) - 1;
    s->suborder = (uint64_t{1} << s->n) - 1;
    s->texp = (uint64_t{1} << s->n) + 1;
    s->log_table_max_m = opt.log_table_max_m;
    s->beta = s->pow_generic(2, s->texp);

    for (int i = 0; i < m; ++i) {
        uint32_t e = uint32_t{1} << i;
        uint32_t acc = 0, f = e;
        for (int j = 0; j < m; ++j) {
            acc ^= f;
            f = s->mul(f, f);
        }
        // acc = tr^m_1(x^i), an element of {0,1}
        if (acc & 1) s->trace_mask |= uint32_t{1} << i;
        uint32_t sub_acc = 0;
        f = e;
        for (int j = 0; j < s->n; ++j) {
            sub_acc ^= f;
            f = s->mul(f, f);
        }
        s->subtr_images.push_back(sub_acc);
    }
    s_ = std::move(s);
}

int Field::m() const { return s_->m; }
int Field::n() const { return s_->n; }
uint32_t Field::prim_poly() const { return s_->poly; }
uint64_t Field::order() const { return s_->order; }
uint64_t Field::suborder() const { return s_->suborder; }
uint64_t Field::norm_exponent() const { return s_->texp; }
uint32_t Field::beta() const { return s_->beta; }
const void* Field::id() const { return s_.get(); }

uint32_t Field::mul(uint32_t a, uint32_t b) const { return s_->mul(a, b); }

uint32_t Field::frob(uint32_t a, int e) const {
    e %= s_->m;
    if (e < 0) e += s_->m;
    for (int i = 0; i < e; ++i) a = s_->mul(a, a);
    return a;
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) raise(Errc::zero_inverse, "negative power of zero");
        return 0;
    }
    uint64_t n = s_->order;
    uint64_t em = static_cast<uint64_t>(((e % static_cast<int64_t>(n)) + static_cast<int64_t>(n)) %
                                        static_cast<int64_t>(n));
    if (has_log_table()) {
        s_->build_log_tables();
        if (em == 0) return 1;
        // log(a) * em can reach ~2^52 for m <= 26; fits in 64 bits
        return s_->antilog[(s_->logtab[a] % n) * em % n];
    }
    return s_->pow_generic(a, em);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) raise(Errc::zero_inverse, "inverse of zero");
    return pow(a, -1);
}

int Field::trace_bit(uint32_t a) const { return std::popcount(a & s_->trace_mask) & 1; }

int Field::subfield_trace_bit(uint32_t a) const { return s_->subfield_trace_raw(a); }

uint32_t Field::trace(uint32_t a, int from_deg, int to_deg) const {
    if (from_deg <= 0 || to_deg <= 0 || from_deg % to_deg != 0 || s_->m % from_deg != 0)
        raise(Errc::non_divisor_degrees,
              "trace degrees must satisfy to | from | m, got " + std::to_string(from_deg) + " -> " +
                  std::to_string(to_deg));
    if (!in_subfield(a, from_deg))
        raise(Errc::not_in_subfield, "trace argument outside F_{2^" + std::to_string(from_deg) + "}");
    uint32_t acc = 0, f = a;
    int steps = from_deg / to_deg;
    for (int i = 0; i < steps; ++i) {
        acc ^= f;
        f = frob(f, to_deg);
    }
    return acc;
}

bool Field::in_subfield(uint32_t a, int u) const {
    if (u <= 0 || s_->m % u != 0)
        raise(Errc::non_divisor_degrees, "subfield degree must divide m, got " + std::to_string(u));
    return frob(a, u % s_->m) == a;
}

uint64_t Field::element_order(uint32_t a) const {
    if (a == 0) raise(Errc::zero_inverse, "order of zero");
    uint64_t ord = s_->order;
    for (uint64_t q : distinct_prime_factors(s_->order))
        while (ord % q == 0 && pow(a, static_cast<int64_t>(ord / q)) == 1) ord /= q;
    return ord;
}

bool Field::has_log_table() const { return s_->m <= s_->log_table_max_m; }

uint64_t Field::log(uint32_t a) const {
    if (!has_log_table()) raise(Errc::unsupported, "log table disabled for m=" + std::to_string(s_->m));
    if (a == 0) raise(Errc::zero_inverse, "log of zero");
    s_->build_log_tables();
    return s_->logtab[a];
}

uint32_t Field::exp_alpha(uint64_t e) const {
    e %= s_->order;
    if (has_log_table()) {
        s_->build_log_tables();
        return s_->antilog[e];
    }
    return s_->pow_generic(2, e);
}

const std::vector<uint8_t>& Field::trbit_by_log() const {
    if (!has_log_table()) raise(Errc::unsupported, "log table disabled for m=" + std::to_string(s_->m));
    s_->build_log_tables();
    return s_->trbit;
}

const Subfield& Field::subfield() const {
    s_->build_subfield();
    return s_->sub;
}

uint32_t Field::lambda_mask(uint32_t a) const {
    const Subfield& sf = subfield();
    uint32_t lam = 0;
    for (int i = 0; i < sf.n; ++i)
        if (subfield_trace_bit(mul(a, sf.basis[i]))) lam |= uint32_t{1} << i;
    return lam;
}

uint32_t Subfield::log_of(uint32_t mask) const {
    auto it = log_index_.find(mask);
    if (it == log_index_.end()) raise(Errc::a_not_in_subfield, "not a nonzero subfield element");
    return it->second;
}

Elem Elem::operator+(Elem other) const {
    if (!field || !other.field || field->id() != other.field->id())
        raise(Errc::field_mismatch, "elements of different fields");
    return Elem{bits ^ other.bits, field};
}

Elem Elem::operator*(Elem other) const { return mul(*this, other); }

bool Elem::operator==(Elem other) const {
    return bits == other.bits && (field ? field->id() : nullptr) == (other.field ? other.field->id() : nullptr);
}

Elem mul(Elem x, Elem y) {
    if (!x.field || !y.field || x.field->id() != y.field->id())
        raise(Errc::field_mismatch, "elements of different fields");
    return Elem{x.field->mul(x.bits, y.bits), x.field};
}

Elem pow(Elem x, int64_t e) { return Elem{x.field->pow(x.bits, e), x.field}; }

Elem trace(Elem x, int from_deg, int to_deg) {
    return Elem{x.field->trace(x.bits, from_deg, to_deg), x.field};
}

bool is_in_subfield(Elem x, int u) { return x.field->in_subfield(x.bits, u); }

Field build_field(int m) { return Field(m); }
Field build_field(int m, uint32_t prim_poly) { return Field(m, prim_poly); }

} // namespace seqcorr
