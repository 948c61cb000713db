#pragma once

#include <stdexcept>
#include <string>

namespace seqcorr {

enum class Errc {
    odd_degree,
    m_out_of_range,
    not_primitive,
    field_mismatch,
    zero_inverse,
    not_in_subfield,
    non_divisor_degrees,
    d_not_coprime,
    no_valid_l,
    invariant_violation,
    tau_out_of_range,
    a_zero,
    a_not_in_subfield,
    l_not_normalized,
    h_out_of_range,
    mu_even,
    bad_parameters,
    incomplete_spectrum,
    census_mismatch,
    non_power_of_two_kernel,
    m_too_large,
    unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc c, const std::string& what) { throw Error(c, what); }

} // namespace seqcorr
