#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abc2d {

enum class Errc {
    invalid_argument,
    ratio_violation,
    zero_flux,
    pole,
    parameter_pole,
    division_by_zero,
    no_bound_states,
    unacceptable_state,
    no_convergence,
    stiffness_failure,
    quadrature_failure,
    unsupported_flux_case,
    forward_singularity,
    wrong_case,
    grid_boundary,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace abc2d
