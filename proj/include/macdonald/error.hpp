#pragma once

#include <stdexcept>
#include <string>

namespace macdonald {

enum class errc {
    invalid_partition,
    parse_error,
    cell_not_in_diagram,
    limit_exceeded,
    invalid_argument,
    multiple_hooks,
    core_not_a_p_core,
    precondition_violation,
    not_odd,
    rank_out_of_range,
    // A proven statement failed to hold. Reaching this means a bug.
    theorem_violation,
};

inline const char* to_string(errc code) noexcept
{
    switch (code) {
    case errc::invalid_partition: return "invalid-partition";
    case errc::parse_error: return "parse-error";
    case errc::cell_not_in_diagram: return "cell-not-in-diagram";
    case errc::limit_exceeded: return "limit-exceeded";
    case errc::invalid_argument: return "invalid-argument";
    case errc::multiple_hooks: return "multiple-hooks";
    case errc::core_not_a_p_core: return "core-not-a-p-core";
    case errc::precondition_violation: return "precondition-violation";
    case errc::not_odd: return "not-odd";
    case errc::rank_out_of_range: return "rank-out-of-range";
    case errc::theorem_violation: return "theorem-violation";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace macdonald
