#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qsw {

/// Machine-readable failure categories.  Every throwing operation in the
/// library uses Error (or SyntaxError for the expression language) so that
/// callers and tests can dispatch on `code` instead of parsing messages.
enum class Errc {
    order_mismatch,       ///< ring operands live in different Q(zeta_M)
    division_by_zero,     ///< inverse of the zero ring element
    unsupported_order,    ///< M odd/nonpositive, or constant needs M divisible by 4/8/12
    grid_mismatch,        ///< series operands disagree on exponent grid E
    ring_mismatch,        ///< series operands disagree on coefficient ring M
    pi_power_mismatch,    ///< adding analytic series of different pi-degree
    off_grid,             ///< exponent not representable on grid E
    zero_leading,         ///< inverting a series with no leading term
    beyond_validity,      ///< coefficient requested at/after valid_to
    unsupported_char,     ///< theta characteristic/argument not embeddable in (M, E)
    unknown_identity,     ///< verify() called with a name the registry lacks
    unsupported_k,        ///< cusp-family k outside the implemented odd primes
    bad_usage,            ///< CLI misuse (maps to exit code 2)
    syntax,               ///< expression parse failure
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

/// Parse error with the byte offset of the offending token and the token
/// classes that would have been acceptable there.
struct SyntaxError : Error {
    std::size_t offset;
    std::vector<std::string> expected;
    SyntaxError(std::size_t off, std::vector<std::string> exp, const std::string& what)
        : Error(Errc::syntax, what), offset(off), expected(std::move(exp)) {}
};

} // namespace qsw
