#ifndef GRADUS_BASIC_HPP
#define GRADUS_BASIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gradus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Input that violates a precondition (bad spec file, unknown type label, ...).
// The CLI maps this to exit code 3.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime check of a structural guarantee failed (LiftFailure, NotABasis,
// NonPolynomialEntry, ...).  The CLI maps this to exit code 2.  `kind` holds
// the stable machine-readable tag, `what()` the full message.
struct InvariantViolation : std::runtime_error {
    std::string kind;
    InvariantViolation(std::string k, const std::string& what)
        : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

inline Rat rat_of(long num, long den = 1) {
    return Rat(Int(num)) / Rat(Int(den));
}

// Parses "p" or "p/q" with arbitrary-precision integers.
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& r);

// floor(r) as an exact integer.
Int rat_floor(const Rat& r);

inline int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace gradus

#endif
