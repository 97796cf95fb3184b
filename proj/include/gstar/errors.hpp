#ifndef GSTAR_ERRORS_HPP
#define GSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gstar {

// Malformed textual input (files, polynomial grammar, rationals, elements).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse of the API: mismatched groups, bad dimensions, invalid
// catalog parameters. These are programming/CLI-argument errors, not data.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A computation was refused because it exceeds the configured degree cap or
// cell budget. Carries the frame that tripped the guard.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic produced something the theory forbids (negative or
// non-integral multiplicity). Always a bug, never truncated away.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace gstar

#endif
