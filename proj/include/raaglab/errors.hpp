#ifndef RAAGLAB_ERRORS_HPP
#define RAAGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raaglab {

// Bad input: unknown vertex, malformed file, precondition violation.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap was exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace raaglab

#endif
