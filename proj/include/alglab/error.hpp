#pragma once

#include <stdexcept>
#include <string>

namespace alglab {

// Bad user input: malformed files, unknown names, arity clashes, maps that
// fail validation.  CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree by theory disagreed.  Either the input lies
// outside the assumed setting or there is a bug; both deserve a loud stop.
// CLI maps this to exit code 3.
struct CrossCheckError : std::runtime_error {
    explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration limit was hit (algebra too large, search space too big).
// CLI maps this to exit code 4.
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alglab
