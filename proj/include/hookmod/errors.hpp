#pragma once

#include <stdexcept>
#include <string>

namespace hookmod {

// Thrown when a computation is requested beyond the documented size guards
// (full-module pipelines are exact and exponential; the guards keep them at
// desk scale instead of letting them run away).
struct ScaleError : std::runtime_error {
    explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by input parsers (monomials, partitions, CLI payloads).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hookmod
