#pragma once

#include <stdexcept>
#include <string>

namespace cdgraph {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, interval files, certificates).
struct parse_error : error {
    using error::error;
};

// An operation was called on an instance outside its stated domain
// (wrong graph class, bad generator parameters, invalid certificate shape).
struct precondition_error : error {
    using error::error;
};

// Instance exceeds a configured exact-solver size limit.
struct limit_error : error {
    using error::error;
};

// No strategy applies to the instance (and the exact fallback is out of reach).
struct unsupported_error : error {
    using error::error;
};

} // namespace cdgraph
