#pragma once

#include <stdexcept>
#include <string>

namespace eigenbound {

/// Bad user input: invalid dimension, nonpositive radius, malformed config.
/// The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to converge or produced an unusable result
/// (bracket failure, iteration stall). The CLI maps this to exit code 1.
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eigenbound
