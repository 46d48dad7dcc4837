#pragma once

#include <stdexcept>
#include <string>

namespace rigidbar {

/// Malformed graph, out-of-range argument or inconsistent realisation.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition on the structure of the instance (not its encoding) does
/// not hold, e.g. a loop whose deletion drops the rank.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace rigidbar
