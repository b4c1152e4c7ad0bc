#pragma once

#include <stdexcept>
#include <string>

namespace qperc {

// An iterative scheme did not converge within its configured cap.
struct IterationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sampler or generator exhausted its attempt / vertex cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The stated hypotheses of a bound could not be verified on the inputs
// (an input failure, not a bound failure).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qperc
