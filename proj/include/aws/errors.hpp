#pragma once

#include <stdexcept>
#include <string>

namespace aws {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroundingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BeliefError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an observation has zero likelihood under the current posterior.
struct InconsistentObservation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProviderUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace aws
