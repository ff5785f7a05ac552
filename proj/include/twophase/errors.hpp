#pragma once

#include <stdexcept>
#include <string>

namespace twophase {

// Argument lies on a cut, at a pole, or outside an operation's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Quadrature refinement or a regularized limit failed to settle.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Singular or badly conditioned linear system.
struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed quantity violates a structural identity it must satisfy
// (reality, conjugacy, symmetry). Almost always a branch or orientation bug.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user configuration. Message names the violated condition.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace twophase
