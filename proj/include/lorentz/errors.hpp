#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

/** Thrown when a parameter lies outside the mathematical domain of an
    operation (e.g. a contraction angle that would need asin of a value
    larger than one, or inversion of a singular matrix). */
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/** Thrown when a four-potential is fed to an operation that is only defined
    on the light-front gauge slice a0 = az. */
class LorentzConditionViolated : public std::runtime_error {
public:
    explicit LorentzConditionViolated(const std::string& what)
        : std::runtime_error(what) {}
};

/** Thrown by the large-boost limit when the requested rapidity is too small
    to push the residual entries below the requested tolerance. */
class InsufficientBoost : public std::runtime_error {
public:
    explicit InsufficientBoost(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace lorentz
