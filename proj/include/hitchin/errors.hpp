#pragma once

#include <stdexcept>
#include <string>

namespace hitchin {

/// Evaluation requested inside the exclusion window of a field singularity.
class SingularPointError : public std::domain_error {
public:
    explicit SingularPointError(const std::string& what) : std::domain_error(what) {}
};

/// Finite-difference step too large relative to the distance to a singular point.
class InvalidStepError : public std::domain_error {
public:
    explicit InvalidStepError(const std::string& what) : std::domain_error(what) {}
};

/// Phase samples too sparse to unwrap reliably.
class UndersamplingError : public std::runtime_error {
public:
    explicit UndersamplingError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hitchin
