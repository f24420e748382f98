#pragma once

#include <stdexcept>
#include <string>

namespace doiforge {

struct NonHermitianInput : std::runtime_error {
    explicit NonHermitianInput(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveAlpha : std::runtime_error {
    explicit NonPositiveAlpha(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveFactor : std::runtime_error {
    explicit NonPositiveFactor(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

struct TailMassTooLarge : std::runtime_error {
    explicit TailMassTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct SpectrumContainsZero : std::runtime_error {
    explicit SpectrumContainsZero(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct StepUnderflow : std::runtime_error {
    explicit StepUnderflow(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace doiforge
