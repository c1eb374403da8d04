#pragma once

#include <stdexcept>
#include <string>

namespace warpcurv {

// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct PointOutsideDomain : Error {
    using Error::Error;
};
struct MetricNotSPD : Error {
    using Error::Error;
};
struct DerivativeUnavailable : Error {
    using Error::Error;
};
struct DegeneratePlane : Error {
    using Error::Error;
};
struct NonUnitVector : Error {
    using Error::Error;
};
struct OutsideInterval : Error {
    using Error::Error;
};
struct NonPositiveWarping : Error {
    using Error::Error;
};
struct QuadratureNonConvergent : Error {
    using Error::Error;
};
struct InconclusiveClassification : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct ValueOutsideInterval : Error {
    using Error::Error;
};
struct CholeskyFailure : Error {
    using Error::Error;
};
struct DimensionTooSmall : Error {
    using Error::Error;
};
struct RadiusExceedsChart : Error {
    using Error::Error;
};
struct EvaluationFailure : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace warpcurv
