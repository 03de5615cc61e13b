#pragma once

#include <stdexcept>
#include <string>

namespace groupinspect {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file (CSV/JSON); message carries line/column context.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid configuration: bad grouping, infeasible sparsity
/// pattern, out-of-range parameter.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: zero matrix where a direction is required, constant
/// data row, non-finite values.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace groupinspect
