#pragma once

#include <stdexcept>
#include <string>

namespace gns {

// Bad input: invalid parameters, poles, regime mismatch. CLI exit code 2.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

class PoleError : public ParameterError {
public:
    explicit PoleError(const std::string& what) : ParameterError(what) {}
};

class RegimeError : public ParameterError {
public:
    explicit RegimeError(const std::string& what) : ParameterError(what) {}
};

// Numerical failure: divergence or tolerance not reached. CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class DivergenceError : public NumericalError {
public:
    explicit DivergenceError(const std::string& what) : NumericalError(what) {}
};

class ToleranceError : public NumericalError {
public:
    explicit ToleranceError(const std::string& what) : NumericalError(what) {}
};

} // namespace gns
