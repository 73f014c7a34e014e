#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// A parameter lies outside the domain of the operation.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation failed to converge, overflowed, or hit a singular input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cholesky factorization of a sampled Gram matrix failed.
class DegenerateSampleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// An invariant that construction should guarantee was found broken.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what);
}

}  // namespace detail
}  // namespace jacobi
