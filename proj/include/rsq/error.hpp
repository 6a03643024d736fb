#ifndef RSQ_ERROR_HPP
#define RSQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rsq {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation hits a pole of 1/|x - y| or of the kernel recurrence.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Requested table entry does not exist.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Request exceeds what the embedded tables or internal caps support.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Spheres overlap, fail to nest, or otherwise violate a placement precondition.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Operands are individually valid but incompatible with each other.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Linear system is singular or too ill-conditioned to trust.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or unreadable path.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace rsq

#endif // RSQ_ERROR_HPP
