#ifndef CAT_ERROR_HPP
#define CAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cat {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments that violate a documented precondition (bad index, bad size, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// graph validation
class GraphError : public Error {
public:
    using Error::Error;
};

class CycleError : public GraphError {
public:
    using GraphError::GraphError;
};

class MultipleParentsError : public GraphError {
public:
    using GraphError::GraphError;
};

class DisconnectedError : public GraphError {
public:
    using GraphError::GraphError;
};

// A forest with more than one parentless node is one way of being disconnected.
class MultipleRootsError : public DisconnectedError {
public:
    using DisconnectedError::DisconnectedError;
};

class NotEquivalentError : public GraphError {
public:
    using GraphError::GraphError;
};

class EqualTreesError : public GraphError {
public:
    using GraphError::GraphError;
};

class InvalidSubstructureError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// arborescence
class InfeasibleError : public Error {
public:
    using Error::Error;
};

class ForbiddenEdgeInTree : public Error {
public:
    using Error::Error;
};

// data problems
class LengthMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NonFiniteInput : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DegenerateDataError : public Error {
public:
    using Error::Error;
};

class DegenerateColumnError : public DegenerateDataError {
public:
    using DegenerateDataError::DegenerateDataError;
};

class TooFewSamples : public DegenerateDataError {
public:
    using DegenerateDataError::DegenerateDataError;
};

class DegenerateSample : public DegenerateDataError {
public:
    using DegenerateDataError::DegenerateDataError;
};

class ZeroMomentError : public DegenerateDataError {
public:
    using DegenerateDataError::DegenerateDataError;
};

class NoTriplesError : public Error {
public:
    using Error::Error;
};

class CholeskyFailure : public Error {
public:
    using Error::Error;
};

// I/O and format problems
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace cat

#endif  // CAT_ERROR_HPP
