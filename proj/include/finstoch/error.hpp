#ifndef FINSTOCH_ERROR_HPP
#define FINSTOCH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace finstoch {

/// Base class of all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Kernels were combined along spaces that do not agree (carrier or atoms differ).
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// A point set is not a union of atoms, or a point map is not measurable.
class NotMeasurable : public Error {
public:
    using Error::Error;
};

/// The copy map was requested on a space with a non-singleton atom.
class CopyNeedsPoints : public Error {
public:
    using Error::Error;
};

/// An operation requiring product factor structure was given a space without it.
class NotAProduct : public Error {
public:
    using Error::Error;
};

/// A kernel that must be deterministic (zero-one) is not.
class NotDeterministic : public Error {
public:
    using Error::Error;
};

/// A state or kernel that must be invariant under the dynamics is not.
class NotInvariant : public Error {
public:
    using Error::Error;
};

/// An operation requiring a deterministic dynamical system was given a stochastic one.
class NotDeterministicSystem : public Error {
public:
    using Error::Error;
};

/// The generator set is outside the supported fragment of an operation.
class UnsupportedGenerators : public Error {
public:
    using Error::Error;
};

/// Malformed input: bad JSON, bad rational, non-stochastic row, unknown label.
/// The message names the offending location.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace finstoch

#endif // FINSTOCH_ERROR_HPP
