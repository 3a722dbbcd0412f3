#ifndef UALG_ERROR_HPP
#define UALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ualg {

/// Base class for every exception thrown by the kernel.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An element index, coordinate or symbol lies outside its carrier or table.
class RangeError : public Error
{
public:
    using Error::Error;
};

/// Operands do not share a carrier, or tuple/matrix dimensions disagree.
class ShapeError : public Error
{
public:
    using Error::Error;
};

/// A computation would exceed the configured size bound.
class SizeError : public Error
{
public:
    using Error::Error;
};

/// A relation handed to a partition constructor is not an equivalence.
class NotEquivalenceError : public Error
{
public:
    using Error::Error;
};

/// An algebra or congruence fails its structural invariants.
class InvalidAlgebraError : public Error
{
public:
    using Error::Error;
};

} // namespace ualg

#endif // UALG_ERROR_HPP
