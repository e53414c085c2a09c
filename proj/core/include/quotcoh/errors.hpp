#ifndef QUOTCOH_ERRORS_HPP
#define QUOTCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quotcoh
{

// Root of every error the library raises on purpose.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the range an operation is defined on.
class OutOfRange : public Error
{
public:
    using Error::Error;
};

// A stated precondition of a formula does not hold.
class PreconditionViolated : public Error
{
public:
    using Error::Error;
};

// The fixed bundle of a Quot context has rank < 2.
class RankAssumptionViolated : public PreconditionViolated
{
public:
    using PreconditionViolated::PreconditionViolated;
};

// Strict policy and no rule determines h^0 and h^1.
class AmbiguousCohomology : public Error
{
public:
    using Error::Error;
};

// An explicit cohomology override contradicts Riemann-Roch.
class InconsistentOverride : public Error
{
public:
    using Error::Error;
};

// The enumeration oracle refuses inputs above its size guard.
class OracleBoundExceeded : public OutOfRange
{
public:
    using OutOfRange::OutOfRange;
};

} // namespace quotcoh

#endif
