#ifndef EXTREMAL_ERRORS_HPP
#define EXTREMAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extremal {

/// Parameters outside the domain an operation is defined on (e.g. d < 2m+2).
class parameter_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class invalid_partition : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An eigensolver did not converge or produced inconsistent output.
class solver_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A numerical or exact check of a claimed property failed. Not recoverable.
class theorem_check_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Internal invariant broken (e.g. a non-integer coefficient in an exact
/// assembly). Indicates a bug, never a bad input.
class consistency_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace extremal

#endif
