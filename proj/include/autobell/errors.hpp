#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autobell
{

// Invalid index or argument list handed to a routine.
class ArgumentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation asked for a variable the assignment does not bind.
class UnboundVariable : public std::invalid_argument
{
public:
    explicit UnboundVariable(std::string var)
        : std::invalid_argument("unbound variable '" + var + "'"), var_(std::move(var))
    {
    }
    const std::string &variable() const noexcept
    {
        return var_;
    }

private:
    std::string var_;
};

// Differentiating a truncated series past its order.
class OrderExhausted : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Two computation paths that must agree did not.
class InternalInconsistency : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Closed-form evaluation outside its domain of definition.
class DomainError : public std::domain_error
{
public:
    DomainError(const std::string &what, std::string bound) : std::domain_error(what), bound_(std::move(bound)) {}
    // Decimal rendering of the blow-up bound nearest to the requested point.
    const std::string &bound() const noexcept
    {
        return bound_;
    }

private:
    std::string bound_;
};

// A formal residual that should vanish does not.
class ResidualFailure : public InternalInconsistency
{
public:
    ResidualFailure(const std::string &what, std::size_t order) : InternalInconsistency(what), order_(order) {}
    // First order with a nonzero residual coefficient.
    std::size_t order() const noexcept
    {
        return order_;
    }

private:
    std::size_t order_;
};

} // namespace autobell
