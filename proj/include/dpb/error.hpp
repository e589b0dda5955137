#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpb {

// Base of every error thrown by the library. Each concrete type names one
// precondition failure so callers can tell them apart with a catch clause.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DPB_DEFINE_ERROR(name)                                                 \
    class name : public error {                                                \
    public:                                                                    \
        using error::error;                                                    \
    }

DPB_DEFINE_ERROR(ParseError);
DPB_DEFINE_ERROR(NonUnitLeadingCoefficient);
DPB_DEFINE_ERROR(ValuationMismatch);
DPB_DEFINE_ERROR(NonzeroConstantTerm);
DPB_DEFINE_ERROR(BadConstantTerm);
DPB_DEFINE_ERROR(OrderExceeded);
DPB_DEFINE_ERROR(IndexOutOfRange);
DPB_DEFINE_ERROR(UnknownIdentity);

#undef DPB_DEFINE_ERROR

/// Two independent computations of the same quantity disagreed. Both
/// results are kept in canonical text form.
class RouteMismatch : public error {
public:
    RouteMismatch(const std::string& what, std::vector<std::string> first, std::vector<std::string> second)
        : error(what), first_(std::move(first)), second_(std::move(second))
    {
    }

    const std::vector<std::string>& first() const { return first_; }
    const std::vector<std::string>& second() const { return second_; }

private:
    std::vector<std::string> first_;
    std::vector<std::string> second_;
};

} // namespace dpb
