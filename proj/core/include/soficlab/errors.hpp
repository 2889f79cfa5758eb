#pragma once

#include <stdexcept>
#include <string>

namespace soficlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define SOFICLAB_ERROR(Name)                                            \
    class Name : public Error {                                         \
    public:                                                             \
        using Error::Error;                                             \
        const char* kind() const noexcept override { return #Name; }    \
    };

SOFICLAB_ERROR(SchemaError)
SOFICLAB_ERROR(ValidationError)
SOFICLAB_ERROR(EmptyShiftError)
SOFICLAB_ERROR(NotIrreducibleError)
SOFICLAB_ERROR(BudgetExceeded)
SOFICLAB_ERROR(DepthBudgetExceeded)
SOFICLAB_ERROR(NotContainedError)
SOFICLAB_ERROR(NotReceptiveError)
SOFICLAB_ERROR(ZeroEntropyError)
SOFICLAB_ERROR(SearchBudgetExceeded)
SOFICLAB_ERROR(IterationBudgetExceeded)
SOFICLAB_ERROR(PreconditionError)
SOFICLAB_ERROR(NotFiniteToOne)

#undef SOFICLAB_ERROR

} // namespace soficlab
