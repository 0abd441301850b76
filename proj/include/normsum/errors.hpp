#ifndef NORMSUM_ERRORS_HPP
#define NORMSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace normsum {

// Base for every error the library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct AxiomViolation : Error {
    using Error::Error;
};
struct NoUnit : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};
struct ModulusTooLarge : Error {
    using Error::Error;
};
struct SearchExhausted : Error {
    using Error::Error;
};
struct GcdViolation : Error {
    using Error::Error;
};
// Thrown when an enumeration would exceed the configured tuple/modulus budget.
struct BudgetExceeded : Error {
    using Error::Error;
};
struct SingularAtBase : Error {
    using Error::Error;
};
struct PreconditionViolation : Error {
    using Error::Error;
};
struct NoNonsingularPoint : Error {
    using Error::Error;
};
struct QuadratureDiverged : Error {
    using Error::Error;
};
struct IndefiniteFormWithoutRadii : Error {
    using Error::Error;
};
struct InsufficientSamples : Error {
    using Error::Error;
};
struct ZeroArgument : Error {
    using Error::Error;
};
struct IndefiniteForm : Error {
    using Error::Error;
};

}  // namespace normsum

#endif
