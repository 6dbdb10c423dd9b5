#pragma once

#include <stdexcept>
#include <string>

namespace tml {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra
struct NotInSplitPlane : Error { using Error::Error; };

// ratfunc
struct DivisionByZeroFunction : Error { using Error::Error; };
struct IrrationalPole : Error { using Error::Error; };

// period
struct EmptyNullspace : Error { using Error::Error; };
struct PeriodViolation : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct NotConjugateSymmetric : Error { using Error::Error; };

// surface
struct ComplexResidue : Error { using Error::Error; };
struct PoleHit : Error { using Error::Error; };
struct LightConeHit : Error { using Error::Error; };

// analysis
struct NotSimpleEnd : Error { using Error::Error; };
struct UnclassifiableEnd : Error { using Error::Error; };

// cli
struct ConfigError : Error { using Error::Error; };

} // namespace tml
