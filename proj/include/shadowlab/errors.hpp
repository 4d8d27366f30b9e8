#pragma once

#include <stdexcept>
#include <string>

namespace shadowlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateCoefficients : Error { using Error::Error; };
struct IdentityMapError       : Error { using Error::Error; };
struct NotSelfMapError        : Error { using Error::Error; };
struct InvalidParameter       : Error { using Error::Error; };
struct PoleEvaluation         : Error { using Error::Error; };
struct OutsideDisk            : Error { using Error::Error; };
struct WrongClass             : Error { using Error::Error; };
struct PoleTooClose           : Error { using Error::Error; };
struct ZeroVector             : Error { using Error::Error; };
struct ZeroAtFixedPoint       : Error { using Error::Error; };
struct NotInN                 : Error { using Error::Error; };
struct NotPseudoOrbit         : Error { using Error::Error; };

} // namespace shadowlab
