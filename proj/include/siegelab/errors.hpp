#pragma once

#include <stdexcept>
#include <string>

namespace siegelab {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// contfrac
struct PrecisionExhausted : Error { using Error::Error; };
struct RationalInput : Error { using Error::Error; };
struct InsufficientCoefficients : Error { using Error::Error; };

// polyfam
struct IndexOutOfRange : Error { using Error::Error; };
struct ZeroCriticalPoint : Error { using Error::Error; };
struct NotACriticalPoint : Error { using Error::Error; };
struct RootFindingDiverged : Error { using Error::Error; };

// orbit
struct NonFinite : Error { using Error::Error; };
struct IndexBeyondEscape : Error { using Error::Error; };
struct EscapedOrbit : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };

// circlemap
struct Unconverged : Error { using Error::Error; };
struct InverseBisectionFailed : Error { using Error::Error; };
struct RotationMismatch : Error { using Error::Error; };
struct DegenerateQuadruple : Error { using Error::Error; };
struct TooFewSubintervals : Error { using Error::Error; };
struct DerivativeVanishes : Error { using Error::Error; };
struct NotACircleLift : Error { using Error::Error; };

// blaschke
struct NotMonotone : Error { using Error::Error; };
struct BracketExhausted : Error { using Error::Error; };
struct OrbitTooSparse : Error { using Error::Error; };
struct ExtensionInversionFailed : Error { using Error::Error; };
struct DegenerateCell : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };

// qcgeom
struct InvalidBreakpoints : Error { using Error::Error; };
struct RecursionDepthExceeded : Error { using Error::Error; };
struct DegenerateTriangle : Error { using Error::Error; };
struct SingularDifferential : Error { using Error::Error; };

// cli
struct ConfigParse : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };

} // namespace siegelab
