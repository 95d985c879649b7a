#pragma once

#include <stdexcept>

namespace strathol {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// posets
struct CycleError : Error { using Error::Error; };
struct UnknownElement : Error { using Error::Error; };

// flags
struct ChainViolation : Error { using Error::Error; };
struct FlagNotRegular : Error { using Error::Error; };
struct EmptyFlag : Error { using Error::Error; };

// complexes
struct UnknownVertex : Error { using Error::Error; };
struct UnknownSimplex : Error { using Error::Error; };
struct NotEmbedding : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };
struct CollapseError : Error { using Error::Error; };

// cell complexes
struct FaceIdentityViolation : Error { using Error::Error; };
struct FlagMismatch : Error { using Error::Error; };
struct PrecursorCycle : Error { using Error::Error; };
struct InvalidComplex : Error { using Error::Error; };
struct NotSimplicial : Error { using Error::Error; };
struct UnknownCorpusName : Error { using Error::Error; };

// geometry
struct NotASubflagChain : Error { using Error::Error; };
struct DegenerateProjection : Error { using Error::Error; };
struct OutsideNeighborhood : Error { using Error::Error; };

// homology
struct NotSubcomplex : Error { using Error::Error; };
struct DecompositionInvalid : Error { using Error::Error; };

// file formats
struct ParseError : Error { using Error::Error; };

}  // namespace strathol
