#pragma once

#include <stdexcept>
#include <string>

namespace twisted {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// torus values
struct BasisMismatch : Error { using Error::Error; };
struct MissingHint : Error { using Error::Error; };

// finite groups
struct InvalidGroup : Error { using Error::Error; };
struct NotAssociative : InvalidGroup { using InvalidGroup::InvalidGroup; };
struct NoIdentity : InvalidGroup { using InvalidGroup::InvalidGroup; };
struct NoInverse : InvalidGroup { using InvalidGroup::InvalidGroup; };

// multipliers
struct DomainMismatch : Error { using Error::Error; };
struct InvalidMultiplier : Error { using Error::Error; };
struct InvalidBihomomorphism : Error { using Error::Error; };

// regularity
struct ClassInconsistency : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };

// twisted algebra
struct IllConditioned : Error { using Error::Error; };

// direct products
struct LemmaViolation : Error { using Error::Error; };

// free products
struct NotInKernel : Error { using Error::Error; };
struct SimilarityFailure : Error { using Error::Error; };

}  // namespace twisted
