#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error { using Error::Error; };
struct FamilyMismatch : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct PoleProximity : Error { using Error::Error; };
struct UnsupportedCase : Error { using Error::Error; };
struct NonIntegrable : Error { using Error::Error; };
struct NegativeCoefficient : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DivergentProduct : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };

}  // namespace hankel
