#pragma once

#include <stdexcept>
#include <string>

namespace moncoh {

enum class ErrorKind {
    CompositionNotZero,
    NotContained,
    NotAssociative,
    NotIdentity,
    FirstFactorNotGroup,
    FactorNotCommutative,
    NotNormal,
    BadSection,
    NotSubgroup,
    NotExact,
    NotEquivariant,
    NotCocycle,
    NotSemilinear,
    MonoidPartPresent,
    NotMonotone,
    FiltrationTooLow,
    HypothesisViolated,
    NotStable,
    DNotCommutative,
    NotChainMap,
    ActionNotTrivial,
    InvalidInput,
};

inline const char *kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::CompositionNotZero: return "CompositionNotZero";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotIdentity: return "NotIdentity";
    case ErrorKind::FirstFactorNotGroup: return "FirstFactorNotGroup";
    case ErrorKind::FactorNotCommutative: return "FactorNotCommutative";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::BadSection: return "BadSection";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotSemilinear: return "NotSemilinear";
    case ErrorKind::MonoidPartPresent: return "MonoidPartPresent";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::FiltrationTooLow: return "FiltrationTooLow";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::DNotCommutative: return "DNotCommutative";
    case ErrorKind::NotChainMap: return "NotChainMap";
    case ErrorKind::ActionNotTrivial: return "ActionNotTrivial";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what),
          kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace moncoh
