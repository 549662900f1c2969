#pragma once

#include <stdexcept>
#include <string>

namespace lgrp {

enum class ErrorKind {
  ParseError,
  CrossValidation,
  UnknownElement,
  DuplicateElement,
  EmptyInput,
  NotAPoset,
  NotALattice,
  NonDistributiveLattice,
  EmptySubset,
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnknownBuiltin,
  GroupTooLarge,
  NotASubgroup,
  NotAHomomorphism,
  NotAnIsomorphism,
  MismatchedCarriers,
  NotAnLSubgroup,
  NotMaximal,
  LPointNotInMu,
  MuNotNormalInG,
  HypothesisNotMet,
  InstanceTooLarge,
  SearchExhausted,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CrossValidation: return "CrossValidationError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NonDistributiveLattice: return "NonDistributiveLattice";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorKind::MismatchedCarriers: return "MismatchedCarriers";
    case ErrorKind::NotAnLSubgroup: return "NotAnLSubgroup";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::LPointNotInMu: return "LPointNotInMu";
    case ErrorKind::MuNotNormalInG: return "MuNotNormalInG";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an `Error`
/// carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lgrp
