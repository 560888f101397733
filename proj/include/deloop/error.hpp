#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deloop {

enum class ErrorKind {
  DomainMismatch,
  SizeGuard,
  WrongCardinality,
  NotSubset,
  NotMember,
  DuplicateLabel,
  ZeroModulus,
  MalformedDecomposition,
  MalformedPartition,
  NotReflexive,
  NotSymmetric,
  NotTransitive,
  CarrierMismatch,
  TooSmall,
  ArityTooSmall,
  ArityMismatch,
  NotADelooping,
  NaturalityFailure,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace deloop
