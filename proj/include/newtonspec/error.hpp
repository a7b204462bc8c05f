#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace newtonspec {

enum class ErrorKind {
  // Bad input or violated precondition.
  Syntax,
  NegativeExponent,
  ConstantTermInLocalMode,
  UnknownVariable,
  NotConvenient,
  InvalidArgument,
  NotSimplex,
  NotSimplicialFaces,
  NotSimplicial,
  HintNotABasis,
  // Internal consistency failures: two computations that must agree did not.
  NotFullDimensional,
  InternalMismatch,
  NoConvergence,
  DimensionMismatch,
  ReductionFailure,
  NegativeDelta,
  ExponentOutOfRange,
};

const char* to_string(ErrorKind kind);

/// True for kinds that signal a bug or an inconsistent model rather than bad input.
bool is_consistency_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& what)
      : Error(kind, what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NotConvenientError : public Error {
 public:
  NotConvenientError(std::vector<std::size_t> missing_axes, const std::string& what)
      : Error(ErrorKind::NotConvenient, what), missing_axes_(std::move(missing_axes)) {}

  /// 1-based axis indices with no pure power in the support.
  const std::vector<std::size_t>& missing_axes() const noexcept { return missing_axes_; }

 private:
  std::vector<std::size_t> missing_axes_;
};

}  // namespace newtonspec
