#ifndef OBS_ERRORS_HPP
#define OBS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace obs {

// Node address inside a proof tree: child indices from the root.
using ProofPath = std::vector<std::size_t>;

std::string path_to_string(const ProofPath& path);

enum class WfErrorKind {
  UnknownVariable,
  UnknownSymbol,
  ArityMismatch,
  SortMismatch,
  DuplicateBinder,
  DuplicateContextVariable,
  NameCollision,
};

const char* to_string(WfErrorKind kind);

// Raised by well-formedness checks; `where` names the offending subterm or symbol.
class WfError : public std::runtime_error {
 public:
  WfError(WfErrorKind kind, std::string where, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        where_(std::move(where)) {}

  WfErrorKind kind() const { return kind_; }
  const std::string& where() const { return where_; }

 private:
  WfErrorKind kind_;
  std::string where_;
};

enum class ProofErrorKind {
  RuleMismatch,
  UnknownAxiom,
  IllFormedSequent,
  PayloadError,
  PreconditionViolated,
};

const char* to_string(ProofErrorKind kind);

// Raised by the proof checkers; `path` locates the failing node.
class ProofError : public std::runtime_error {
 public:
  ProofError(ProofErrorKind kind, ProofPath path, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + " at [" + path_to_string(path) +
                           "]: " + message),
        kind_(kind),
        path_(std::move(path)) {}

  ProofErrorKind kind() const { return kind_; }
  const ProofPath& path() const { return path_; }

 private:
  ProofErrorKind kind_;
  ProofPath path_;
};

enum class SieveErrorKind {
  RuleMismatch,
  UnknownAxiom,
  PullbackError,
  IllFormedSequent,
  NotADualStatement,
  CompileFailed,
  UnsupportedRule,
};

const char* to_string(SieveErrorKind kind);

class SieveError : public std::runtime_error {
 public:
  SieveError(SieveErrorKind kind, ProofPath path, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + " at [" + path_to_string(path) +
                           "]: " + message),
        kind_(kind),
        path_(std::move(path)) {}

  SieveErrorKind kind() const { return kind_; }
  const ProofPath& path() const { return path_; }

 private:
  SieveErrorKind kind_;
  ProofPath path_;
};

class ElaborationError : public std::runtime_error {
 public:
  explicit ElaborationError(const std::string& message)
      : std::runtime_error("ElaborationFailed: " + message) {}
};

class SerializationError : public std::runtime_error {
 public:
  SerializationError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  // 1-based line number in the offending file; 0 when not line-addressable.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EnumBudgetExceeded : public std::runtime_error {
 public:
  EnumBudgetExceeded(unsigned long long space, unsigned long long cap)
      : std::runtime_error("BudgetExceeded: enumeration space " + std::to_string(space) +
                           " exceeds cap " + std::to_string(cap)) {}
};

}  // namespace obs

#endif
