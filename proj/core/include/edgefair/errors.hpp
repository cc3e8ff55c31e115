#pragma once

#include <stdexcept>
#include <string>

namespace edgefair {

enum class Errc {
  // instance construction
  DuplicateEdge,
  SelfLoop,
  NonIncidentValue,
  EmptyAgentSet,
  // checkers / state
  IncompleteAllocation,
  EnvyCycleDetected,
  // solver preconditions
  NotGoodsInstance,
  NotChoresInstance,
  TooFewAgents,
  NotATree,
  NotAStar,
  NotAPath,
  UnsupportedSignPattern,
  PreconditionViolated,
  NonTermination,
  DegenerateAllChores,
  // oracle
  BudgetExceeded,
  // reductions / parsers
  ParseError,
  NotThreeDistinctLiterals,
  OccurrenceCountViolated,
  CycleDetected,
  UndrivenWire,
  MultipleDrivers,
  ContainsAnd,
  NotSatisfying,
  NotEfx,
  OutputFalse,
  // misc
  InvalidArgument,
};

const char* errc_name(Errc c);

/// Library error carrying a stable code plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace edgefair
