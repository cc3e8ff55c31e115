#include "edgefair/types.hpp"

#include <map>

#include "edgefair/errors.hpp"

namespace edgefair {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NonIncidentValue: return "NonIncidentValue";
    case Errc::EmptyAgentSet: return "EmptyAgentSet";
    case Errc::IncompleteAllocation: return "IncompleteAllocation";
    case Errc::EnvyCycleDetected: return "EnvyCycleDetected";
    case Errc::NotGoodsInstance: return "NotGoodsInstance";
    case Errc::NotChoresInstance: return "NotChoresInstance";
    case Errc::TooFewAgents: return "TooFewAgents";
    case Errc::NotATree: return "NotATree";
    case Errc::NotAStar: return "NotAStar";
    case Errc::NotAPath: return "NotAPath";
    case Errc::UnsupportedSignPattern: return "UnsupportedSignPattern";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NonTermination: return "NonTermination";
    case Errc::DegenerateAllChores: return "DegenerateAllChores";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::NotThreeDistinctLiterals: return "NotThreeDistinctLiterals";
    case Errc::OccurrenceCountViolated: return "OccurrenceCountViolated";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::UndrivenWire: return "UndrivenWire";
    case Errc::MultipleDrivers: return "MultipleDrivers";
    case Errc::ContainsAnd: return "ContainsAnd";
    case Errc::NotSatisfying: return "NotSatisfying";
    case Errc::NotEfx: return "NotEfx";
    case Errc::OutputFalse: return "OutputFalse";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

const std::vector<Notion>& implied_notions(Notion n) {
  using N = Notion;
  static const std::map<Notion, std::vector<Notion>> table = {
      {N::Ef,
       {N::EfxG0, N::EfxGPlus, N::EfxC0, N::EfxCMinus, N::Efx00, N::Efx0Minus, N::EfxPlus0,
        N::EfxPlusMinus}},
      {N::Efx00,
       {N::EfxG0, N::EfxGPlus, N::EfxC0, N::EfxCMinus, N::Efx0Minus, N::EfxPlus0,
        N::EfxPlusMinus}},
      {N::Efx0Minus, {N::EfxG0, N::EfxGPlus, N::EfxCMinus, N::EfxPlusMinus}},
      {N::EfxPlus0, {N::EfxGPlus, N::EfxC0, N::EfxCMinus, N::EfxPlusMinus}},
      {N::EfxPlusMinus, {N::EfxGPlus, N::EfxCMinus}},
      {N::EfxG0, {N::EfxGPlus}},
      {N::EfxC0, {N::EfxCMinus}},
      {N::EfxGPlus, {}},
      {N::EfxCMinus, {}},
  };
  return table.at(n);
}

std::string notion_name(Notion n) {
  switch (n) {
    case Notion::Ef: return "ef";
    case Notion::EfxG0: return "efxg0";
    case Notion::EfxGPlus: return "efxg+";
    case Notion::EfxC0: return "efxc0";
    case Notion::EfxCMinus: return "efxc-";
    case Notion::Efx00: return "efx00";
    case Notion::Efx0Minus: return "efx0-";
    case Notion::EfxPlus0: return "efx+0";
    case Notion::EfxPlusMinus: return "efx+-";
  }
  return "?";
}

std::optional<Notion> notion_from_string(const std::string& s) {
  for (Notion n : kAllNotions) {
    if (notion_name(n) == s) return n;
  }
  return std::nullopt;
}

std::string sign_name(SignClass s) {
  switch (s) {
    case SignClass::Good: return "good";
    case SignClass::Chore: return "chore";
    case SignClass::Dummy: return "dummy";
  }
  return "?";
}

}  // namespace edgefair
