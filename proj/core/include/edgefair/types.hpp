#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edgefair {

/// Dense 0-based agent index (a vertex of the instance graph).
using AgentId = int;
/// Dense 0-based edge index (an item shared by its two endpoint agents).
using EdgeId = int;

/// An item: an undirected edge between two distinct agents, stored with u < v.
struct Edge {
  EdgeId id;
  AgentId u;
  AgentId v;

  AgentId other(AgentId a) const { return a == u ? v : u; }
  bool incident(AgentId a) const { return a == u || a == v; }
};

/// Marginal-sign class of an item for one agent. Non-incident pairs are
/// always Dummy; incident pairs are classified by the valuation.
enum class SignClass { Good, Chore, Dummy };

/// The nine fairness predicates: plain envy-freeness plus the eight EFX
/// variants. Superscript (G-side / first script) restricts the item
/// hypothetically removed from the envied bundle, subscript (C-side /
/// second script) the one removed from the envier's own bundle.
enum class Notion {
  Ef,
  EfxG0,        // goods-style, condition 1 over non-chores
  EfxGPlus,     // goods-style, condition 1 over strict goods
  EfxC0,        // chores-style, condition 2 over non-goods
  EfxCMinus,    // chores-style, condition 2 over strict chores
  Efx00,        // both conditions, non-strict
  Efx0Minus,    // condition 1 non-strict, condition 2 strict
  EfxPlus0,     // condition 1 strict, condition 2 non-strict
  EfxPlusMinus  // both conditions, strict
};

inline constexpr std::array<Notion, 9> kAllNotions = {
    Notion::Ef,        Notion::EfxG0,    Notion::EfxGPlus,
    Notion::EfxC0,     Notion::EfxCMinus, Notion::Efx00,
    Notion::Efx0Minus, Notion::EfxPlus0, Notion::EfxPlusMinus};

enum class RemovalRule { None, NonStrict, Strict };

/// Which items are eligible for hypothetical removal from the envied bundle.
constexpr RemovalRule condition1_rule(Notion n) {
  switch (n) {
    case Notion::EfxG0:
    case Notion::Efx00:
    case Notion::Efx0Minus:
      return RemovalRule::NonStrict;
    case Notion::EfxGPlus:
    case Notion::EfxPlus0:
    case Notion::EfxPlusMinus:
      return RemovalRule::Strict;
    default:
      return RemovalRule::None;
  }
}

/// Which items are eligible for hypothetical removal from the envier's bundle.
constexpr RemovalRule condition2_rule(Notion n) {
  switch (n) {
    case Notion::EfxC0:
    case Notion::Efx00:
    case Notion::EfxPlus0:
      return RemovalRule::NonStrict;
    case Notion::EfxCMinus:
    case Notion::Efx0Minus:
    case Notion::EfxPlusMinus:
      return RemovalRule::Strict;
    default:
      return RemovalRule::None;
  }
}

/// Implication lattice, encoded as data: implied_notions(a) lists every b
/// such that any allocation satisfying a also satisfies b.
const std::vector<Notion>& implied_notions(Notion n);

std::string notion_name(Notion n);                     // canonical CLI spelling, e.g. "efx0-"
std::optional<Notion> notion_from_string(const std::string& s);

std::string sign_name(SignClass s);

}  // namespace edgefair
