#include "edgefair/fairness.hpp"

#include <algorithm>
#include <map>

#include "edgefair/errors.hpp"

namespace edgefair {

namespace {

Value bundle_value_without(const Instance& inst, AgentId viewer, const std::vector<EdgeId>& bundle,
                           EdgeId skip) {
  std::vector<EdgeId> tmp;
  tmp.reserve(bundle.size());
  for (EdgeId e : bundle) {
    if (e != skip) tmp.push_back(e);
  }
  return inst.value(viewer, tmp);
}

// Core of check()/passes(): enumerate violations in deterministic order,
// stopping after the first one when stop_early is set.
ViolationReport run_check(const Instance& inst, const Allocation& alloc, Notion notion,
                          bool stop_early) {
  if (!alloc.is_total()) fail(Errc::IncompleteAllocation, "checker requires a total allocation");

  ViolationReport report;
  report.notion = notion;

  const int n = inst.agent_count();
  auto bundles = alloc.bundles(n);
  std::vector<Value> own(static_cast<size_t>(n));
  for (AgentId i = 0; i < n; ++i) own[static_cast<size_t>(i)] = inst.value(i, bundles[static_cast<size_t>(i)]);

  const RemovalRule r1 = condition1_rule(notion);
  const RemovalRule r2 = condition2_rule(notion);

  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      const Value vj = inst.value(i, bundles[static_cast<size_t>(j)]);
      const Value& vi = own[static_cast<size_t>(i)];
      if (!(vj > vi)) continue;  // i does not envy j

      if (notion == Notion::Ef) {
        report.violations.push_back({i, j, WitnessSide::Envy, std::nullopt});
        if (stop_early) return report;
        continue;
      }

      if (r1 != RemovalRule::None) {
        for (EdgeId e : bundles[static_cast<size_t>(j)]) {
          Value rem = bundle_value_without(inst, i, bundles[static_cast<size_t>(j)], e);
          bool eligible = r1 == RemovalRule::NonStrict ? rem <= vj : rem < vj;
          if (eligible && vi < rem) {
            report.violations.push_back({i, j, WitnessSide::EnviedBundle, e});
            if (stop_early) return report;
          }
        }
      }
      if (r2 != RemovalRule::None) {
        for (EdgeId e : bundles[static_cast<size_t>(i)]) {
          Value rem = bundle_value_without(inst, i, bundles[static_cast<size_t>(i)], e);
          bool eligible = r2 == RemovalRule::NonStrict ? rem >= vi : rem > vi;
          if (eligible && rem < vj) {
            report.violations.push_back({i, j, WitnessSide::OwnBundle, e});
            if (stop_early) return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

ViolationReport check(const Instance& instance, const Allocation& allocation, Notion notion) {
  return run_check(instance, allocation, notion, /*stop_early=*/false);
}

bool passes(const Instance& instance, const Allocation& allocation, Notion notion) {
  return run_check(instance, allocation, notion, /*stop_early=*/true).ok();
}

bool is_envy_free(const Instance& instance, const Allocation& allocation) {
  EnvyState envy = compute_envy(instance, allocation);
  for (AgentId a = 0; a < instance.agent_count(); ++a) {
    if (envy.is_envied(a)) return false;
  }
  return true;
}

std::vector<std::pair<AgentId, AgentId>> EnvyState::envy_pairs() const {
  std::vector<std::pair<AgentId, AgentId>> out;
  for (size_t i = 0; i < envied.size(); ++i) {
    for (AgentId j : envied[i]) out.push_back({static_cast<AgentId>(i), j});
  }
  return out;
}

EnvyState compute_envy(const Instance& instance, const Allocation& allocation) {
  const int n = instance.agent_count();
  EnvyState state;
  state.enviers.assign(static_cast<size_t>(n), {});
  state.envied.assign(static_cast<size_t>(n), {});

  auto bundles = allocation.bundles(n);
  std::vector<Value> own(static_cast<size_t>(n));
  for (AgentId i = 0; i < n; ++i) own[static_cast<size_t>(i)] = instance.value(i, bundles[static_cast<size_t>(i)]);

  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      if (instance.value(i, bundles[static_cast<size_t>(j)]) > own[static_cast<size_t>(i)]) {
        state.envied[static_cast<size_t>(i)].push_back(j);
        state.enviers[static_cast<size_t>(j)].push_back(i);
      }
    }
  }
  return state;
}

bool safe_for(const Instance& instance, const Allocation& allocation, AgentId candidate,
              AgentId protected_agent) {
  std::vector<EdgeId> combined = allocation.bundle_of(candidate);
  for (EdgeId e : instance.nonchores_of(protected_agent)) {
    if (!allocation.allocated(e)) combined.push_back(e);
  }
  Value own = instance.value(protected_agent, allocation.bundle_of(protected_agent));
  return own >= instance.value(protected_agent, combined);
}

namespace {

// Explores every simple reverse-envy path from `start`; returns false as soon
// as some path reaching a non-envied terminal contains an agent (after the
// start) that is not safe for the start.
bool property8_from(const Instance& inst, const Allocation& alloc, const EnvyState& envy,
                    AgentId start, std::map<AgentId, bool>& safe_cache, long& budget) {
  std::vector<AgentId> path{start};
  std::vector<bool> on_path(static_cast<size_t>(inst.agent_count()), false);
  on_path[static_cast<size_t>(start)] = true;

  // The safety of path members w.r.t. the fixed start only depends on the
  // member, so one cache per start suffices.
  auto safe = [&](AgentId a) {
    auto it = safe_cache.find(a);
    if (it != safe_cache.end()) return it->second;
    bool s = safe_for(inst, alloc, a, start);
    safe_cache.emplace(a, s);
    return s;
  };

  // Iterative DFS over envier links; unsafe agents are tolerated on the
  // running path until some extension reaches a non-envied terminal.
  struct Frame {
    AgentId agent;
    size_t next = 0;
  };
  std::vector<Frame> stack{{start, 0}};
  while (!stack.empty()) {
    if (--budget < 0) fail(Errc::PreconditionViolated, "property-8 audit exceeded path budget");
    Frame& f = stack.back();
    const auto& succ = envy.enviers[static_cast<size_t>(f.agent)];
    if (succ.empty()) {
      // Non-envied terminal: every agent after the start must be safe.
      for (size_t l = 1; l < stack.size(); ++l) {
        if (!safe(stack[l].agent)) return false;
      }
    }
    bool descended = false;
    while (f.next < succ.size()) {
      AgentId nxt = succ[f.next++];
      if (on_path[static_cast<size_t>(nxt)]) continue;  // stay simple; cycles are Property (7)'s business
      on_path[static_cast<size_t>(nxt)] = true;
      stack.push_back({nxt, 0});
      descended = true;
      break;
    }
    if (!descended) {
      on_path[static_cast<size_t>(f.agent)] = false;
      stack.pop_back();
    }
  }
  return true;
}

bool has_envy_cycle(const EnvyState& envy) {
  const int n = static_cast<int>(envy.envied.size());
  std::vector<int> color(static_cast<size_t>(n), 0);  // 0 white, 1 grey, 2 black
  std::vector<std::pair<AgentId, size_t>> stack;
  for (AgentId s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] != 0) continue;
    stack.push_back({s, 0});
    color[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& [a, idx] = stack.back();
      const auto& succ = envy.envied[static_cast<size_t>(a)];
      if (idx < succ.size()) {
        AgentId nxt = succ[idx++];
        if (color[static_cast<size_t>(nxt)] == 1) return true;
        if (color[static_cast<size_t>(nxt)] == 0) {
          color[static_cast<size_t>(nxt)] = 1;
          stack.push_back({nxt, 0});
        }
      } else {
        color[static_cast<size_t>(a)] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

std::set<int> audit_properties(const Instance& instance, const Allocation& allocation) {
  const int n = instance.agent_count();
  std::set<int> satisfied;
  EnvyState envy = compute_envy(instance, allocation);
  auto bundles = allocation.bundles(n);
  std::vector<Value> own(static_cast<size_t>(n));
  for (AgentId i = 0; i < n; ++i) own[static_cast<size_t>(i)] = instance.value(i, bundles[static_cast<size_t>(i)]);

  // (1)
  bool p1 = true;
  for (AgentId i = 0; i < n && p1; ++i) {
    for (EdgeId e : instance.nonchores_of(i)) {
      if (allocation.allocated(e)) continue;
      if (own[static_cast<size_t>(i)] < instance.value_of(i, e)) {
        p1 = false;
        break;
      }
    }
  }
  if (p1) satisfied.insert(1);

  // (2)
  bool p2 = true;
  for (AgentId i = 0; i < n && p2; ++i) {
    if (!envy.is_envied(i)) continue;
    std::vector<EdgeId> avail;
    for (EdgeId e : instance.nonchores_of(i)) {
      if (!allocation.allocated(e)) avail.push_back(e);
    }
    if (own[static_cast<size_t>(i)] < instance.value(i, avail)) p2 = false;
  }
  if (p2) satisfied.insert(2);

  // (3): ordered envied pairs including the diagonal; safety is symmetric in
  // the pair, so i <= j covers everything.
  std::vector<AgentId> envied_agents;
  for (AgentId i = 0; i < n; ++i) {
    if (envy.is_envied(i)) envied_agents.push_back(i);
  }
  bool p3 = true;
  for (size_t x = 0; x < envied_agents.size() && p3; ++x) {
    for (size_t y = x; y < envied_agents.size() && p3; ++y) {
      bool found = false;
      for (AgentId k = 0; k < n && !found; ++k) {
        if (envy.is_envied(k)) continue;
        found = safe_for(instance, allocation, k, envied_agents[x]) &&
                safe_for(instance, allocation, k, envied_agents[y]);
      }
      if (!found) p3 = false;
    }
  }
  if (p3) satisfied.insert(3);

  // (4)
  bool p4 = true;
  for (AgentId i = 0; i < n && p4; ++i) {
    for (EdgeId e : bundles[static_cast<size_t>(i)]) {
      if (instance.sign(i, e) == SignClass::Chore) {
        p4 = false;
        break;
      }
    }
  }
  if (p4) satisfied.insert(4);

  // (5) and (6)
  bool p5 = true, p6 = true;
  for (AgentId i = 0; i < n; ++i) {
    if (!envy.is_envied(i)) continue;
    if (bundles[static_cast<size_t>(i)].size() != 1) p5 = false;
    if (envy.envied_by_count(i) != 1) p6 = false;
  }
  if (p5) satisfied.insert(5);
  if (p6) satisfied.insert(6);

  // (7)
  if (!has_envy_cycle(envy)) satisfied.insert(7);

  // (8)
  bool p8 = true;
  long budget = 1 << 20;
  for (AgentId s = 0; s < n && p8; ++s) {
    std::map<AgentId, bool> cache;
    p8 = property8_from(instance, allocation, envy, s, cache, budget);
  }
  if (p8) satisfied.insert(8);

  return satisfied;
}

EnvyPath find_envy_path(const Instance& instance, const Allocation& allocation, AgentId from) {
  return find_envy_path(instance, allocation, compute_envy(instance, allocation), from);
}

EnvyPath find_envy_path(const Instance& instance, const Allocation& allocation,
                        const EnvyState& envy, AgentId from) {
  (void)instance;
  (void)allocation;
  EnvyPath path;
  path.agents.push_back(from);
  std::vector<bool> visited(envy.enviers.size(), false);
  visited[static_cast<size_t>(from)] = true;
  AgentId cur = from;
  while (!envy.enviers[static_cast<size_t>(cur)].empty()) {
    AgentId nxt = envy.enviers[static_cast<size_t>(cur)].front();  // smallest envier
    if (visited[static_cast<size_t>(nxt)])
      fail(Errc::EnvyCycleDetected, "envy cycle through agent " + std::to_string(nxt));
    visited[static_cast<size_t>(nxt)] = true;
    path.agents.push_back(nxt);
    cur = nxt;
  }
  return path;
}

}  // namespace edgefair
