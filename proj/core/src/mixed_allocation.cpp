#include "edgefair/mixed_allocation.hpp"

#include <algorithm>

#include "edgefair/errors.hpp"
#include "edgefair/goods_chores.hpp"
#include "edgefair/oracle.hpp"

namespace edgefair {

namespace {

void emit(const TraceSink& trace, const Instance& inst, const Allocation& alloc,
          const std::string& op, std::vector<AgentId> agents) {
  if (!trace) return;
  TraceStep step;
  step.op = op;
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  step.agents = std::move(agents);
  step.owners.reserve(static_cast<size_t>(alloc.edge_count()));
  for (EdgeId e = 0; e < alloc.edge_count(); ++e) {
    auto o = alloc.owner(e);
    step.owners.push_back(o ? *o : -1);
  }
  step.audit = audit_properties(inst, alloc);
  trace(step);
}

Value bundle_value(const Instance& inst, const Allocation& alloc, AgentId a) {
  return inst.value(a, alloc.bundle_of(a));
}

// Unallocated non-chores of `a`: E_a^{>=0} ∩ R, ascending.
std::vector<EdgeId> available_nonchores(const Instance& inst, const Allocation& alloc, AgentId a) {
  std::vector<EdgeId> out;
  for (EdgeId e : inst.nonchores_of(a)) {
    if (!alloc.allocated(e)) out.push_back(e);
  }
  return out;
}

// Most valuable unallocated non-chore of `a`, ties to the smallest EdgeId.
std::optional<EdgeId> best_available_nonchore(const Instance& inst, const Allocation& alloc,
                                              AgentId a) {
  std::optional<EdgeId> best;
  Value best_value;
  for (EdgeId e : inst.nonchores_of(a)) {
    if (alloc.allocated(e)) continue;
    Value v = inst.value_of(a, e);
    if (!best || v > best_value) {
      best = e;
      best_value = v;
    }
  }
  return best;
}

// Moves the envy-path edges one step toward the enviers: the edge between
// path[l-1] and path[l] goes to path[l]. Every interior owner is pinned by
// the envy relation, which the asserts re-check.
void shift_path_edges(const Instance& inst, Allocation& alloc, const std::vector<AgentId>& path) {
  for (size_t l = 1; l < path.size(); ++l) {
    auto eid = inst.edge_between(path[l - 1], path[l]);
    if (!eid || alloc.owner(*eid) != std::optional<AgentId>(path[l - 1]))
      throw std::logic_error("envy path edge not owned by the envied agent");
    alloc.assign(*eid, path[l]);
  }
}

// Case-1 style rotation: rotate the path, hand the anchor edge (terminal ->
// start) to the start, and let the start absorb her unallocated non-chores.
void rotate_with_anchor(const Instance& inst, Allocation& alloc, const std::vector<AgentId>& path,
                        EdgeId anchor) {
  AgentId start = path.front(), terminal = path.back();
  if (alloc.owner(anchor) != std::optional<AgentId>(terminal))
    throw std::logic_error("anchor edge not held by the path terminal");
  shift_path_edges(inst, alloc, path);
  alloc.assign(anchor, start);
  for (EdgeId e : available_nonchores(inst, alloc, start)) alloc.assign(e, start);
}

// ---- scheduler-side violation probes (cheaper than a full audit) ----------

std::optional<AgentId> find_property2_violation(const Instance& inst, const Allocation& alloc,
                                                const EnvyState& envy) {
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    if (!envy.is_envied(a)) continue;
    if (bundle_value(inst, alloc, a) < inst.value(a, available_nonchores(inst, alloc, a)))
      return a;
  }
  return std::nullopt;
}

std::optional<std::pair<AgentId, AgentId>> find_property3_violation(const Instance& inst,
                                                                    const Allocation& alloc,
                                                                    const EnvyState& envy) {
  std::vector<AgentId> envied_agents;
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    if (envy.is_envied(a)) envied_agents.push_back(a);
  }
  for (size_t x = 0; x < envied_agents.size(); ++x) {
    for (size_t y = x; y < envied_agents.size(); ++y) {
      bool found = false;
      for (AgentId k = 0; k < inst.agent_count() && !found; ++k) {
        if (envy.is_envied(k)) continue;
        found = safe_for(inst, alloc, k, envied_agents[x]) &&
                safe_for(inst, alloc, k, envied_agents[y]);
      }
      if (!found) return std::make_pair(envied_agents[x], envied_agents[y]);
    }
  }
  return std::nullopt;
}

std::optional<EnvyPath> find_property8_violation(const Instance& inst, const Allocation& alloc,
                                                 const EnvyState& envy) {
  for (AgentId start = 0; start < inst.agent_count(); ++start) {
    if (!envy.is_envied(start)) continue;
    EnvyPath path = find_envy_path(inst, alloc, envy, start);
    for (size_t l = 1; l < path.agents.size(); ++l) {
      if (!safe_for(inst, alloc, path.agents[l], start)) return path;
    }
  }
  return std::nullopt;
}

// Properties (1), (4)-(7) must never break during part 1; a violation is a
// solver bug, not an input condition.
void assert_part1_invariants(const Instance& inst, const Allocation& alloc,
                             const EnvyState& envy) {
  auto bundles = alloc.bundles(inst.agent_count());
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    Value own = inst.value(a, bundles[static_cast<size_t>(a)]);
    for (EdgeId e : inst.nonchores_of(a)) {
      if (!alloc.allocated(e) && own < inst.value_of(a, e))
        throw std::logic_error("part 1 lost property 1");
    }
    for (EdgeId e : bundles[static_cast<size_t>(a)]) {
      if (inst.sign(a, e) == SignClass::Chore) throw std::logic_error("part 1 lost property 4");
    }
    if (envy.is_envied(a)) {
      if (bundles[static_cast<size_t>(a)].size() != 1) throw std::logic_error("part 1 lost property 5");
      if (envy.envied_by_count(a) != 1) throw std::logic_error("part 1 lost property 6");
    }
  }
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    if (envy.is_envied(a)) find_envy_path(inst, alloc, envy, a);  // throws on a cycle
  }
}

}  // namespace

Part1State initial_orientation(const Instance& instance, const TraceSink& trace) {
  Part1State state;
  state.orientation = Allocation(instance.edge_count());
  std::vector<AgentId> touched;
  std::vector<bool> served(static_cast<size_t>(instance.agent_count()), false);

  for (AgentId a = 0; a < instance.agent_count(); ++a) {
    AgentId k = a;
    // Chain: serve k, then the other endpoint of the picked edge, until
    // someone is already served or has nothing left to pick.
    while (!served[static_cast<size_t>(k)]) {
      auto pick = best_available_nonchore(instance, state.orientation, k);
      if (!pick) break;
      state.orientation.assign(*pick, k);
      served[static_cast<size_t>(k)] = true;
      touched.push_back(k);
      k = instance.edge(*pick).other(k);
    }
  }

  emit(trace, instance, state.orientation, "initial", touched);
  return state;
}

void repair_property2(const Instance& instance, Part1State& state, const TraceSink& trace) {
  Allocation& alloc = state.orientation;
  std::vector<AgentId> touched;
  const long cap = 4l * instance.agent_count() * std::max(1, instance.edge_count()) + 16;
  long guard = 0;

  for (;;) {
    if (++guard > cap) fail(Errc::NonTermination, "property-2 repair exceeded iteration cap");
    EnvyState envy = compute_envy(instance, alloc);
    auto who = find_property2_violation(instance, alloc, envy);
    if (!who) break;

    std::vector<EdgeId> old = alloc.bundle_of(*who);
    for (EdgeId e : available_nonchores(instance, alloc, *who)) alloc.assign(e, *who);
    for (EdgeId e : old) alloc.release(e);
    touched.push_back(*who);

    // Inner loop: released edges are immediately visible; any agent
    // preferring a single unallocated non-chore to her bundle upgrades.
    for (;;) {
      if (++guard > cap) fail(Errc::NonTermination, "property-2 repair exceeded iteration cap");
      AgentId j = -1;
      EdgeId upgrade = -1;
      for (AgentId a = 0; a < instance.agent_count() && j == -1; ++a) {
        auto pick = best_available_nonchore(instance, alloc, a);
        if (!pick) continue;
        if (instance.value_of(a, *pick) > bundle_value(instance, alloc, a)) {
          j = a;
          upgrade = *pick;
        }
      }
      if (j == -1) break;
      std::vector<EdgeId> prev = alloc.bundle_of(j);
      alloc.assign(upgrade, j);
      for (EdgeId e : prev) alloc.release(e);
      touched.push_back(j);
    }
  }

  emit(trace, instance, alloc, "repair2", touched);
}

void repair_property3(const Instance& instance, Part1State& state, const TraceSink& trace) {
  Allocation& alloc = state.orientation;
  EnvyState envy = compute_envy(instance, alloc);

  auto pair = find_property3_violation(instance, alloc, envy);
  if (!pair) return;  // identity when the property already holds
  AgentId i = pair->first, j = pair->second;

  EnvyPath ipath = find_envy_path(instance, alloc, envy, i);
  EnvyPath jpath = find_envy_path(instance, alloc, envy, j);
  AgentId is = ipath.terminal(), jt = jpath.terminal();

  // Case 1 (either side): the terminal holds the edge back to the start.
  if (auto e = instance.edge_between(i, is);
      e && alloc.owner(*e) == std::optional<AgentId>(is)) {
    rotate_with_anchor(instance, alloc, ipath.agents, *e);
    emit(trace, instance, alloc, "repair3", ipath.agents);
    return;
  }
  if (auto e = instance.edge_between(j, jt);
      e && alloc.owner(*e) == std::optional<AgentId>(jt)) {
    rotate_with_anchor(instance, alloc, jpath.agents, *e);
    emit(trace, instance, alloc, "repair3", jpath.agents);
    return;
  }

  // Otherwise both terminals block the *other* start: a_is holds e(j, is)
  // and a_jt holds e(i, jt); the two paths are vertex-disjoint.
  auto e_jis = instance.edge_between(j, is);
  auto e_ijt = instance.edge_between(i, jt);
  if (!e_jis || alloc.owner(*e_jis) != std::optional<AgentId>(is) || !e_ijt ||
      alloc.owner(*e_ijt) != std::optional<AgentId>(jt))
    fail(Errc::PreconditionViolated, "property-3 violation not in any repairable shape");
  for (AgentId a : ipath.agents) {
    if (std::find(jpath.agents.begin(), jpath.agents.end(), a) != jpath.agents.end())
      fail(Errc::PreconditionViolated, "envy paths intersect in cases 2/3");
  }

  auto eij = instance.edge_between(i, j);
  Value v_ij = eij ? instance.value_of(i, *eij) : Value(0);
  Value v_ijt = instance.value_of(i, *e_ijt);

  std::vector<AgentId> touched(ipath.agents.begin(), ipath.agents.end());
  if (v_ij >= v_ijt) {
    // Case 2: rotate the i-path only, release e(j, is), re-seat a_i.
    shift_path_edges(instance, alloc, ipath.agents);
    alloc.release(*e_jis);
    if (auto pick = best_available_nonchore(instance, alloc, i)) alloc.assign(*pick, i);
  } else {
    // Case 3: a_j absorbs e(j, is) plus her available non-chores, both paths
    // rotate, e(i, jt) is released and a_i re-seats from what remains.
    shift_path_edges(instance, alloc, jpath.agents);
    shift_path_edges(instance, alloc, ipath.agents);
    alloc.assign(*e_jis, j);
    for (EdgeId e : available_nonchores(instance, alloc, j)) alloc.assign(e, j);
    alloc.release(*e_ijt);
    if (auto pick = best_available_nonchore(instance, alloc, i)) alloc.assign(*pick, i);
    touched.insert(touched.end(), jpath.agents.begin(), jpath.agents.end());
  }
  emit(trace, instance, alloc, "repair3", touched);
}

void repair_property8(const Instance& instance, Part1State& state, const TraceSink& trace) {
  Allocation& alloc = state.orientation;
  EnvyState envy = compute_envy(instance, alloc);

  auto path = find_property8_violation(instance, alloc, envy);
  if (!path) return;  // identity when the property already holds

  // With Properties (2) and (5) in force the only unsafe agent on the path is
  // the terminal, holding the edge back to the start.
  AgentId start = path->agents.front();
  for (size_t l = 1; l + 1 < path->agents.size(); ++l) {
    if (!safe_for(instance, alloc, path->agents[l], start))
      fail(Errc::PreconditionViolated, "interior envy-path agent unsafe for the start");
  }
  auto anchor = instance.edge_between(start, path->terminal());
  if (!anchor || alloc.owner(*anchor) != std::optional<AgentId>(path->terminal()))
    fail(Errc::PreconditionViolated, "unsafe terminal does not hold the anchor edge");
  rotate_with_anchor(instance, alloc, path->agents, *anchor);
  emit(trace, instance, alloc, "repair8", path->agents);
}

Part1State part1(const Instance& instance, const TraceSink& trace) {
  Part1State state = initial_orientation(instance, trace);
  const long cap = 4l * instance.agent_count() * std::max(1, instance.edge_count()) + 16;

  for (long iter = 0; iter <= cap; ++iter) {
    EnvyState envy = compute_envy(instance, state.orientation);
    assert_part1_invariants(instance, state.orientation, envy);
    if (find_property2_violation(instance, state.orientation, envy)) {
      repair_property2(instance, state, trace);
    } else if (find_property3_violation(instance, state.orientation, envy)) {
      repair_property3(instance, state, trace);
    } else if (find_property8_violation(instance, state.orientation, envy)) {
      repair_property8(instance, state, trace);
    } else {
      return state;
    }
  }
  fail(Errc::NonTermination, "part 1 repair loop exceeded 4nm iterations");
}

namespace {

enum class Group { G1, G2, G3, G4 };

struct GroupedEdge {
  EdgeId edge;
  Group group;
  AgentId g1_receiver = -1;  // G1: qualifying endpoint
  AgentId g3_i = -1;         // G3: envied endpoint, edge not a chore for her
  AgentId g3_j = -1;         // G3: non-envied endpoint, edge is a chore for her
};

GroupedEdge classify_remainder_edge(const Instance& inst, const EnvyState& envy, EdgeId e) {
  const Edge& ed = inst.edge(e);
  GroupedEdge out;
  out.edge = e;

  auto nonchore = [&](AgentId a) { return inst.sign(a, e) != SignClass::Chore; };
  bool u_env = envy.is_envied(ed.u), v_env = envy.is_envied(ed.v);

  if ((!u_env && nonchore(ed.u)) || (!v_env && nonchore(ed.v))) {
    out.group = Group::G1;
    out.g1_receiver = (!u_env && nonchore(ed.u)) ? ed.u : ed.v;
    return out;
  }
  if (u_env && v_env) {
    out.group = Group::G2;
    return out;
  }
  // Some endpoint is non-envied; every such endpoint has the edge as a chore.
  AgentId ne = !u_env ? ed.u : ed.v;
  AgentId other = ed.other(ne);
  bool other_env = other == ed.u ? u_env : v_env;
  if (other_env && nonchore(other)) {
    out.group = Group::G3;
    out.g3_i = other;
    out.g3_j = ne;
    return out;
  }
  out.group = Group::G4;
  if (nonchore(ed.u) || nonchore(ed.v))
    throw std::logic_error("G4 edge is not a chore for both endpoints");
  return out;
}

}  // namespace

Allocation part2(const Instance& instance, const Part1State& state, const TraceSink& trace) {
  Allocation alloc = state.orientation;
  EnvyState envy = compute_envy(instance, alloc);

  std::vector<GroupedEdge> g1, g2, g3, g4;
  for (EdgeId e : alloc.unallocated()) {
    GroupedEdge ge = classify_remainder_edge(instance, envy, e);
    switch (ge.group) {
      case Group::G1: g1.push_back(ge); break;
      case Group::G2: g2.push_back(ge); break;
      case Group::G3: g3.push_back(ge); break;
      case Group::G4: g4.push_back(ge); break;
    }
  }

  for (const GroupedEdge& ge : g1) {
    const Edge& ed = instance.edge(ge.edge);
    // Smallest qualifying endpoint when both are non-envied non-chore holders.
    AgentId r = ge.g1_receiver;
    AgentId o = ed.other(r);
    if (o < r && !envy.is_envied(o) && instance.sign(o, ge.edge) != SignClass::Chore) r = o;
    alloc.assign(ge.edge, r);
    envy = compute_envy(instance, alloc);
    emit(trace, instance, alloc, "part2_g1", {r});
  }

  for (const GroupedEdge& ge : g2) {
    const Edge& ed = instance.edge(ge.edge);
    AgentId receiver = -1;
    for (AgentId k = 0; k < instance.agent_count(); ++k) {
      if (envy.is_envied(k)) continue;
      if (safe_for(instance, alloc, k, ed.u) && safe_for(instance, alloc, k, ed.v)) {
        receiver = k;
        break;
      }
    }
    if (receiver == -1)
      fail(Errc::PreconditionViolated, "no non-envied agent safe for both endpoints of a G2 edge");
    alloc.assign(ge.edge, receiver);
    envy = compute_envy(instance, alloc);
    emit(trace, instance, alloc, "part2_g2", {receiver});
  }

  for (const GroupedEdge& ge : g3) {
    AgentId i = ge.g3_i, j = ge.g3_j;
    AgentId receiver = -1;
    if (!envy.is_envied(i)) {
      receiver = i;  // sub-case 1: the non-chore endpoint became non-envied
    } else {
      for (AgentId k = 0; k < instance.agent_count(); ++k) {  // sub-case 2
        if (k == j || envy.is_envied(k)) continue;
        if (safe_for(instance, alloc, k, i)) {
          receiver = k;
          break;
        }
      }
      if (receiver == -1) {
        // Sub-case 3: the only safe non-envied agent is a_j, so the envy path
        // from a_i must terminate at her; the predecessor takes the edge.
        EnvyPath path = find_envy_path(instance, alloc, envy, i);
        if (path.terminal() != j)
          fail(Errc::PreconditionViolated, "G3 envy path does not end at the chore endpoint");
        if (path.hops() < 2)
          fail(Errc::PreconditionViolated, "G3 envy path too short for sub-case 3");
        receiver = path.agents[path.agents.size() - 2];
      }
    }
    alloc.assign(ge.edge, receiver);
    envy = compute_envy(instance, alloc);
    emit(trace, instance, alloc, "part2_g3", {receiver});
  }

  if (!g4.empty()) {
    bool anyone_envied = false;
    for (AgentId a = 0; a < instance.agent_count(); ++a) anyone_envied |= envy.is_envied(a);

    std::vector<AgentId> receivers;
    if (!anyone_envied) {
      for (const GroupedEdge& ge : g4) {
        const Edge& ed = instance.edge(ge.edge);
        AgentId r = 0;
        while (r == ed.u || r == ed.v) ++r;
        if (r >= instance.agent_count()) r = std::min(ed.u, ed.v);  // n <= 2: no non-endpoint exists
        alloc.assign(ge.edge, r);
        receivers.push_back(r);
      }
    } else {
      // Find an envied a_i whose (unique) envier a_j is non-envied.
      AgentId gi = -1, gj = -1;
      for (AgentId a = 0; a < instance.agent_count() && gi == -1; ++a) {
        if (!envy.is_envied(a)) continue;
        for (AgentId w : envy.enviers[static_cast<size_t>(a)]) {
          if (!envy.is_envied(w)) {
            gi = a;
            gj = w;
            break;
          }
        }
      }
      if (gi == -1) fail(Errc::PreconditionViolated, "envy graph has no non-envied envier");
      for (const GroupedEdge& ge : g4) {
        bool incident_j = instance.edge(ge.edge).incident(gj);
        alloc.assign(ge.edge, incident_j ? gi : gj);
        receivers.push_back(incident_j ? gi : gj);
      }
    }
    envy = compute_envy(instance, alloc);
    emit(trace, instance, alloc, "part2_g4", receivers);
  }

  if (!alloc.is_total()) throw std::logic_error("part 2 left edges unallocated");
  return alloc;
}

Allocation efx0minus_allocation(const Instance& instance, const TraceSink& trace) {
  Part1State state = part1(instance, trace);
  return part2(instance, state, trace);
}

Allocation efxplus0_allocation(const Instance& instance) {
  const int n = instance.agent_count();
  const int m = instance.edge_count();

  if (instance.all_edges_chore_for_both() && m > 0) {
    if (n >= 3) return chores_ef_allocation(instance);
    // n <= 2 on a simple graph means m <= 1: one chore per agent works.
    Allocation out(m);
    for (EdgeId e = 0; e < m; ++e) out.assign(e, 0);
    return out;
  }

  Allocation out(m);
  std::vector<bool> placed(static_cast<size_t>(m), false);
  auto place = [&](EdgeId e, AgentId a) {
    out.assign(e, a);
    placed[static_cast<size_t>(e)] = true;
  };
  auto good_for = [&](AgentId a, EdgeId e) { return instance.sign(a, e) == SignClass::Good; };

  AgentId rich = -1;
  for (AgentId a = 0; a < n && rich == -1; ++a) {
    if (!instance.value(a, instance.incident(a)).is_negative()) rich = a;
  }

  if (rich != -1) {
    // Case 1: someone values her whole neighborhood non-negatively; she takes
    // it all plus every edge that is a good for neither endpoint.
    for (EdgeId e : instance.incident(rich)) place(e, rich);
    for (const Edge& ed : instance.edges()) {
      if (placed[static_cast<size_t>(ed.id)]) continue;
      if (!good_for(ed.u, ed.id) && !good_for(ed.v, ed.id)) place(ed.id, rich);
    }
    for (const Edge& ed : instance.edges()) {
      if (placed[static_cast<size_t>(ed.id)]) continue;
      place(ed.id, good_for(ed.u, ed.id) ? ed.u : ed.v);
    }
    return out;
  }

  // Case 2: every neighborhood is worth strictly negative. Choose e(i,j) not
  // a chore for a_i, preferring edges that are a chore for exactly one side.
  EdgeId chosen = -1;
  for (const Edge& ed : instance.edges()) {
    bool u_chore = instance.sign(ed.u, ed.id) == SignClass::Chore;
    bool v_chore = instance.sign(ed.v, ed.id) == SignClass::Chore;
    if (u_chore != v_chore) {
      chosen = ed.id;
      break;
    }
  }
  if (chosen == -1) {
    for (const Edge& ed : instance.edges()) {
      if (instance.sign(ed.u, ed.id) != SignClass::Chore ||
          instance.sign(ed.v, ed.id) != SignClass::Chore) {
        chosen = ed.id;
        break;
      }
    }
  }
  if (chosen == -1) throw std::logic_error("case 2 requires a non-chore endpoint somewhere");

  const Edge& ce = instance.edge(chosen);
  bool u_nonchore = instance.sign(ce.u, chosen) != SignClass::Chore;
  bool v_nonchore = instance.sign(ce.v, chosen) != SignClass::Chore;
  AgentId i = u_nonchore && v_nonchore ? std::min(ce.u, ce.v) : (u_nonchore ? ce.u : ce.v);
  AgentId j = ce.other(i);

  for (EdgeId e : instance.nonchores_of(i)) place(e, i);
  for (const Edge& ed : instance.edges()) {
    if (placed[static_cast<size_t>(ed.id)] || ed.incident(i)) continue;
    if (!good_for(ed.u, ed.id) && !good_for(ed.v, ed.id)) place(ed.id, i);
  }
  for (EdgeId e : instance.goods_of(j)) {
    if (!placed[static_cast<size_t>(e)]) place(e, j);
  }
  for (EdgeId e : instance.incident(i)) {
    if (placed[static_cast<size_t>(e)]) continue;
    AgentId k = instance.edge(e).other(i);
    if (!good_for(k, e)) place(e, j);
  }
  for (const Edge& ed : instance.edges()) {
    if (placed[static_cast<size_t>(ed.id)]) continue;
    place(ed.id, good_for(ed.u, ed.id) ? ed.u : ed.v);
  }
  if (!out.is_total()) throw std::logic_error("EFX+0 construction left edges unallocated");
  return out;
}

Allocation efxplusminus_allocation(const Instance& instance) {
  try {
    return efxplus0_allocation(instance);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateAllChores) throw;
    return efx0minus_allocation(instance);
  }
}

DecideResult efx00_allocation_bruteforce(const Instance& instance, std::uint64_t budget) {
  SearchSpec spec;
  spec.mode = SearchMode::Allocations;
  spec.notion = Notion::Efx00;
  spec.budget = budget;
  return oracle_exists(instance, spec);
}

}  // namespace edgefair
