#include "edgefair/goods_chores.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "edgefair/errors.hpp"
#include "edgefair/mixed_allocation.hpp"

namespace edgefair {

namespace {

// Goods/chores preconditions per the definitions: no incident chore pair /
// no incident good pair. All-dummy instances qualify as both.
void require_goods(const Instance& inst) {
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    if (!inst.chores_of(a).empty())
      fail(Errc::NotGoodsInstance, "solver requires a goods instance");
  }
}

void require_chores(const Instance& inst) {
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    if (!inst.goods_of(a).empty())
      fail(Errc::NotChoresInstance, "solver requires a chores instance");
  }
}

}  // namespace

Allocation goods_efxplus_orientation(const Instance& instance) {
  require_goods(instance);
  Allocation out(instance.edge_count());
  for (const Edge& e : instance.edges()) out.assign(e.id, e.u);
  return out;
}

Allocation goods_efx0_allocation(const Instance& instance) {
  require_goods(instance);
  // On goods instances the own-bundle condition of the mixed solver's notion
  // is vacuous, so its output is EFX-0 here.
  return efx0minus_allocation(instance);
}

Allocation chores_ef_allocation(const Instance& instance) {
  require_chores(instance);
  if (instance.agent_count() <= 2 && instance.edge_count() > 0)
    fail(Errc::TooFewAgents, "no non-endpoint agent exists for n <= 2");
  Allocation out(instance.edge_count());
  for (const Edge& e : instance.edges()) {
    AgentId a = 0;
    while (a == e.u || a == e.v) ++a;
    out.assign(e.id, a);
  }
  return out;
}

DecideResult chores_efxminus_orientation(const Instance& instance) {
  require_chores(instance);
  const int n = instance.agent_count();
  const int m = instance.edge_count();

  // Keep only the edges that are chores for both endpoints; the pruned-away
  // ones are dummies for some endpoint and go to such an endpoint at the end.
  std::vector<bool> kept(static_cast<size_t>(m), false);
  std::vector<std::vector<std::pair<AgentId, EdgeId>>> adj(static_cast<size_t>(n));
  for (const Edge& e : instance.edges()) {
    if (instance.sign(e.u, e.id) == SignClass::Chore &&
        instance.sign(e.v, e.id) == SignClass::Chore) {
      kept[static_cast<size_t>(e.id)] = true;
      adj[static_cast<size_t>(e.u)].push_back({e.v, e.id});
      adj[static_cast<size_t>(e.v)].push_back({e.u, e.id});
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  Allocation out(m);

  // Component analysis of the kept subgraph.
  std::vector<int> comp(static_cast<size_t>(n), -1);
  for (AgentId s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    std::vector<AgentId> members;
    std::deque<AgentId> queue{s};
    comp[static_cast<size_t>(s)] = s;
    while (!queue.empty()) {
      AgentId a = queue.front();
      queue.pop_front();
      members.push_back(a);
      for (auto [b, e] : adj[static_cast<size_t>(a)]) {
        if (comp[static_cast<size_t>(b)] == -1) {
          comp[static_cast<size_t>(b)] = s;
          queue.push_back(b);
        }
      }
    }
    std::set<EdgeId> comp_edges;
    for (AgentId a : members) {
      for (auto [b, e] : adj[static_cast<size_t>(a)]) comp_edges.insert(e);
    }
    if (comp_edges.size() > members.size()) return {};  // pigeonhole: someone gets two chores

    if (comp_edges.size() == members.size()) {
      // Unicyclic: peel leaves to isolate the cycle, orient the cycle
      // consistently, hang tree edges toward the leaves.
      std::map<AgentId, int> degree;
      for (AgentId a : members) degree[a] = 0;
      for (AgentId a : members) degree[a] = static_cast<int>(adj[static_cast<size_t>(a)].size());
      std::set<AgentId> removed;
      std::deque<AgentId> leaves;
      for (AgentId a : members) {
        if (degree[a] == 1) leaves.push_back(a);
      }
      while (!leaves.empty()) {
        AgentId a = leaves.front();
        leaves.pop_front();
        removed.insert(a);
        for (auto [b, e] : adj[static_cast<size_t>(a)]) {
          if (removed.count(b)) continue;
          if (--degree[b] == 1) leaves.push_back(b);
        }
      }
      // Walk the cycle from its smallest vertex toward its smallest neighbor.
      std::vector<AgentId> cycle_vertices;
      for (AgentId a : members) {
        if (!removed.count(a)) cycle_vertices.push_back(a);
      }
      std::sort(cycle_vertices.begin(), cycle_vertices.end());
      AgentId start = cycle_vertices.front();
      AgentId prev = start, cur = start;
      do {
        AgentId nxt = -1;
        EdgeId via = -1;
        for (auto [b, e] : adj[static_cast<size_t>(cur)]) {
          if (removed.count(b) || b == prev) continue;
          nxt = b;
          via = e;
          break;
        }
        if (nxt == -1) {  // two-vertex cycles cannot happen on simple graphs
          fail(Errc::PreconditionViolated, "cycle walk failed");
        }
        out.assign(via, nxt);  // each cycle vertex receives exactly one edge
        prev = cur;
        cur = nxt;
      } while (cur != start);
      // The degenerate last step: edge closing the cycle was assigned when
      // cur returned to start; but the walk above skips b == prev only, so
      // re-check that every cycle vertex got an edge via the BFS below.
      // Tree appendages: BFS outward from the cycle, child receives the edge.
      std::deque<AgentId> frontier(cycle_vertices.begin(), cycle_vertices.end());
      std::set<AgentId> seen(cycle_vertices.begin(), cycle_vertices.end());
      while (!frontier.empty()) {
        AgentId a = frontier.front();
        frontier.pop_front();
        for (auto [b, e] : adj[static_cast<size_t>(a)]) {
          if (seen.count(b)) continue;
          seen.insert(b);
          out.assign(e, b);
          frontier.push_back(b);
        }
      }
    } else {
      // Tree: root at the smallest member, each edge goes to the child.
      AgentId root = *std::min_element(members.begin(), members.end());
      std::deque<AgentId> frontier{root};
      std::set<AgentId> seen{root};
      while (!frontier.empty()) {
        AgentId a = frontier.front();
        frontier.pop_front();
        for (auto [b, e] : adj[static_cast<size_t>(a)]) {
          if (seen.count(b)) continue;
          seen.insert(b);
          out.assign(e, b);
          frontier.push_back(b);
        }
      }
    }
  }

  // Pruned-away edges go to an endpoint for whom they are dummies.
  for (const Edge& e : instance.edges()) {
    if (kept[static_cast<size_t>(e.id)]) continue;
    bool u_dummy = instance.sign(e.u, e.id) == SignClass::Dummy;
    out.assign(e.id, u_dummy ? e.u : e.v);
  }

  DecideResult result;
  result.exists = true;
  result.witness = out;
  return result;
}

PushOutcome push(const Instance& instance, const Allocation& orientation, EdgeId e, AgentId target,
                 const std::vector<EdgeId>& remaining) {
  PushOutcome out;
  out.orientation = orientation;

  std::vector<bool> in_r(static_cast<size_t>(instance.edge_count()), false);
  for (EdgeId r : remaining) in_r[static_cast<size_t>(r)] = true;

  std::vector<int> bundle_size(static_cast<size_t>(instance.agent_count()), 0);
  for (EdgeId k = 0; k < instance.edge_count(); ++k) {
    if (auto o = out.orientation.owner(k)) bundle_size[static_cast<size_t>(*o)]++;
  }

  std::set<AgentId> touched;

  struct Frame {
    AgentId agent;
    std::vector<EdgeId> pending;
    size_t idx = 0;
  };
  std::vector<Frame> stack;

  // Allocation step of one recursive call; returns false when the target is
  // no longer empty-handed.
  auto take = [&](EdgeId edge, AgentId u) -> bool {
    if (bundle_size[static_cast<size_t>(u)] > 0) return false;
    out.orientation.assign(edge, u);
    bundle_size[static_cast<size_t>(u)]++;
    in_r[static_cast<size_t>(edge)] = false;
    if (instance.sign(u, edge) == SignClass::Dummy) {
      for (EdgeId d : instance.dummies_of(u)) {
        if (in_r[static_cast<size_t>(d)]) {
          out.orientation.assign(d, u);
          bundle_size[static_cast<size_t>(u)]++;
          in_r[static_cast<size_t>(d)] = false;
        }
      }
    }
    touched.insert(u);
    Frame f;
    f.agent = u;
    for (EdgeId p : instance.incident(u)) {
      if (in_r[static_cast<size_t>(p)]) f.pending.push_back(p);
    }
    stack.push_back(std::move(f));
    return true;
  };

  if (!take(e, target)) return {};  // flag = false

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.idx == f.pending.size()) {
      stack.pop_back();
      continue;
    }
    EdgeId nxt = f.pending[f.idx++];
    if (!in_r[static_cast<size_t>(nxt)]) continue;  // grabbed deeper in the cascade
    AgentId other = instance.edge(nxt).other(f.agent);
    if (!take(nxt, other)) return {};  // flag = false
  }

  // Maximality: every edge incident to a touched agent is now allocated.
  for (AgentId u : touched) {
    for (EdgeId k : instance.incident(u)) {
      if (!out.orientation.allocated(k))
        throw std::logic_error("push: maximality violated after success");
    }
  }

  out.flag = true;
  out.touched.assign(touched.begin(), touched.end());
  for (EdgeId r : remaining) {
    if (in_r[static_cast<size_t>(r)]) out.remaining.push_back(r);
  }
  return out;
}

DecideResult chores_efx0_orientation(const Instance& instance) {
  require_chores(instance);
  Allocation x(instance.edge_count());
  std::vector<EdgeId> r(static_cast<size_t>(instance.edge_count()));
  for (EdgeId e = 0; e < instance.edge_count(); ++e) r[static_cast<size_t>(e)] = e;

  std::vector<bool> in_r(static_cast<size_t>(instance.edge_count()), true);
  auto refresh = [&]() {
    std::fill(in_r.begin(), in_r.end(), false);
    for (EdgeId e : r) in_r[static_cast<size_t>(e)] = true;
  };

  while (!r.empty()) {
    refresh();
    AgentId picked = -1;
    for (AgentId a = 0; a < instance.agent_count() && picked == -1; ++a) {
      for (EdgeId e : instance.incident(a)) {
        if (in_r[static_cast<size_t>(e)]) {
          picked = a;
          break;
        }
      }
    }
    if (picked == -1) throw std::logic_error("unallocated edges without incident agent");

    bool flag = false;
    for (EdgeId e : instance.incident(picked)) {
      if (!in_r[static_cast<size_t>(e)]) continue;
      PushOutcome attempt = push(instance, x, e, picked, r);
      if (attempt.flag) {
        x = attempt.orientation;
        // R <- R minus every edge adjacent to the touched set. Push already
        // allocated all of them (the maximality assert), so this is a filter
        // that must not find anything extra.
        std::vector<bool> adjacent(static_cast<size_t>(instance.edge_count()), false);
        for (AgentId u : attempt.touched) {
          for (EdgeId k : instance.incident(u)) adjacent[static_cast<size_t>(k)] = true;
        }
        r.clear();
        for (EdgeId k : attempt.remaining) {
          if (!adjacent[static_cast<size_t>(k)]) r.push_back(k);
        }
        if (r.size() != attempt.remaining.size())
          throw std::logic_error("push left an adjacent edge unallocated");
        flag = true;
        break;
      }
    }
    if (!flag) return {};  // exists = false
  }

  DecideResult result;
  result.exists = true;
  result.witness = x;
  return result;
}

}  // namespace edgefair
