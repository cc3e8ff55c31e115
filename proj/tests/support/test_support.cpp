#include "test_support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ef_test {

Instance make_instance(int n, const std::vector<EdgeSpec>& edges) {
  std::vector<std::pair<AgentId, AgentId>> endpoints;
  std::vector<ValueEntry> values;
  for (size_t k = 0; k < edges.size(); ++k) {
    endpoints.push_back({edges[k].u, edges[k].v});
    if (edges[k].vu != 0) values.push_back({edges[k].u, static_cast<EdgeId>(k), Value(edges[k].vu)});
    if (edges[k].vv != 0) values.push_back({edges[k].v, static_cast<EdgeId>(k), Value(edges[k].vv)});
  }
  return build_instance(n, endpoints, values);
}

Instance good_chore_path() {
  return make_instance(3, {{0, 1, 1, 1}, {1, 2, -1, -1}});
}

Instance c4_chord_chores() {
  return make_instance(4, {{0, 1, -1, -1},
                           {1, 2, -1, -1},
                           {2, 3, -1, -1},
                           {0, 3, -1, -1},
                           {0, 2, -1, -1}});
}

Instance priceless_k4() {
  return make_instance(4, {{0, 1, 3, 3},
                           {2, 3, 3, 3},
                           {0, 2, 1, 1},
                           {0, 3, 1, 1},
                           {1, 2, 1, 1},
                           {1, 3, 1, 1}});
}

Instance chore_good_path() {
  return make_instance(3, {{0, 1, -1, -1}, {1, 2, 1, 1}});
}

std::vector<EdgeList> all_labeled_graphs(int n, int max_m) {
  EdgeList pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<EdgeList> out;
  const size_t total = pairs.size();
  for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
    if (static_cast<int>(__builtin_popcountll(mask)) > max_m) continue;
    EdgeList edges;
    for (size_t k = 0; k < total; ++k) {
      if (mask & (1ull << k)) edges.push_back(pairs[k]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

bool is_connected(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    ++count;
    for (int b : adj[static_cast<size_t>(a)]) {
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = true;
        stack.push_back(b);
      }
    }
  }
  return count == n;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::set<std::pair<int, int>> apply_perm(const EdgeList& edges, const std::vector<int>& perm) {
  std::set<std::pair<int, int>> out;
  for (auto [u, v] : edges) {
    int a = perm[static_cast<size_t>(u)], b = perm[static_cast<size_t>(v)];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, EdgeList>> connected_graphs_up_to_iso(int max_n, int max_m) {
  std::vector<std::pair<int, EdgeList>> out;
  for (int n = 1; n <= max_n; ++n) {
    auto perms = all_permutations(n);
    std::set<std::set<std::pair<int, int>>> seen;
    for (const EdgeList& edges : all_labeled_graphs(n, max_m)) {
      if (!is_connected(n, edges)) continue;
      std::set<std::pair<int, int>> canon;
      bool first = true;
      for (const auto& perm : perms) {
        auto mapped = apply_perm(edges, perm);
        if (first || mapped < canon) {
          canon = mapped;
          first = false;
        }
      }
      if (seen.insert(canon).second) {
        out.push_back({n, EdgeList(canon.begin(), canon.end())});
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> automorphisms(int n, const EdgeList& edges) {
  std::set<std::pair<int, int>> base;
  for (auto [u, v] : edges) base.insert({std::min(u, v), std::max(u, v)});
  std::vector<std::vector<int>> out;
  for (const auto& perm : all_permutations(n)) {
    if (apply_perm(edges, perm) == base) out.push_back(perm);
  }
  return out;
}

bool reference_passes(const Instance& inst, const Allocation& alloc, Notion notion) {
  const auto* av = dynamic_cast<const AdditiveValuation*>(&inst.valuation());
  if (!av) throw std::logic_error("reference checker needs additive valuations");
  const int n = inst.agent_count();
  auto bundles = alloc.bundles(n);

  auto bundle_value = [&](AgentId viewer, const std::vector<EdgeId>& bundle) {
    Value total;
    for (EdgeId e : bundle) total += av->item_value(viewer, e);
    return total;
  };

  const RemovalRule r1 = condition1_rule(notion);
  const RemovalRule r2 = condition2_rule(notion);
  for (AgentId i = 0; i < n; ++i) {
    Value vi = bundle_value(i, bundles[static_cast<size_t>(i)]);
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      Value vj = bundle_value(i, bundles[static_cast<size_t>(j)]);
      if (!(vj > vi)) continue;
      if (notion == Notion::Ef) return false;
      if (r1 != RemovalRule::None) {
        bool have = false;
        Value best;
        for (EdgeId e : bundles[static_cast<size_t>(j)]) {
          Value w = av->item_value(i, e);
          bool ok = r1 == RemovalRule::NonStrict ? !w.is_negative() : w.is_positive();
          if (ok && (!have || w < best)) {
            best = w;
            have = true;
          }
        }
        if (have && vi < vj - best) return false;
      }
      if (r2 != RemovalRule::None) {
        bool have = false;
        Value best;
        for (EdgeId e : bundles[static_cast<size_t>(i)]) {
          Value w = av->item_value(i, e);
          bool ok = r2 == RemovalRule::NonStrict ? !w.is_positive() : w.is_negative();
          if (ok && (!have || w > best)) {
            best = w;
            have = true;
          }
        }
        if (have && vi - best < vj) return false;
      }
    }
  }
  return true;
}

namespace {

// Incremental evaluation state for the orientation enumerator: bundles plus
// the full viewer-value matrix, updated as edges are assigned. Only the two
// endpoint viewers of an edge see its value, so each assignment touches two
// matrix cells.
struct EnumState {
  const Instance& inst;
  const AdditiveValuation& av;
  std::vector<std::vector<EdgeId>> bundles;
  std::vector<std::vector<Value>> val;  // val[i][j] = v_i(X_j)
  Allocation alloc;

  explicit EnumState(const Instance& instance)
      : inst(instance),
        av(dynamic_cast<const AdditiveValuation&>(instance.valuation())),
        bundles(static_cast<size_t>(instance.agent_count())),
        val(static_cast<size_t>(instance.agent_count()),
            std::vector<Value>(static_cast<size_t>(instance.agent_count()))),
        alloc(instance.edge_count()) {}

  void assign(EdgeId e, AgentId a) {
    alloc.assign(e, a);
    bundles[static_cast<size_t>(a)].push_back(e);
    const Edge& ed = inst.edge(e);
    for (AgentId w : {ed.u, ed.v})
      val[static_cast<size_t>(w)][static_cast<size_t>(a)] += av.item_value(w, e);
  }
  void unassign(EdgeId e, AgentId a) {
    alloc.release(e);
    bundles[static_cast<size_t>(a)].pop_back();
    const Edge& ed = inst.edge(e);
    for (AgentId w : {ed.u, ed.v})
      val[static_cast<size_t>(w)][static_cast<size_t>(a)] -= av.item_value(w, e);
  }

  bool passes(Notion notion) const {
    const int n = inst.agent_count();
    const RemovalRule r1 = condition1_rule(notion);
    const RemovalRule r2 = condition2_rule(notion);
    for (AgentId i = 0; i < n; ++i) {
      const Value& vi = val[static_cast<size_t>(i)][static_cast<size_t>(i)];
      for (AgentId j = 0; j < n; ++j) {
        if (i == j) continue;
        const Value& vj = val[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (!(vj > vi)) continue;
        if (notion == Notion::Ef) return false;
        if (r1 != RemovalRule::None) {
          bool have = false;
          Value best;
          for (EdgeId e : bundles[static_cast<size_t>(j)]) {
            Value w = av.item_value(i, e);
            bool ok = r1 == RemovalRule::NonStrict ? !w.is_negative() : w.is_positive();
            if (ok && (!have || w < best)) {
              best = w;
              have = true;
            }
          }
          if (have && vi < vj - best) return false;
        }
        if (r2 != RemovalRule::None) {
          bool have = false;
          Value best;
          for (EdgeId e : bundles[static_cast<size_t>(i)]) {
            Value w = av.item_value(i, e);
            bool ok = r2 == RemovalRule::NonStrict ? !w.is_positive() : w.is_negative();
            if (ok && (!have || w > best)) {
              best = w;
              have = true;
            }
          }
          if (have && vi - best < vj) return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

std::uint64_t enumerate_passing_orientations(const Instance& inst, Notion notion,
                                             const std::map<EdgeId, AgentId>& pinned,
                                             const std::function<void(const Allocation&)>& fn) {
  const int m = inst.edge_count();
  EnumState st(inst);
  std::uint64_t count = 0;

  std::function<void(EdgeId)> rec = [&](EdgeId e) {
    if (e == m) {
      if (st.passes(notion)) {
        ++count;
        if (fn) fn(st.alloc);
      }
      return;
    }
    auto pin = pinned.find(e);
    if (pin != pinned.end()) {
      st.assign(e, pin->second);
      rec(e + 1);
      st.unassign(e, pin->second);
      return;
    }
    for (AgentId a : {inst.edge(e).u, inst.edge(e).v}) {
      st.assign(e, a);
      rec(e + 1);
      st.unassign(e, a);
    }
  };
  rec(0);
  return count;
}

void for_each_allocation(const Instance& inst, const std::function<void(const Allocation&)>& fn) {
  const int m = inst.edge_count();
  const int n = inst.agent_count();
  Allocation alloc(m);
  std::function<void(EdgeId)> rec = [&](EdgeId e) {
    if (e == m) {
      fn(alloc);
      return;
    }
    for (AgentId a = 0; a < n; ++a) {
      alloc.assign(e, a);
      rec(e + 1);
    }
  };
  rec(0);
}

void for_each_orientation(const Instance& inst, const std::function<void(const Allocation&)>& fn) {
  const int m = inst.edge_count();
  Allocation alloc(m);
  std::function<void(EdgeId)> rec = [&](EdgeId e) {
    if (e == m) {
      fn(alloc);
      return;
    }
    for (AgentId a : {inst.edge(e).u, inst.edge(e).v}) {
      alloc.assign(e, a);
      rec(e + 1);
    }
  };
  rec(0);
}

Instance random_tree_instance(int n, long long vmin, long long vmax, Rng& rng) {
  std::vector<EdgeSpec> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    edges.push_back({u, v, rng.range(vmin, vmax), rng.range(vmin, vmax)});
  }
  return make_instance(n, edges);
}

Instance random_star_instance(int satellites, long long vmin, long long vmax, Rng& rng) {
  std::vector<EdgeSpec> edges;
  for (int s = 1; s <= satellites; ++s) {
    edges.push_back({0, s, rng.range(vmin, vmax), rng.range(vmin, vmax)});
  }
  return make_instance(satellites + 1, edges);
}

Instance random_signed_path_instance(int m, Rng& rng) {
  auto value = [&](bool chore) {
    long long mag = rng.range(1, 2);
    return chore ? -mag : mag;
  };
  std::vector<EdgeSpec> edges;
  for (int k = 0; k < m; ++k) {
    bool chore = rng.below(2) == 1;
    edges.push_back({k, k + 1, value(chore), value(chore)});
  }
  return make_instance(m + 1, edges);
}

}  // namespace ef_test
