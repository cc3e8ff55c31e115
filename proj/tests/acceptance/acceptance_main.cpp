// Acceptance suite: one criterion per function, one pass/fail line each.
// Run with no arguments for the full suite or `--criterion N` for one.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "edgefair/fairness.hpp"
#include "edgefair/generator.hpp"
#include "edgefair/goods_chores.hpp"
#include "edgefair/io.hpp"
#include "edgefair/mixed_allocation.hpp"
#include "edgefair/mixed_orientation.hpp"
#include "edgefair/oracle.hpp"
#include "edgefair/reductions.hpp"
#include "support/test_support.hpp"

using namespace edgefair;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

std::vector<std::string> g_errors;
std::uint64_t g_checked = 0;

void expect(bool ok, const std::string& what) {
  ++g_checked;
  if (!ok && g_errors.size() < 20) g_errors.push_back(what);
  if (!ok && g_errors.size() >= 20) throw Failure{"too many failures, aborting criterion"};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Checker implication lattice over a deterministic exhaustive family.
// ---------------------------------------------------------------------------

void criterion1() {
  const std::vector<long long> values{-2, -1, 0, 1};
  std::uint64_t pairs = 0;
  Rng rng(1001);

  for (int n = 1; n <= 4; ++n) {
    for (const auto& edges : ef_test::all_labeled_graphs(n, 5)) {
      const int m = static_cast<int>(edges.size());
      const int samples = m == 0 ? 1 : 12;
      for (int s = 0; s < samples; ++s) {
        std::vector<ef_test::EdgeSpec> spec;
        for (const auto& [u, v] : edges) {
          spec.push_back({u, v, values[rng.below(values.size())], values[rng.below(values.size())]});
        }
        Instance inst = ef_test::make_instance(n, spec);
        ef_test::for_each_allocation(inst, [&](const Allocation& alloc) {
          ++pairs;
          bool efx00 = passes(inst, alloc, Notion::Efx00);
          bool efx0m = passes(inst, alloc, Notion::Efx0Minus);
          bool efxp0 = passes(inst, alloc, Notion::EfxPlus0);
          bool efxpm = passes(inst, alloc, Notion::EfxPlusMinus);
          bool ef = passes(inst, alloc, Notion::Ef);
          if (efx00) expect(efx0m && efxp0, "EFX00 did not imply EFX0-/EFX+0");
          if (efx0m || efxp0) expect(efxpm, "EFX0-/EFX+0 did not imply EFX+-");
          if (ef) {
            for (Notion notion : kAllNotions) {
              if (!passes(inst, alloc, notion)) expect(false, "EF did not imply " + notion_name(notion));
            }
          }
        });
      }
    }
  }
  expect(pairs >= 100000, "family too small: " + std::to_string(pairs) + " pairs");
  std::cout << "    (" << pairs << " instance/allocation pairs)\n";
}

// ---------------------------------------------------------------------------
// 2. Goods solvers on 500 seeded instances.
// ---------------------------------------------------------------------------

void criterion2() {
  Rng rng(1002);
  for (int trial = 0; trial < 500; ++trial) {
    GenOptions opt;
    opt.kind = GenKind::Goods;
    opt.n = 2 + static_cast<int>(rng.below(9));   // n <= 10
    int cap = std::min(20, opt.n * (opt.n - 1) / 2);
    opt.m = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap + 1)));
    opt.seed = rng.next();
    opt.vmin = 0;
    opt.vmax = 5;
    Instance inst = generate_instance(opt);

    Allocation orient = goods_efxplus_orientation(inst);
    expect(orient.is_orientation(inst) && passes(inst, orient, Notion::EfxGPlus),
           "goods orientation failed EFX+ (seed " + std::to_string(opt.seed) + ")");
    Allocation alloc = goods_efx0_allocation(inst);
    expect(passes(inst, alloc, Notion::EfxG0),
           "goods allocation failed EFX0 (seed " + std::to_string(opt.seed) + ")");
  }
}

// ---------------------------------------------------------------------------
// 3. Chores deciders equal the oracle on the exhaustive family.
// ---------------------------------------------------------------------------

void run_chores_family_instance(const Instance& inst) {
  SearchSpec spec;
  spec.mode = SearchMode::Orientations;

  spec.notion = Notion::EfxC0;
  DecideResult mine0 = chores_efx0_orientation(inst);
  DecideResult truth0 = oracle_exists(inst, spec);
  expect(mine0.exists == truth0.exists, "efxc0 verdict disagrees with the oracle");
  if (mine0.exists) expect(passes(inst, *mine0.witness, Notion::EfxC0), "efxc0 witness fails");

  spec.notion = Notion::EfxCMinus;
  DecideResult mineM = chores_efxminus_orientation(inst);
  DecideResult truthM = oracle_exists(inst, spec);
  expect(mineM.exists == truthM.exists, "efxc- verdict disagrees with the oracle");
  if (mineM.exists) expect(passes(inst, *mineM.witness, Notion::EfxCMinus), "efxc- witness fails");
}

void criterion3() {
  std::uint64_t instances = 0;
  for (const auto& [n, edges] : ef_test::connected_graphs_up_to_iso(5, 7)) {
    const int m = static_cast<int>(edges.size());
    auto auts = ef_test::automorphisms(n, edges);
    std::map<std::pair<int, int>, int> edge_index;
    for (int k = 0; k < m; ++k) edge_index[edges[static_cast<size_t>(k)]] = k;

    // Values per incident slot: {0, -1} exhaustively; m <= 4 graphs also get
    // the full {0, -1, -2} range.
    std::vector<long long> slot_values = m <= 4 ? std::vector<long long>{0, -1, -2}
                                                : std::vector<long long>{0, -1};
    const int base = static_cast<int>(slot_values.size());
    const int slots = 2 * m;

    std::vector<int> pattern(static_cast<size_t>(slots), 0);
    for (;;) {
      // Automorphism dedup: keep the lexicographically smallest image.
      bool canonical = true;
      for (const auto& perm : auts) {
        std::vector<int> mapped(static_cast<size_t>(slots));
        for (int k = 0; k < m; ++k) {
          auto [u, v] = edges[static_cast<size_t>(k)];
          int pu = perm[static_cast<size_t>(u)], pv = perm[static_cast<size_t>(v)];
          int nk = edge_index.at({std::min(pu, pv), std::max(pu, pv)});
          // slot order inside an edge follows the endpoint order (u < v)
          int su = pattern[static_cast<size_t>(2 * k)], sv = pattern[static_cast<size_t>(2 * k + 1)];
          if (pu > pv) std::swap(su, sv);
          mapped[static_cast<size_t>(2 * nk)] = su;
          mapped[static_cast<size_t>(2 * nk + 1)] = sv;
        }
        if (mapped < pattern) {
          canonical = false;
          break;
        }
      }
      if (canonical) {
        ++instances;
        std::vector<ef_test::EdgeSpec> spec;
        for (int k = 0; k < m; ++k) {
          spec.push_back({edges[static_cast<size_t>(k)].first, edges[static_cast<size_t>(k)].second,
                          slot_values[static_cast<size_t>(pattern[static_cast<size_t>(2 * k)])],
                          slot_values[static_cast<size_t>(pattern[static_cast<size_t>(2 * k + 1)])]});
        }
        run_chores_family_instance(ef_test::make_instance(n, spec));
      }
      int k = 0;
      while (k < slots && ++pattern[static_cast<size_t>(k)] == base) pattern[static_cast<size_t>(k++)] = 0;
      if (k == slots) break;
    }
  }

  // The pinned hard instance: C4 plus a chord, all chores.
  Instance ex31 = ef_test::c4_chord_chores();
  expect(!chores_efx0_orientation(ex31).exists, "overloaded chores instance: efxc0 should be NOT-EXISTS");
  expect(!chores_efxminus_orientation(ex31).exists, "overloaded chores instance: efxc- should be NOT-EXISTS");
  std::cout << "    (" << instances << " chores instances vs oracle)\n";
}

// ---------------------------------------------------------------------------
// 4. Star and path deciders equal the oracle; the three-vertex split.
// ---------------------------------------------------------------------------

void criterion4() {
  std::uint64_t stars = 0, paths = 0;
  const std::vector<long long> star_vals{-2, -1, 0, 1, 2};
  for (int k = 1; k <= 4; ++k) {
    const int combos = static_cast<int>(star_vals.size() * star_vals.size());
    std::set<std::vector<int>> seen;
    std::vector<int> combo(static_cast<size_t>(k), 0);
    for (;;) {
      std::vector<int> canon = combo;
      std::sort(canon.begin(), canon.end());
      if (seen.insert(canon).second) {
        ++stars;
        std::vector<ef_test::EdgeSpec> edges;
        for (int s = 0; s < k; ++s) {
          long long vc = star_vals[static_cast<size_t>(combo[static_cast<size_t>(s)]) / star_vals.size()];
          long long vs = star_vals[static_cast<size_t>(combo[static_cast<size_t>(s)]) % star_vals.size()];
          edges.push_back({0, s + 1, vc, vs});
        }
        Instance inst = ef_test::make_instance(k + 1, edges);
        for (Notion notion : {Notion::Efx00, Notion::Efx0Minus}) {
          SearchSpec spec;
          spec.mode = SearchMode::Orientations;
          spec.notion = notion;
          DecideResult mine = star_efx00_decide(inst, notion);
          expect(mine.exists == oracle_exists(inst, spec).exists,
                 "star verdict disagrees with the oracle");
          if (mine.exists) expect(passes(inst, *mine.witness, notion), "star witness fails");
        }
      }
      int pos = 0;
      while (pos < k && ++combo[static_cast<size_t>(pos)] == combos) combo[static_cast<size_t>(pos++)] = 0;
      if (pos == k) break;
    }
  }

  // Paths: every edge good-for-both or chore-for-both, values in {-2,-1,1,2}.
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> code(static_cast<size_t>(m), 0);  // 8 variants per edge
    for (;;) {
      ++paths;
      std::vector<ef_test::EdgeSpec> edges;
      for (int e = 0; e < m; ++e) {
        int c = code[static_cast<size_t>(e)];
        bool chore = c >= 4;
        long long lv = 1 + (c & 1), rv = 1 + ((c >> 1) & 1);
        if (chore) {
          lv = -lv;
          rv = -rv;
        }
        edges.push_back({e, e + 1, lv, rv});
      }
      Instance inst = ef_test::make_instance(m + 1, edges);
      SearchSpec spec;
      spec.mode = SearchMode::Orientations;
      spec.notion = Notion::Efx0Minus;
      DecideResult mine = path_efx0minus_decide(inst);
      expect(mine.exists == oracle_exists(inst, spec).exists,
             "path verdict disagrees with the oracle");
      if (mine.exists) expect(passes(inst, *mine.witness, Notion::Efx0Minus), "path witness fails");

      int pos = 0;
      while (pos < m && ++code[static_cast<size_t>(pos)] == 8) code[static_cast<size_t>(pos++)] = 0;
      if (pos == m) break;
    }
  }

  // The three-vertex instance: no EFX00/EFX0- orientation, yet the tree
  // solver emits an EFX+0 one.
  Instance p42 = ef_test::good_chore_path();
  for (Notion notion : {Notion::Efx00, Notion::Efx0Minus}) {
    expect(!star_efx00_decide(p42, notion).exists, "good+chore path: star verdict should be NOT-EXISTS");
  }
  expect(!path_efx0minus_decide(p42).exists, "good+chore path: path verdict should be NOT-EXISTS");
  expect(passes(p42, tree_efxplus0_orientation(p42, 0), Notion::EfxPlus0),
         "good+chore path: tree orientation fails EFX+0");
  std::cout << "    (" << stars << " stars, " << paths << " paths vs oracle)\n";
}

// ---------------------------------------------------------------------------
// 5. Mixed allocations on 1000 seeded instances, with trace replay.
// ---------------------------------------------------------------------------

void replay_trace_steps(const Instance& inst, const std::vector<TraceStep>& steps) {
  for (const TraceStep& s : steps) {
    Allocation replay(inst.edge_count());
    for (size_t e = 0; e < s.owners.size(); ++e) {
      if (s.owners[e] >= 0) replay.assign(static_cast<EdgeId>(e), s.owners[e]);
    }
    std::set<int> audit = audit_properties(inst, replay);
    expect(audit == s.audit, "trace audit does not replay for op " + s.op);
    std::set<int> expected;
    if (s.op == "initial") expected = {1, 4, 5, 6, 7};
    else if (s.op == "repair2") expected = {1, 2, 3, 4, 5, 6, 7};
    else if (s.op == "repair3") expected = {1, 4, 5, 6, 7};
    else if (s.op == "repair8") expected = {1, 2, 3, 4, 5, 6, 7};
    else expected = {1, 2, 3, 4, 6, 7};
    // n <= 2 leaves a chore-for-both edge without a non-endpoint home.
    if (s.op == "part2_g4" && inst.agent_count() <= 2) expected.erase(4);
    for (int p : expected) {
      expect(audit.count(p) != 0,
             "stage guarantee lost: property " + std::to_string(p) + " after " + s.op);
    }
    expect(ef_test::reference_passes(inst, replay, Notion::Efx0Minus),
           "intermediate state is not EFX0- after " + s.op);
  }
}

void criterion5() {
  Rng rng(1005);
  for (int trial = 0; trial < 1000; ++trial) {
    GenOptions opt;
    opt.kind = GenKind::Mixed;
    opt.n = 2 + static_cast<int>(rng.below(7));  // n <= 8
    int cap = std::min(14, opt.n * (opt.n - 1) / 2);
    opt.m = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap + 1)));
    opt.seed = rng.next();
    Instance inst = generate_instance(opt);

    std::vector<TraceStep> steps;
    Allocation zero =
        efx0minus_allocation(inst, [&steps](const TraceStep& s) { steps.push_back(s); });
    expect(passes(inst, zero, Notion::Efx0Minus),
           "efx0- output fails (seed " + std::to_string(opt.seed) + ")");
    replay_trace_steps(inst, steps);

    Allocation plus = efxplus0_allocation(inst);
    expect(passes(inst, plus, Notion::EfxPlus0),
           "efx+0 output fails (seed " + std::to_string(opt.seed) + ")");
  }
}

// ---------------------------------------------------------------------------
// 6. The four-agent priceless instance: EFX00 impossible, EFX0- possible.
// ---------------------------------------------------------------------------

void criterion6() {
  Instance fig3 = ef_test::priceless_k4();
  expect(oracle_state_count(fig3, SearchMode::Allocations) == 4096, "expected 4^6 states");
  SearchSpec spec;
  spec.mode = SearchMode::Allocations;
  spec.notion = Notion::Efx00;
  expect(!oracle_exists(fig3, spec).exists, "EFX00 should not exist on the priceless instance");
  spec.notion = Notion::Efx0Minus;
  expect(oracle_exists(fig3, spec).exists, "EFX0- should exist on the priceless instance");
}

// ---------------------------------------------------------------------------
// 7. SAT-side reduction soundness.
// ---------------------------------------------------------------------------

std::optional<std::vector<bool>> first_satisfying(const Sat3B2Formula& f) {
  for (std::uint32_t bits = 0; bits < (1u << f.num_vars); ++bits) {
    std::vector<bool> a;
    for (int v = 0; v < f.num_vars; ++v) a.push_back((bits >> v) & 1);
    if (f.satisfied_by(a)) return a;
  }
  return std::nullopt;
}

void criterion7() {
  // The running formula.
  Sat3B2Formula running = parse_sat3b2(
      "p cnf 3 4\n1 2 3 0\n1 2 -3 0\n-1 -2 -3 0\n-1 -2 3 0\n");
  std::vector<Sat3B2Formula> formulas{running};

  Rng rng(1007);
  while (formulas.size() < 51) {  // +50 generated satisfiable formulas
    int nvars = 3 * (1 + static_cast<int>(rng.below(3)));  // n in {3,6,9}
    int nclauses = 4 * nvars / 3;
    std::vector<int> slots;
    for (int v = 1; v <= nvars; ++v) {
      slots.insert(slots.end(), {v, v, -v, -v});
    }
    for (size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[rng.below(i)]);
    Sat3B2Formula f;
    f.num_vars = nvars;
    bool ok = true;
    for (int c = 0; c < nclauses && ok; ++c) {
      std::array<int, 3> clause{slots[static_cast<size_t>(3 * c)],
                                slots[static_cast<size_t>(3 * c + 1)],
                                slots[static_cast<size_t>(3 * c + 2)]};
      std::set<int> distinct(clause.begin(), clause.end());
      ok = distinct.size() == 3;
      f.clauses.push_back(clause);
    }
    if (!ok || !first_satisfying(f)) continue;
    formulas.push_back(f);
  }

  for (const Sat3B2Formula& f : formulas) {
    ReductionBundle bundle = build_sat_orientation_instance(f);
    auto assignment = first_satisfying(f);
    Allocation orient = sat_assignment_to_orientation(bundle, *assignment);
    expect(orient.is_orientation(bundle.instance), "SAT certificate is not an orientation");
    expect(passes(bundle.instance, orient, Notion::EfxPlusMinus), "SAT certificate fails EFX+-");
    // All edge values are non-zero here, so EFX+- and EFX+0 coincide.
    expect(passes(bundle.instance, orient, Notion::EfxPlus0), "SAT certificate fails EFX+0");
    expect(orientation_to_sat_assignment(bundle, orient) == *assignment,
           "SAT certificate does not round-trip");
  }

  // The chore-anchor gadget property over all 16 orientations.
  Instance gadget = build_chore_anchor_gadget();
  int passing = 0;
  ef_test::for_each_orientation(gadget, [&](const Allocation& alloc) {
    if (!passes(gadget, alloc, Notion::EfxPlusMinus)) return;
    ++passing;
    expect(alloc.owner(0) == std::optional<AgentId>(0),
           "anchor gadget: pendant edge not at the pendant agent");
  });
  expect(passing > 0, "anchor gadget: no EFX+- orientation at all");
}

// ---------------------------------------------------------------------------
// 8. Circuit-side reduction soundness.
// ---------------------------------------------------------------------------

Instance standalone_or_gadget() {
  // a1=0 a1'=1 a2=2 a2'=3 a3=4 a3'=5 b1=6 b1'=7 b2=8 b2'=9 b3=10 b3'=11
  const long long P = 23;  // 1 + twice the epsilon mass
  return ef_test::make_instance(
      12, {{0, 1, P, P},   // input 1
           {2, 3, P, P},   // input 2
           {4, 5, P, P},   // output
           {6, 7, P, P},
           {8, 9, P, P},
           {10, 11, P, P},
           {1, 7, 1, 1},   // a1'-b1' eps2
           {7, 9, 2, 2},   // b1'-b2' eps1
           {9, 11, 2, 2},  // b2'-b3' eps1
           {11, 3, 1, 1},  // b3'-a2' eps2
           {9, 4, 1, 1},   // b2'-a3 eps2
           {0, 5, 2, 2},   // a1-a3' eps1
           {2, 5, 2, 2}}); // a2-a3' eps1
}

void criterion8() {
  // Terminator: all 4^5 allocations; every passing one orients the forced
  // edge upward, and at least one passes.
  {
    const long long P = 13;
    Instance t = ef_test::make_instance(
        4, {{0, 1, P, P}, {2, 3, P, P}, {0, 3, 2, 2}, {1, 3, 2, 2}, {1, 2, 2, 2}});
    expect(priceless_preconditions_hold(t), "terminator gadget preconditions");
    int passing = 0;
    ef_test::for_each_allocation(t, [&](const Allocation& alloc) {
      if (!passes(t, alloc, Notion::Efx00)) return;
      ++passing;
      expect(alloc.owner(1) == std::optional<AgentId>(2), "terminator: forced edge misdirected");
    });
    expect(passing > 0, "terminator: no EFX00 allocation at all");
  }

  // NOT and WIRE gadgets over all 2^4 orientations.
  {
    const long long P = 9;
    Instance nt = ef_test::make_instance(4, {{0, 1, P, P}, {0, 2, 2, 2}, {2, 3, P, P}, {1, 3, 2, 2}});
    expect(priceless_preconditions_hold(nt), "NOT gadget preconditions");
    int realized[2] = {0, 0};
    ef_test::for_each_orientation(nt, [&](const Allocation& alloc) {
      if (!passes(nt, alloc, Notion::Efx00)) return;
      bool in_true = alloc.owner(0) == std::optional<AgentId>(0);
      bool out_true = alloc.owner(2) == std::optional<AgentId>(2);
      expect(out_true == !in_true, "NOT gadget: output does not negate input");
      realized[in_true ? 1 : 0]++;
    });
    expect(realized[0] > 0 && realized[1] > 0, "NOT gadget: some input value unrealizable");

    Instance w = ef_test::make_instance(4, {{0, 1, P, P}, {0, 3, 2, 2}, {2, 3, P, P}, {1, 2, 2, 2}});
    expect(priceless_preconditions_hold(w), "WIRE gadget preconditions");
    int wrealized[2] = {0, 0};
    ef_test::for_each_orientation(w, [&](const Allocation& alloc) {
      if (!passes(w, alloc, Notion::Efx00)) return;
      bool in_true = alloc.owner(0) == std::optional<AgentId>(0);
      bool out_true = alloc.owner(2) == std::optional<AgentId>(2);
      expect(out_true == in_true, "WIRE gadget: output does not copy input");
      wrealized[in_true ? 1 : 0]++;
    });
    expect(wrealized[0] > 0 && wrealized[1] > 0, "WIRE gadget: some input value unrealizable");
  }

  // OR gadget over all 2^13 orientations.
  {
    Instance org = standalone_or_gadget();
    expect(priceless_preconditions_hold(org), "OR gadget preconditions");
    int realized[4] = {0, 0, 0, 0};
    ef_test::for_each_orientation(org, [&](const Allocation& alloc) {
      if (!passes(org, alloc, Notion::Efx00)) return;
      bool x = alloc.owner(0) == std::optional<AgentId>(0);
      bool y = alloc.owner(1) == std::optional<AgentId>(2);
      bool out = alloc.owner(2) == std::optional<AgentId>(4);
      expect(out == (x || y), "OR gadget: output is not the disjunction");
      realized[(x ? 1 : 0) | (y ? 2 : 0)]++;
    });
    for (int c = 0; c < 4; ++c)
      expect(realized[c] > 0, "OR gadget: input combo " + std::to_string(c) + " unrealizable");
  }

  // One-gate circuits: constructed allocations for true outputs; restricted
  // orientation enumeration refutes false outputs.
  struct Case {
    const char* netlist;
    int arity;
  };
  for (const Case& tc : {Case{"input x\ngate g = NOT x\noutput g\n", 1},
                         Case{"input x\ninput y\ngate g = OR x y\noutput g\n", 2},
                         Case{"input x\ninput y\ngate g = AND x y\noutput g\n", 2}}) {
    Circuit c = eliminate_and(parse_circuit(tc.netlist));
    ReductionBundle bundle = build_circuit_allocation_instance(c);
    expect(priceless_preconditions_hold(bundle.instance), "compiled instance preconditions");
    for (int bits = 0; bits < (1 << tc.arity); ++bits) {
      std::vector<bool> in;
      for (int k = 0; k < tc.arity; ++k) in.push_back((bits >> k) & 1);
      if (c.evaluate(in)) {
        Allocation alloc = circuit_assignment_to_allocation(bundle, in);
        expect(passes(bundle.instance, alloc, Notion::Efx00),
               "constructed circuit allocation fails EFX00");
      } else {
        std::map<EdgeId, AgentId> pinned;
        for (size_t k = 0; k < bundle.input_names.size(); ++k) {
          EdgeId e = bundle.wire_edge.at(bundle.input_names[k]);
          AgentId t = bundle.wire_true_end.at(bundle.input_names[k]);
          pinned[e] = in[k] ? t : bundle.instance.edge(e).other(t);
        }
        std::uint64_t found =
            ef_test::enumerate_passing_orientations(bundle.instance, Notion::Efx00, pinned);
        expect(found == 0, "false assignment admits an EFX00 orientation");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 9. Determinism and scale: n = 200, m = 1000 in < 2 s, byte-identical.
// ---------------------------------------------------------------------------

void criterion9() {
  struct Timed {
    std::string name;
    std::function<std::string()> run;
  };

  GenOptions mixed;
  mixed.kind = GenKind::Mixed;
  mixed.n = 200;
  mixed.m = 1000;
  mixed.seed = 20090;
  Instance mixed_inst = generate_instance(mixed);

  GenOptions goods = mixed;
  goods.kind = GenKind::Goods;
  goods.seed = 20091;
  Instance goods_inst = generate_instance(goods);

  GenOptions chores = mixed;
  chores.kind = GenKind::Chores;
  chores.seed = 20092;
  Instance chores_inst = generate_instance(chores);

  Rng shape_rng(20093);
  Instance tree_inst = ef_test::random_tree_instance(200, -4, 4, shape_rng);
  Instance star_inst = ef_test::random_star_instance(199, -4, 4, shape_rng);
  Instance path_inst = ef_test::random_signed_path_instance(199, shape_rng);

  auto alloc_str = [](const Allocation& a) { return allocation_to_json(a).dump(); };
  auto decide_str = [&](const DecideResult& r) {
    return std::string(r.exists ? "E:" : "N:") + (r.witness ? alloc_str(*r.witness) : "");
  };

  std::vector<Timed> runs;
  runs.push_back({"efx0minus_allocation", [&] { return alloc_str(efx0minus_allocation(mixed_inst)); }});
  runs.push_back({"efxplus0_allocation", [&] { return alloc_str(efxplus0_allocation(mixed_inst)); }});
  runs.push_back(
      {"efxplusminus_allocation", [&] { return alloc_str(efxplusminus_allocation(mixed_inst)); }});
  runs.push_back(
      {"goods_efxplus_orientation", [&] { return alloc_str(goods_efxplus_orientation(goods_inst)); }});
  runs.push_back(
      {"goods_efx0_allocation", [&] { return alloc_str(goods_efx0_allocation(goods_inst)); }});
  runs.push_back(
      {"chores_ef_allocation", [&] { return alloc_str(chores_ef_allocation(chores_inst)); }});
  runs.push_back({"chores_efxminus_orientation",
                  [&] { return decide_str(chores_efxminus_orientation(chores_inst)); }});
  runs.push_back({"chores_efx0_orientation",
                  [&] { return decide_str(chores_efx0_orientation(chores_inst)); }});
  runs.push_back({"tree_efxplus0_orientation",
                  [&] { return alloc_str(tree_efxplus0_orientation(tree_inst, 0)); }});
  runs.push_back({"star_efx00_decide",
                  [&] { return decide_str(star_efx00_decide(star_inst, Notion::Efx0Minus)); }});
  runs.push_back(
      {"path_efx0minus_decide", [&] { return decide_str(path_efx0minus_decide(path_inst)); }});

  for (const Timed& t : runs) {
    auto t0 = std::chrono::steady_clock::now();
    std::string first = t.run();
    double s1 = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    std::string second = t.run();
    double s2 = seconds_since(t0);
    expect(first == second, t.name + ": outputs differ across runs");
    expect(s1 < 2.0 && s2 < 2.0,
           t.name + " too slow: " + std::to_string(s1) + "s / " + std::to_string(s2) + "s");
    std::cout << "    " << t.name << ": " << s1 << "s, deterministic\n";
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  void (*run)();
};

const Criterion kCriteria[] = {
    {1, "checker implication lattice (exhaustive family, >= 1e5 pairs, < 60 s)", criterion1},
    {2, "goods solvers pass their checkers (500 seeded instances, < 10 s)", criterion2},
    {3, "chores deciders equal the oracle (exhaustive family, < 5 min)", criterion3},
    {4, "star/path deciders equal the oracle; three-vertex split (< 5 min)", criterion4},
    {5, "mixed allocations + trace replay (1000 seeded instances, < 2 min)", criterion5},
    {6, "priceless 4-agent instance: EFX00 no, EFX0- yes (< 1 s)", criterion6},
    {7, "SAT reduction soundness and round-trips (< 30 s)", criterion7},
    {8, "circuit gadget claims and one-gate circuits (< 5 min)", criterion8},
    {9, "determinism and scale at n=200, m=1000 (< 2 s per solver)", criterion9},
};

const double kLimits[] = {60, 10, 300, 300, 120, 1, 30, 300, 0};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    g_errors.clear();
    g_checked = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failure& f) {
      g_errors.push_back(f.what);
    } catch (const std::exception& e) {
      g_errors.push_back(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    bool time_ok = kLimits[c.id - 1] == 0 || secs < kLimits[c.id - 1];
    if (!time_ok) g_errors.push_back("over time budget: " + std::to_string(secs) + "s");
    bool ok = g_errors.empty();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label << "  ("
              << g_checked << " checks, " << secs << "s)\n";
    for (const std::string& e : g_errors) std::cout << "       - " << e << "\n";
    if (!ok) ++failures;
  }
  return failures;
}
