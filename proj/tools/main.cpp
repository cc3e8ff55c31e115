// edgefair: fair-division solvers, deciders and reduction compilers for
// edge-item instances on simple graphs. One subcommand per operation; see
// README.md and docs/formats.md for the file formats.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgefair/fairness.hpp"
#include "edgefair/generator.hpp"
#include "edgefair/goods_chores.hpp"
#include "edgefair/io.hpp"
#include "edgefair/mixed_allocation.hpp"
#include "edgefair/mixed_orientation.hpp"
#include "edgefair/oracle.hpp"
#include "edgefair/reductions.hpp"

using namespace edgefair;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 10;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerifyMismatch = 5;

Notion parse_notion_or_throw(const std::string& s) {
  auto n = notion_from_string(s);
  if (!n) fail(Errc::InvalidArgument, "unknown notion '" + s + "'");
  return *n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1,0,?,true,false" -> tristate vector (-1 for '?').
std::vector<int> parse_assignment(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "1" || token == "true") out.push_back(1);
    else if (token == "0" || token == "false") out.push_back(0);
    else if (token == "?") out.push_back(-1);
    else fail(Errc::ParseError, "bad assignment token '" + token + "'");
  }
  return out;
}

void write_allocation(const std::string& path, const Allocation& alloc) {
  if (!path.empty()) save_json(path, allocation_to_json(alloc));
}

json trace_to_json(const std::vector<TraceStep>& steps) {
  json out = json::array();
  for (const TraceStep& s : steps) {
    out.push_back({{"op", s.op},
                   {"agents", s.agents},
                   {"owners", s.owners},
                   {"audit", std::vector<int>(s.audit.begin(), s.audit.end())}});
  }
  return json{{"steps", out}};
}

// Re-verify a solver output with the checker before declaring success.
int finish_solve(const Instance& inst, const Allocation& alloc, Notion notion,
                 const std::string& out_path) {
  ViolationReport report = check(inst, alloc, notion);
  if (!report.ok()) {
    std::cerr << "solver output FAILED re-verification for " << notion_name(notion) << " ("
              << report.violations.size() << " violations)\n";
    return kExitVerifyMismatch;
  }
  write_allocation(out_path, alloc);
  std::cout << "ok: allocation satisfies " << notion_name(notion) << "\n";
  return kExitTrue;
}

int run_check(const std::string& instance_path, const std::string& allocation_path,
              const std::string& notion_str, const std::string& out_path) {
  Instance inst = load_instance(instance_path);
  Allocation alloc = load_allocation(allocation_path, inst.edge_count());
  Notion notion = parse_notion_or_throw(notion_str);
  ViolationReport report = check(inst, alloc, notion);
  if (!out_path.empty()) save_json(out_path, report_to_json(report));
  if (report.ok()) {
    std::cout << "PASS " << notion_name(notion) << "\n";
    return kExitTrue;
  }
  std::cout << "FAIL " << notion_name(notion) << " (" << report.violations.size()
            << " violations)\n";
  for (const Violation& v : report.violations) {
    std::cout << "  agent " << v.envious << " envies agent " << v.envied;
    if (v.witness_edge)
      std::cout << " even after removing edge " << *v.witness_edge
                << (v.side == WitnessSide::OwnBundle ? " from her own bundle" : " from the envied bundle");
    std::cout << "\n";
  }
  return kExitFalse;
}

int run_solve(const std::string& instance_path, const std::string& notion_str,
              const std::string& mode, const std::string& shape, int root,
              const std::string& out_path, const std::string& trace_path, std::uint64_t budget) {
  Instance inst = load_instance(instance_path);
  Notion notion = parse_notion_or_throw(notion_str);

  std::vector<TraceStep> steps;
  TraceSink sink = nullptr;
  if (!trace_path.empty()) sink = [&steps](const TraceStep& s) { steps.push_back(s); };
  auto flush_trace = [&]() {
    if (!trace_path.empty()) save_json(trace_path, trace_to_json(steps));
  };

  if (shape == "tree") {
    Allocation alloc = tree_efxplus0_orientation(inst, root);
    return finish_solve(inst, alloc, notion, out_path);
  }

  switch (notion) {
    case Notion::Ef:
      if (!inst.is_chores())
        fail(Errc::InvalidArgument, "ef solving is only provided for chores instances");
      return finish_solve(inst, chores_ef_allocation(inst), notion, out_path);
    case Notion::EfxG0:
      return finish_solve(inst, goods_efx0_allocation(inst), notion, out_path);
    case Notion::EfxGPlus:
      if (mode == "orientation")
        return finish_solve(inst, goods_efxplus_orientation(inst), notion, out_path);
      return finish_solve(inst, goods_efx0_allocation(inst), notion, out_path);
    case Notion::EfxC0:
    case Notion::EfxCMinus: {
      if (mode == "orientation") {
        DecideResult r = notion == Notion::EfxC0 ? chores_efx0_orientation(inst)
                                                 : chores_efxminus_orientation(inst);
        if (!r.exists) {
          std::cout << "NOT-EXISTS\n";
          return kExitFalse;
        }
        return finish_solve(inst, *r.witness, notion, out_path);
      }
      return finish_solve(inst, chores_ef_allocation(inst), notion, out_path);
    }
    case Notion::Efx00: {
      std::cout << "note: deciding " << notion_name(notion)
                << " existence is NP-hard; falling back to exhaustive search\n";
      SearchSpec spec;
      spec.mode = mode == "orientation" ? SearchMode::Orientations : SearchMode::Allocations;
      spec.notion = notion;
      spec.budget = budget;
      DecideResult r = oracle_exists(inst, spec);
      if (!r.exists) {
        std::cout << "NOT-EXISTS\n";
        return kExitFalse;
      }
      return finish_solve(inst, *r.witness, notion, out_path);
    }
    case Notion::Efx0Minus: {
      Allocation alloc = efx0minus_allocation(inst, sink);
      flush_trace();
      return finish_solve(inst, alloc, notion, out_path);
    }
    case Notion::EfxPlus0:
      return finish_solve(inst, efxplus0_allocation(inst), notion, out_path);
    case Notion::EfxPlusMinus:
      return finish_solve(inst, efxplusminus_allocation(inst), notion, out_path);
  }
  fail(Errc::InvalidArgument, "unreachable notion");
}

int run_decide(const std::string& instance_path, const std::string& notion_str,
               const std::string& mode, const std::string& shape, const std::string& out_path) {
  Instance inst = load_instance(instance_path);
  Notion notion = parse_notion_or_throw(notion_str);
  if (mode != "orientation")
    fail(Errc::InvalidArgument, "decide supports --mode orientation (use solve/oracle otherwise)");

  DecideResult result;
  if (notion == Notion::EfxC0) {
    result = chores_efx0_orientation(inst);
  } else if (notion == Notion::EfxCMinus) {
    result = chores_efxminus_orientation(inst);
  } else if (notion == Notion::Efx00 || notion == Notion::Efx0Minus) {
    std::string effective = shape;
    if (effective == "auto") effective = is_star(inst) ? "star" : (is_path(inst) ? "path" : "");
    if (effective == "star") result = star_efx00_decide(inst, notion);
    else if (effective == "path") result = path_efx0minus_decide(inst);
    else
      fail(Errc::InvalidArgument,
           "no polynomial decider for this notion on general graphs (NP-hard); "
           "use --shape star|path or the oracle");
  } else {
    fail(Errc::InvalidArgument, "no orientation decider for notion " + notion_name(notion));
  }

  if (result.exists) {
    std::cout << "EXISTS\n";
    if (result.witness) write_allocation(out_path, *result.witness);
    return kExitTrue;
  }
  std::cout << "NOT-EXISTS\n";
  return kExitFalse;
}

int run_reduce(const std::string& kind, const std::string& in_path, const std::string& out_path,
               const std::string& map_path) {
  if (kind == "sat3b2") {
    Sat3B2Formula f = parse_sat3b2(read_file(in_path));
    ReductionBundle bundle = build_sat_orientation_instance(f);
    if (!out_path.empty()) save_json(out_path, instance_to_json(bundle.instance));
    if (!map_path.empty()) save_json(map_path, bundle_map_to_json(bundle));
    std::cout << "reduced " << f.num_vars << " vars / " << f.clauses.size() << " clauses to "
              << bundle.instance.agent_count() << " agents / " << bundle.instance.edge_count()
              << " edges\n";
    return kExitTrue;
  }
  if (kind == "circuit") {
    Circuit c = eliminate_and(parse_circuit(read_file(in_path)));
    ReductionBundle bundle = build_circuit_allocation_instance(c);
    if (!out_path.empty()) save_json(out_path, instance_to_json(bundle.instance));
    if (!map_path.empty()) save_json(map_path, bundle_map_to_json(bundle));
    std::cout << "reduced circuit (" << c.inputs.size() << " inputs, " << c.gates.size()
              << " gates after AND elimination) to " << bundle.instance.agent_count()
              << " agents / " << bundle.instance.edge_count() << " edges\n";
    return kExitTrue;
  }
  fail(Errc::InvalidArgument, "reduce kind must be sat3b2 or circuit");
}

int run_certify(const std::string& map_path, const std::string& instance_path,
                const std::string& assignment_str, const std::string& allocation_path,
                const std::string& out_path) {
  Instance inst = load_instance(instance_path);
  ReductionBundle bundle = bundle_map_from_json(load_json(map_path), std::move(inst));
  const bool sat_side = bundle.formula.has_value();

  if (!assignment_str.empty()) {
    std::vector<int> tri = parse_assignment(assignment_str);
    size_t arity = sat_side ? static_cast<size_t>(bundle.formula->num_vars)
                            : bundle.input_names.size();
    // Trailing '?' entries beyond the arity are tolerated and dropped.
    while (tri.size() > arity && tri.back() == -1) tri.pop_back();
    if (tri.size() != arity)
      fail(Errc::InvalidArgument, "assignment has " + std::to_string(tri.size()) +
                                      " entries, expected " + std::to_string(arity));

    // Enumerate completions of '?' entries (false first) until one certifies.
    std::vector<size_t> free_slots;
    for (size_t k = 0; k < tri.size(); ++k) {
      if (tri[k] == -1) free_slots.push_back(k);
    }
    if (free_slots.size() > 12)
      fail(Errc::InvalidArgument, "too many '?' entries to complete by enumeration");
    for (std::uint64_t bits = 0; bits < (1ull << free_slots.size()); ++bits) {
      std::vector<bool> assignment(tri.size());
      for (size_t k = 0; k < tri.size(); ++k) assignment[k] = tri[k] == 1;
      for (size_t k = 0; k < free_slots.size(); ++k)
        assignment[free_slots[k]] = (bits >> k) & 1;
      bool usable = sat_side ? bundle.formula->satisfied_by(assignment)
                             : bundle.circuit->evaluate(assignment);
      if (!usable) continue;
      Allocation alloc = sat_side ? sat_assignment_to_orientation(bundle, assignment)
                                  : circuit_assignment_to_allocation(bundle, assignment);
      write_allocation(out_path, alloc);
      std::cout << "certified: assignment";
      for (bool b : assignment) std::cout << " " << (b ? 1 : 0);
      std::cout << " -> " << (sat_side ? "EFX+- orientation" : "EFX00 allocation") << "\n";
      return kExitTrue;
    }
    fail(sat_side ? Errc::NotSatisfying : Errc::OutputFalse,
         "no completion of the assignment certifies");
  }

  if (!allocation_path.empty()) {
    Allocation alloc = load_allocation(allocation_path, bundle.instance.edge_count());
    std::vector<bool> assignment = sat_side ? orientation_to_sat_assignment(bundle, alloc)
                                            : allocation_to_circuit_assignment(bundle, alloc);
    std::cout << "assignment:";
    for (bool b : assignment) std::cout << " " << (b ? 1 : 0);
    std::cout << "\n";
    return kExitTrue;
  }
  fail(Errc::InvalidArgument, "certify needs --assignment or --allocation");
}

int run_oracle(const std::string& instance_path, const std::string& mode_str,
               const std::string& notion_str, bool count, std::uint64_t budget, int jobs,
               const std::string& out_path) {
  Instance inst = load_instance(instance_path);
  SearchSpec spec;
  spec.mode = mode_str == "orientations" ? SearchMode::Orientations : SearchMode::Allocations;
  spec.notion = parse_notion_or_throw(notion_str);
  spec.budget = budget;
  spec.jobs = jobs;
  if (count) {
    std::cout << oracle_count(inst, spec) << "\n";
    return kExitTrue;
  }
  DecideResult r = oracle_exists(inst, spec);
  if (r.exists) {
    std::cout << "EXISTS\n";
    if (r.witness) write_allocation(out_path, *r.witness);
    return kExitTrue;
  }
  std::cout << "NOT-EXISTS\n";
  return kExitFalse;
}

int run_gen(const std::string& kind, int n, int m, std::uint64_t seed, long long vmin,
            long long vmax, const std::string& out_path) {
  GenOptions opt;
  if (kind == "goods") opt.kind = GenKind::Goods;
  else if (kind == "chores") opt.kind = GenKind::Chores;
  else if (kind == "mixed") opt.kind = GenKind::Mixed;
  else fail(Errc::InvalidArgument, "gen kind must be goods, chores or mixed");
  opt.n = n;
  opt.m = m;
  opt.seed = seed;
  opt.vmin = vmin;
  opt.vmax = vmax;
  Instance inst = generate_instance(opt);
  save_json(out_path, instance_to_json(inst));
  std::cout << "generated " << kind_name(inst.kind()) << " instance: n=" << n << " m=" << m
            << " seed=" << seed << "\n";
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair division of edge items on simple graphs"};
  app.require_subcommand(1);

  std::string instance_path, allocation_path, notion_str, out_path, trace_path, map_path, in_path;
  std::string mode = "allocation", shape = "auto", kind, assignment_str;
  std::string oracle_mode = "allocations";
  int root = 0, n = 4, m = 4, jobs = 1;
  long long vmin = -5, vmax = 5;
  std::uint64_t seed = 0, budget = 20'000'000;
  bool count = false;

  auto* c_check = app.add_subcommand("check", "check an allocation against a notion");
  c_check->add_option("--instance", instance_path)->required();
  c_check->add_option("--allocation", allocation_path)->required();
  c_check->add_option("--notion", notion_str)->required();
  c_check->add_option("--out", out_path);

  auto* c_solve = app.add_subcommand("solve", "compute an allocation for a notion");
  c_solve->add_option("--instance", instance_path)->required();
  c_solve->add_option("--notion", notion_str)->required();
  c_solve->add_option("--mode", mode)->check(CLI::IsMember({"allocation", "orientation"}));
  c_solve->add_option("--shape", shape)->check(CLI::IsMember({"auto", "tree"}));
  c_solve->add_option("--root", root);
  c_solve->add_option("--out", out_path);
  c_solve->add_option("--trace", trace_path);
  c_solve->add_option("--budget", budget);

  std::string decide_mode = "orientation";
  auto* c_decide = app.add_subcommand("decide", "decide orientation existence for a notion");
  c_decide->add_option("--instance", instance_path)->required();
  c_decide->add_option("--notion", notion_str)->required();
  c_decide->add_option("--mode", decide_mode)->check(CLI::IsMember({"orientation"}));
  c_decide->add_option("--shape", shape)->check(CLI::IsMember({"auto", "star", "path"}));
  c_decide->add_option("--out", out_path);

  auto* c_reduce = app.add_subcommand("reduce", "compile a hardness reduction");
  c_reduce->add_option("kind", kind)->required()->check(CLI::IsMember({"sat3b2", "circuit"}));
  c_reduce->add_option("--in", in_path)->required();
  c_reduce->add_option("--out", out_path);
  c_reduce->add_option("--map", map_path);

  auto* c_certify = app.add_subcommand("certify", "translate certificates through a reduction");
  c_certify->add_option("--map", map_path)->required();
  c_certify->add_option("--instance", instance_path)->required();
  c_certify->add_option("--assignment", assignment_str);
  c_certify->add_option("--allocation", allocation_path);
  c_certify->add_option("--out", out_path);

  auto* c_oracle = app.add_subcommand("oracle", "exhaustive ground-truth search");
  c_oracle->add_option("--instance", instance_path)->required();
  c_oracle->add_option("--mode", oracle_mode)->check(CLI::IsMember({"allocations", "orientations"}));
  c_oracle->add_option("--notion", notion_str)->required();
  c_oracle->add_flag("--count", count);
  c_oracle->add_option("--budget", budget);
  c_oracle->add_option("--jobs", jobs);
  c_oracle->add_option("--out", out_path);

  auto* c_gen = app.add_subcommand("gen", "generate a reproducible random instance");
  c_gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"goods", "chores", "mixed"}));
  c_gen->add_option("--n", n)->required();
  c_gen->add_option("--m", m)->required();
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--vmin", vmin);
  c_gen->add_option("--vmax", vmax);
  c_gen->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_check->parsed()) return run_check(instance_path, allocation_path, notion_str, out_path);
    if (c_solve->parsed())
      return run_solve(instance_path, notion_str, mode, shape, root, out_path, trace_path, budget);
    if (c_decide->parsed()) return run_decide(instance_path, notion_str, decide_mode, shape, out_path);
    if (c_reduce->parsed()) return run_reduce(kind, in_path, out_path, map_path);
    if (c_certify->parsed())
      return run_certify(map_path, instance_path, assignment_str, allocation_path, out_path);
    if (c_oracle->parsed())
      return run_oracle(instance_path, oracle_mode, notion_str, count, budget, jobs, out_path);
    if (c_gen->parsed()) return run_gen(kind, n, m, seed, vmin, vmax, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::BudgetExceeded ? kExitBudget : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
