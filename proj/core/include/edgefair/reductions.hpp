#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgefair/allocation.hpp"
#include "edgefair/instance.hpp"

namespace edgefair {

// ---------------------------------------------------------------------------
// (3,B2)-SAT side: formula -> orientation instance, certificates both ways.
// ---------------------------------------------------------------------------

/// CNF formula in which every variable occurs exactly twice positively and
/// twice negatively and every clause holds three distinct literals
/// (hence 3m = 4n). Literals are DIMACS-style nonzero ints.
struct Sat3B2Formula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS-like text: optional `c` comment lines, a `p cnf <vars> <clauses>`
/// header, then clause lines of three nonzero ints terminated by 0.
/// Throws ParseError, NotThreeDistinctLiterals, OccurrenceCountViolated.
Sat3B2Formula parse_sat3b2(const std::string& text);

// ---------------------------------------------------------------------------
// Circuit netlists (input format of the allocation-hardness compiler).
// ---------------------------------------------------------------------------

enum class GateOp { And, Or, Not };

struct Gate {
  std::string name;
  GateOp op;
  std::string in0;
  std::string in1;  // empty for NOT
};

/// Single-output combinational circuit over AND/OR/NOT.
struct Circuit {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;  // topologically ordered after parsing
  std::string output;

  bool has_and() const;
  /// Evaluates the output for an assignment of the inputs, in input order.
  bool evaluate(const std::vector<bool>& input_values) const;
};

/// Line-based netlist: `input <w>`, `gate <w> = AND <a> <b> | OR <a> <b> |
/// NOT <a>`, `output <w>`. Throws ParseError, MultipleDrivers, UndrivenWire,
/// CycleDetected.
Circuit parse_circuit(const std::string& text);

/// Rewrites AND(a,b) as NOT(OR(NOT a, NOT b)); the result computes the same
/// function and contains no AND gates.
Circuit eliminate_and(const Circuit& circuit);

// ---------------------------------------------------------------------------
// Compiled reduction bundles.
// ---------------------------------------------------------------------------

enum class EdgeRole {
  Variable,       // (a_i^T, a_i^F), value 2/2
  ClauseLiteral,  // (clause vertex, literal vertex), value 1/1
  Triangle,       // the three anchor-triangle edges, value -1/-1
  Penalty,        // edges tying variable/clause vertices to the anchor, -1/-1
  Priceless,      // circuit side: input/output/backbone edges
  GadgetSmall,    // circuit side: epsilon edges inside gadgets
};

struct RoleInfo {
  EdgeRole role;
  int index = -1;     // variable index / clause index, where meaningful
  int gadget = -1;    // gadget ordinal on the circuit side
  std::string label;  // gadget-local edge label, e.g. "b1'-b2'"
};

enum class GadgetKind { Not, Wire, Or, True };

/// One instantiated gadget: local vertex/edge labels resolved to ids, plus
/// the wires it consumes and drives. Drives the per-gadget completion rules
/// of the certificate translator.
struct GadgetInfo {
  GadgetKind kind;
  std::map<std::string, AgentId> verts;
  std::map<std::string, EdgeId> edges;
  std::vector<std::string> in_wires;
  std::string out_wire;  // empty for the terminator
};

/// A compiled reduction instance plus everything needed to translate
/// certificates in both directions.
struct ReductionBundle {
  explicit ReductionBundle(Instance inst) : instance(std::move(inst)) {}

  Instance instance;
  std::map<EdgeId, RoleInfo> edge_roles;

  // SAT side
  std::optional<Sat3B2Formula> formula;
  std::vector<EdgeId> variable_edges;  // variable_edges[i] = (a_i^T, a_i^F)
  std::vector<AgentId> true_vertex;    // a_i^T
  std::vector<AgentId> false_vertex;   // a_i^F
  std::vector<AgentId> clause_vertex;  // a_j^C
  std::vector<AgentId> anchor_vertex;  // the three triangle agents

  // circuit side
  std::optional<Circuit> circuit;  // AND-free form actually compiled
  std::vector<std::string> input_names;
  std::map<std::string, EdgeId> wire_edge;       // wire name -> representing edge
  std::map<std::string, AgentId> wire_true_end;  // endpoint encoding True
  std::vector<GadgetInfo> gadgets;
  EdgeId output_edge = -1;
  Value priceless;  // P
  Value eps1, eps2;
};

/// Builds the orientation-hardness instance for a formula: a 2/2 edge per
/// variable, 1/1 edges from clause vertices to literal vertices, and a chore
/// anchor triangle with -1/-1 edges to every variable and clause vertex.
ReductionBundle build_sat_orientation_instance(const Sat3B2Formula& formula);

/// Satisfying assignment -> orientation passing the EFX-plus-minus checker.
/// Throws NotSatisfying.
Allocation sat_assignment_to_orientation(const ReductionBundle& bundle,
                                         const std::vector<bool>& assignment);

/// EFX-plus-minus orientation -> satisfying assignment (x_i is true iff the
/// variable edge went to a_i^T). Throws NotEfx when the checker fails.
std::vector<bool> orientation_to_sat_assignment(const ReductionBundle& bundle,
                                                const Allocation& orientation);

/// The 4-vertex triangle-plus-pendant gadget, all edges -1/-1: in every
/// EFX-plus-minus orientation the pendant agent (vertex 0) receives the
/// pendant edge (edge 0).
Instance build_chore_anchor_gadget();

/// Compiles an AND-free circuit into the gadget graph: a priceless edge per
/// input, an OR/NOT gadget per gate, and the TRUE terminator on the output
/// edge. A WIRE gadget duplicates a wire only where one gate reads the same
/// wire on both inputs (a shared edge there would break simple-graph-ness).
/// Values are integers with eps1 = 2, eps2 = 1 and P exceeding the sum of
/// all small values. Throws ContainsAnd.
ReductionBundle build_circuit_allocation_instance(const Circuit& circuit);

/// Assignment with True output -> allocation passing the EFX-00 checker
/// (per-gadget completions). Throws OutputFalse.
Allocation circuit_assignment_to_allocation(const ReductionBundle& bundle,
                                            const std::vector<bool>& input_values);

/// EFX-00 allocation -> input assignment making the output True.
/// Throws NotEfx.
std::vector<bool> allocation_to_circuit_assignment(const ReductionBundle& bundle,
                                                   const Allocation& allocation);

/// Definition-level pricelessness test (additive valuations): the edge value
/// strictly exceeds the sum of absolute values of the agent's other incident
/// edges.
bool is_priceless(const Instance& instance, AgentId agent, EdgeId edge);

/// Preconditions that force every fair allocation to be an orientation:
/// every edge a good for both endpoints, every agent with exactly one
/// priceless incident edge, and each such edge priceless to both endpoints.
bool priceless_preconditions_hold(const Instance& instance);

// Serialization of bundles (the `--map` file used by certify).
nlohmann::json bundle_map_to_json(const ReductionBundle& bundle);
ReductionBundle bundle_map_from_json(const nlohmann::json& j, Instance instance);

}  // namespace edgefair
