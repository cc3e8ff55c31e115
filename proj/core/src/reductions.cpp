#include "edgefair/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "edgefair/errors.hpp"
#include "edgefair/fairness.hpp"

namespace edgefair {

using nlohmann::json;

// ---------------------------------------------------------------------------
// (3,B2)-SAT parsing and instance construction
// ---------------------------------------------------------------------------

bool Sat3B2Formula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      int var = std::abs(lit) - 1;
      bool val = assignment[static_cast<size_t>(var)];
      sat = sat || (lit > 0 ? val : !val);
    }
    if (!sat) return false;
  }
  return true;
}

Sat3B2Formula parse_sat3b2(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int nvars = -1, nclauses = -1;
  std::vector<int> literals;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (nvars != -1) fail(Errc::ParseError, "duplicate problem line");
      std::istringstream header(line);
      std::string p, cnf;
      header >> p >> cnf >> nvars >> nclauses;
      if (p != "p" || cnf != "cnf" || header.fail() || nvars < 0 || nclauses < 0)
        fail(Errc::ParseError, "malformed problem line: " + line);
      continue;
    }
    std::istringstream body(line);
    int lit;
    while (body >> lit) literals.push_back(lit);
    std::string junk;
    if (body.clear(), body >> junk) fail(Errc::ParseError, "non-integer token: " + junk);
  }
  if (nvars == -1) fail(Errc::ParseError, "missing 'p cnf' line");

  Sat3B2Formula f;
  f.num_vars = nvars;
  std::vector<int> clause;
  for (int lit : literals) {
    if (lit == 0) {
      if (clause.size() != 3)
        fail(Errc::NotThreeDistinctLiterals,
             "clause has " + std::to_string(clause.size()) + " literals");
      std::set<int> distinct(clause.begin(), clause.end());
      if (distinct.size() != 3) fail(Errc::NotThreeDistinctLiterals, "repeated literal in clause");
      f.clauses.push_back({clause[0], clause[1], clause[2]});
      clause.clear();
      continue;
    }
    if (std::abs(lit) < 1 || std::abs(lit) > nvars)
      fail(Errc::ParseError, "literal out of range: " + std::to_string(lit));
    clause.push_back(lit);
  }
  if (!clause.empty()) fail(Errc::ParseError, "unterminated clause");
  if (static_cast<int>(f.clauses.size()) != nclauses)
    fail(Errc::ParseError, "clause count does not match header");

  std::vector<int> pos(static_cast<size_t>(nvars), 0), neg(static_cast<size_t>(nvars), 0);
  for (const auto& c : f.clauses) {
    for (int lit : c) (lit > 0 ? pos : neg)[static_cast<size_t>(std::abs(lit)) - 1]++;
  }
  for (int v = 0; v < nvars; ++v) {
    if (pos[static_cast<size_t>(v)] != 2 || neg[static_cast<size_t>(v)] != 2)
      fail(Errc::OccurrenceCountViolated,
           "variable x" + std::to_string(v + 1) + " occurs " +
               std::to_string(pos[static_cast<size_t>(v)]) + "+/" +
               std::to_string(neg[static_cast<size_t>(v)]) + "-");
  }
  return f;
}

ReductionBundle build_sat_orientation_instance(const Sat3B2Formula& formula) {
  const int nv = formula.num_vars;
  const int nc = static_cast<int>(formula.clauses.size());
  const int n = 2 * nv + nc + 3;
  const AgentId delta1 = 2 * nv + nc, delta2 = delta1 + 1, delta3 = delta1 + 2;

  std::vector<std::pair<AgentId, AgentId>> endpoints;
  std::vector<ValueEntry> values;
  std::map<EdgeId, RoleInfo> roles;
  auto add_edge = [&](AgentId u, AgentId v, long long val, RoleInfo info) {
    EdgeId id = static_cast<EdgeId>(endpoints.size());
    endpoints.push_back({u, v});
    values.push_back({u, id, Value(val)});
    values.push_back({v, id, Value(val)});
    roles[id] = std::move(info);
    return id;
  };

  std::vector<EdgeId> variable_edges;
  for (int i = 0; i < nv; ++i) {
    variable_edges.push_back(
        add_edge(2 * i, 2 * i + 1, 2, {EdgeRole::Variable, i, -1, "x" + std::to_string(i + 1)}));
  }
  for (int j = 0; j < nc; ++j) {
    for (int lit : formula.clauses[static_cast<size_t>(j)]) {
      int var = std::abs(lit) - 1;
      AgentId lit_vertex = lit > 0 ? 2 * var : 2 * var + 1;
      add_edge(2 * nv + j, lit_vertex, 1,
               {EdgeRole::ClauseLiteral, j, -1, std::to_string(lit)});
    }
  }
  add_edge(delta1, delta2, -1, {EdgeRole::Triangle, -1, -1, "d1-d2"});
  add_edge(delta2, delta3, -1, {EdgeRole::Triangle, -1, -1, "d2-d3"});
  add_edge(delta1, delta3, -1, {EdgeRole::Triangle, -1, -1, "d1-d3"});
  for (int i = 0; i < nv; ++i) {
    add_edge(2 * i, delta1, -1, {EdgeRole::Penalty, 2 * i, -1, "T" + std::to_string(i + 1)});
    add_edge(2 * i + 1, delta1, -1, {EdgeRole::Penalty, 2 * i + 1, -1, "F" + std::to_string(i + 1)});
  }
  for (int j = 0; j < nc; ++j) {
    add_edge(2 * nv + j, delta1, -1, {EdgeRole::Penalty, 2 * nv + j, -1, "C" + std::to_string(j + 1)});
  }

  ReductionBundle bundle{build_instance(n, endpoints, values)};
  bundle.edge_roles = std::move(roles);
  bundle.formula = formula;
  bundle.variable_edges = std::move(variable_edges);
  for (int i = 0; i < nv; ++i) {
    bundle.true_vertex.push_back(2 * i);
    bundle.false_vertex.push_back(2 * i + 1);
  }
  for (int j = 0; j < nc; ++j) bundle.clause_vertex.push_back(2 * nv + j);
  bundle.anchor_vertex = {delta1, delta2, delta3};
  return bundle;
}

Allocation sat_assignment_to_orientation(const ReductionBundle& bundle,
                                         const std::vector<bool>& assignment) {
  if (!bundle.formula) fail(Errc::InvalidArgument, "bundle is not a SAT reduction");
  const Sat3B2Formula& f = *bundle.formula;
  if (static_cast<int>(assignment.size()) != f.num_vars)
    fail(Errc::InvalidArgument, "assignment arity mismatch");
  if (!f.satisfied_by(assignment))
    fail(Errc::NotSatisfying, "assignment does not satisfy the formula");

  const Instance& inst = bundle.instance;
  Allocation out(inst.edge_count());
  AgentId d1 = bundle.anchor_vertex[0], d2 = bundle.anchor_vertex[1], d3 = bundle.anchor_vertex[2];

  for (const auto& [edge, info] : bundle.edge_roles) {
    const Edge& e = inst.edge(edge);
    switch (info.role) {
      case EdgeRole::Variable:
        out.assign(edge, assignment[static_cast<size_t>(info.index)]
                             ? bundle.true_vertex[static_cast<size_t>(info.index)]
                             : bundle.false_vertex[static_cast<size_t>(info.index)]);
        break;
      case EdgeRole::ClauseLiteral: {
        int lit = std::stoi(info.label);
        int var = std::abs(lit) - 1;
        bool lit_true = lit > 0 ? assignment[static_cast<size_t>(var)]
                                : !assignment[static_cast<size_t>(var)];
        // True literals hand their edges to the clause vertex; false ones
        // keep them at the literal vertex.
        AgentId clause = bundle.clause_vertex[static_cast<size_t>(info.index)];
        out.assign(edge, lit_true ? clause : e.other(clause));
        break;
      }
      case EdgeRole::Triangle:
        // Oriented cyclically: d1-d2 -> d1, d2-d3 -> d2, d1-d3 -> d3.
        if (e.incident(d1) && e.incident(d2)) out.assign(edge, d1);
        else if (e.incident(d2) && e.incident(d3)) out.assign(edge, d2);
        else out.assign(edge, d3);
        break;
      case EdgeRole::Penalty:
        out.assign(edge, e.other(d1));
        break;
      default:
        fail(Errc::InvalidArgument, "unexpected edge role in SAT bundle");
    }
  }

  if (!passes(inst, out, Notion::EfxPlusMinus))
    throw std::logic_error("satisfying-assignment orientation failed the checker");
  return out;
}

std::vector<bool> orientation_to_sat_assignment(const ReductionBundle& bundle,
                                                const Allocation& orientation) {
  if (!bundle.formula) fail(Errc::InvalidArgument, "bundle is not a SAT reduction");
  if (!passes(bundle.instance, orientation, Notion::EfxPlusMinus))
    fail(Errc::NotEfx, "orientation does not satisfy the target notion");

  std::vector<bool> assignment;
  for (size_t i = 0; i < bundle.variable_edges.size(); ++i) {
    assignment.push_back(orientation.owner(bundle.variable_edges[i]) ==
                         std::optional<AgentId>(bundle.true_vertex[i]));
  }
  if (!bundle.formula->satisfied_by(assignment))
    throw std::logic_error("fair orientation decoded to a non-satisfying assignment");
  return assignment;
}

Instance build_chore_anchor_gadget() {
  std::vector<std::pair<AgentId, AgentId>> endpoints{{0, 1}, {1, 2}, {2, 3}, {1, 3}};
  std::vector<ValueEntry> values;
  for (EdgeId e = 0; e < 4; ++e) {
    values.push_back({endpoints[static_cast<size_t>(e)].first, e, Value(-1)});
    values.push_back({endpoints[static_cast<size_t>(e)].second, e, Value(-1)});
  }
  return build_instance(4, endpoints, values);
}

// ---------------------------------------------------------------------------
// Circuit parsing and AND elimination
// ---------------------------------------------------------------------------

bool Circuit::has_and() const {
  return std::any_of(gates.begin(), gates.end(),
                     [](const Gate& g) { return g.op == GateOp::And; });
}

bool Circuit::evaluate(const std::vector<bool>& input_values) const {
  if (input_values.size() != inputs.size()) fail(Errc::InvalidArgument, "input arity mismatch");
  std::map<std::string, bool> wires;
  for (size_t i = 0; i < inputs.size(); ++i) wires[inputs[i]] = input_values[i];
  for (const Gate& g : gates) {
    bool a = wires.at(g.in0);
    switch (g.op) {
      case GateOp::Not: wires[g.name] = !a; break;
      case GateOp::And: wires[g.name] = a && wires.at(g.in1); break;
      case GateOp::Or: wires[g.name] = a || wires.at(g.in1); break;
    }
  }
  return wires.at(output);
}

namespace {

// Kahn-style ordering of gates; reports undriven operands and cycles.
std::vector<Gate> toposort_gates(const std::vector<std::string>& inputs,
                                 std::vector<Gate> gates) {
  std::set<std::string> ready(inputs.begin(), inputs.end());
  std::vector<Gate> ordered;
  std::vector<bool> done(gates.size(), false);
  std::set<std::string> defined = ready;
  for (const Gate& g : gates) defined.insert(g.name);

  for (const Gate& g : gates) {
    for (const std::string& in : {g.in0, g.in1}) {
      if (!in.empty() && !defined.count(in))
        fail(Errc::UndrivenWire, "wire '" + in + "' is never driven");
    }
  }

  bool progress = true;
  while (ordered.size() < gates.size() && progress) {
    progress = false;
    for (size_t k = 0; k < gates.size(); ++k) {
      if (done[k]) continue;
      const Gate& g = gates[k];
      bool ok = ready.count(g.in0) && (g.in1.empty() || ready.count(g.in1));
      if (ok) {
        ordered.push_back(g);
        ready.insert(g.name);
        done[k] = true;
        progress = true;
      }
    }
  }
  if (ordered.size() < gates.size())
    fail(Errc::CycleDetected, "circuit contains a combinational cycle");
  return ordered;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  std::set<std::string> drivers;
  bool have_output = false;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "input") {
      std::string name;
      if (!(ls >> name)) fail(Errc::ParseError, "input needs a wire name");
      if (!drivers.insert(name).second) fail(Errc::MultipleDrivers, "wire '" + name + "'");
      c.inputs.push_back(name);
    } else if (kw == "gate") {
      std::string name, eq, op, a, b;
      if (!(ls >> name >> eq >> op >> a) || eq != "=")
        fail(Errc::ParseError, "malformed gate line: " + line);
      Gate g;
      g.name = name;
      g.in0 = a;
      if (op == "NOT") {
        g.op = GateOp::Not;
      } else if (op == "AND" || op == "OR") {
        if (!(ls >> b)) fail(Errc::ParseError, op + " needs two operands: " + line);
        g.op = op == "AND" ? GateOp::And : GateOp::Or;
        g.in1 = b;
      } else {
        fail(Errc::ParseError, "unknown gate op: " + op);
      }
      if (!drivers.insert(name).second) fail(Errc::MultipleDrivers, "wire '" + name + "'");
      c.gates.push_back(g);
    } else if (kw == "output") {
      std::string name;
      if (!(ls >> name)) fail(Errc::ParseError, "output needs a wire name");
      if (have_output) fail(Errc::ParseError, "multiple output lines");
      have_output = true;
      c.output = name;
    } else {
      fail(Errc::ParseError, "unknown keyword: " + kw);
    }
  }
  if (!have_output) fail(Errc::ParseError, "missing output line");
  if (!drivers.count(c.output)) fail(Errc::UndrivenWire, "output wire '" + c.output + "'");
  c.gates = toposort_gates(c.inputs, std::move(c.gates));
  return c;
}

Circuit eliminate_and(const Circuit& circuit) {
  std::set<std::string> taken(circuit.inputs.begin(), circuit.inputs.end());
  for (const Gate& g : circuit.gates) taken.insert(g.name);
  auto fresh = [&](std::string base) {
    while (taken.count(base)) base += "_";
    taken.insert(base);
    return base;
  };

  Circuit out;
  out.inputs = circuit.inputs;
  out.output = circuit.output;
  for (const Gate& g : circuit.gates) {
    if (g.op != GateOp::And) {
      out.gates.push_back(g);
      continue;
    }
    // AND(a, b) = NOT(OR(NOT a, NOT b))
    std::string na = fresh(g.name + "__na");
    std::string nb = fresh(g.name + "__nb");
    std::string orw = fresh(g.name + "__or");
    out.gates.push_back({na, GateOp::Not, g.in0, ""});
    out.gates.push_back({nb, GateOp::Not, g.in1, ""});
    out.gates.push_back({orw, GateOp::Or, na, nb});
    out.gates.push_back({g.name, GateOp::Not, orw, ""});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Circuit-to-instance compiler
// ---------------------------------------------------------------------------

namespace {

// Builder collecting vertices/edges before values are final: P depends on
// the total epsilon mass, so edges carry a value *class* until the end.
struct GadgetGraphBuilder {
  enum class ValueClass { P, Eps1, Eps2 };

  std::vector<std::pair<AgentId, AgentId>> endpoints;
  std::vector<ValueClass> klass;
  std::map<EdgeId, RoleInfo> roles;
  int next_vertex = 0;

  AgentId vertex() { return next_vertex++; }

  EdgeId edge(AgentId u, AgentId v, ValueClass k, RoleInfo info) {
    EdgeId id = static_cast<EdgeId>(endpoints.size());
    endpoints.push_back({u, v});
    klass.push_back(k);
    roles[id] = std::move(info);
    return id;
  }
};

struct WireEnds {
  EdgeId edge;
  AgentId t;  // endpoint encoding True
  AgentId f;
};

}  // namespace

ReductionBundle build_circuit_allocation_instance(const Circuit& circuit) {
  if (circuit.has_and()) fail(Errc::ContainsAnd, "eliminate AND gates before compiling");

  GadgetGraphBuilder gb;
  std::map<std::string, WireEnds> wires;
  std::vector<GadgetInfo> gadgets;
  const long long eps1 = 2, eps2 = 1;

  auto gadget_small = [&](int gadget, const std::string& label, AgentId u, AgentId v,
                          GadgetGraphBuilder::ValueClass k) {
    return gb.edge(u, v, k, {EdgeRole::GadgetSmall, -1, gadget, label});
  };
  auto priceless_edge = [&](int gadget, const std::string& label, AgentId u, AgentId v) {
    return gb.edge(u, v, GadgetGraphBuilder::ValueClass::P,
                   {EdgeRole::Priceless, -1, gadget, label});
  };

  for (const std::string& name : circuit.inputs) {
    AgentId t = gb.vertex(), f = gb.vertex();
    wires[name] = {priceless_edge(-1, "wire:" + name, t, f), t, f};
  }

  // A WIRE gadget copying `in`; needed when one gate reads a wire twice.
  auto make_wire_copy = [&](const std::string& in, const std::string& out_name) {
    const WireEnds& w = wires.at(in);
    int gid = static_cast<int>(gadgets.size());
    AgentId u2 = gb.vertex(), u2p = gb.vertex();
    GadgetInfo info;
    info.kind = GadgetKind::Wire;
    info.in_wires = {in};
    info.out_wire = out_name;
    info.verts = {{"a1", w.t}, {"a1'", w.f}, {"a2", u2}, {"a2'", u2p}};
    info.edges["a1-a2'"] = gadget_small(gid, "a1-a2'", w.t, u2p, GadgetGraphBuilder::ValueClass::Eps1);
    info.edges["a1'-a2"] = gadget_small(gid, "a1'-a2", w.f, u2, GadgetGraphBuilder::ValueClass::Eps1);
    EdgeId out_edge = priceless_edge(gid, "wire:" + out_name, u2, u2p);
    info.edges["a2-a2'"] = out_edge;
    gadgets.push_back(std::move(info));
    wires[out_name] = {out_edge, u2, u2p};
  };

  for (const Gate& g : circuit.gates) {
    int gid = static_cast<int>(gadgets.size());
    if (g.op == GateOp::Not) {
      const WireEnds& in = wires.at(g.in0);
      AgentId u2 = gb.vertex(), u2p = gb.vertex();
      GadgetInfo info;
      info.kind = GadgetKind::Not;
      info.in_wires = {g.in0};
      info.out_wire = g.name;
      info.verts = {{"a1", in.t}, {"a1'", in.f}, {"a2", u2}, {"a2'", u2p}};
      info.edges["a1-a2"] = gadget_small(gid, "a1-a2", in.t, u2, GadgetGraphBuilder::ValueClass::Eps1);
      info.edges["a1'-a2'"] =
          gadget_small(gid, "a1'-a2'", in.f, u2p, GadgetGraphBuilder::ValueClass::Eps1);
      EdgeId out_edge = priceless_edge(gid, "wire:" + g.name, u2, u2p);
      info.edges["a2-a2'"] = out_edge;
      gadgets.push_back(std::move(info));
      wires[g.name] = {out_edge, u2, u2p};
      continue;
    }
    // OR gate; duplicate the wire first when both operands coincide.
    std::string in0 = g.in0, in1 = g.in1;
    if (in0 == in1) {
      std::string copy = g.name + "__dup";
      while (wires.count(copy)) copy += "_";
      make_wire_copy(in1, copy);
      in1 = copy;
      gid = static_cast<int>(gadgets.size());
    }
    const WireEnds in_a = wires.at(in0);
    const WireEnds in_b = wires.at(in1);
    GadgetInfo info;
    info.kind = GadgetKind::Or;
    info.in_wires = {in0, in1};
    info.out_wire = g.name;
    AgentId a3 = gb.vertex(), a3p = gb.vertex();
    AgentId b1 = gb.vertex(), b1p = gb.vertex();
    AgentId b2 = gb.vertex(), b2p = gb.vertex();
    AgentId b3 = gb.vertex(), b3p = gb.vertex();
    info.verts = {{"a1", in_a.t}, {"a1'", in_a.f}, {"a2", in_b.t}, {"a2'", in_b.f},
                  {"a3", a3},     {"a3'", a3p},    {"b1", b1},     {"b1'", b1p},
                  {"b2", b2},     {"b2'", b2p},    {"b3", b3},     {"b3'", b3p}};
    info.edges["b1-b1'"] = priceless_edge(gid, "b1-b1'", b1, b1p);
    info.edges["b2-b2'"] = priceless_edge(gid, "b2-b2'", b2, b2p);
    info.edges["b3-b3'"] = priceless_edge(gid, "b3-b3'", b3, b3p);
    info.edges["a1'-b1'"] = gadget_small(gid, "a1'-b1'", in_a.f, b1p, GadgetGraphBuilder::ValueClass::Eps2);
    info.edges["b1'-b2'"] = gadget_small(gid, "b1'-b2'", b1p, b2p, GadgetGraphBuilder::ValueClass::Eps1);
    info.edges["b2'-b3'"] = gadget_small(gid, "b2'-b3'", b2p, b3p, GadgetGraphBuilder::ValueClass::Eps1);
    info.edges["b3'-a2'"] = gadget_small(gid, "b3'-a2'", b3p, in_b.f, GadgetGraphBuilder::ValueClass::Eps2);
    info.edges["b2'-a3"] = gadget_small(gid, "b2'-a3", b2p, a3, GadgetGraphBuilder::ValueClass::Eps2);
    info.edges["a1-a3'"] = gadget_small(gid, "a1-a3'", in_a.t, a3p, GadgetGraphBuilder::ValueClass::Eps1);
    info.edges["a2-a3'"] = gadget_small(gid, "a2-a3'", in_b.t, a3p, GadgetGraphBuilder::ValueClass::Eps1);
    EdgeId out_edge = priceless_edge(gid, "wire:" + g.name, a3, a3p);
    info.edges["a3-a3'"] = out_edge;
    gadgets.push_back(std::move(info));
    wires[g.name] = {out_edge, a3, a3p};
  }

  // TRUE terminator on the output wire.
  {
    const WireEnds& out_w = wires.at(circuit.output);
    int gid = static_cast<int>(gadgets.size());
    AgentId v1 = gb.vertex(), v1p = gb.vertex();
    GadgetInfo info;
    info.kind = GadgetKind::True;
    info.in_wires = {circuit.output};
    info.verts = {{"a1", v1}, {"a1'", v1p}, {"a2", out_w.t}, {"a2'", out_w.f}};
    info.edges["a1-a1'"] = priceless_edge(gid, "a1-a1'", v1, v1p);
    info.edges["a1-a2'"] = gadget_small(gid, "a1-a2'", v1, out_w.f, GadgetGraphBuilder::ValueClass::Eps1);
    info.edges["a1'-a2'"] =
        gadget_small(gid, "a1'-a2'", v1p, out_w.f, GadgetGraphBuilder::ValueClass::Eps1);
    info.edges["a1'-a2"] = gadget_small(gid, "a1'-a2", v1p, out_w.t, GadgetGraphBuilder::ValueClass::Eps1);
    info.edges["a2-a2'"] = out_w.edge;
    gadgets.push_back(std::move(info));
  }

  // Priceless value: strictly dominate the total epsilon mass.
  long long small_total = 0;
  for (size_t e = 0; e < gb.endpoints.size(); ++e) {
    if (gb.klass[e] == GadgetGraphBuilder::ValueClass::Eps1) small_total += 2 * eps1;
    if (gb.klass[e] == GadgetGraphBuilder::ValueClass::Eps2) small_total += 2 * eps2;
  }
  const long long P = small_total + 1;

  std::vector<ValueEntry> values;
  for (size_t e = 0; e < gb.endpoints.size(); ++e) {
    long long v = gb.klass[e] == GadgetGraphBuilder::ValueClass::P
                      ? P
                      : (gb.klass[e] == GadgetGraphBuilder::ValueClass::Eps1 ? eps1 : eps2);
    values.push_back({gb.endpoints[e].first, static_cast<EdgeId>(e), Value(v)});
    values.push_back({gb.endpoints[e].second, static_cast<EdgeId>(e), Value(v)});
  }

  ReductionBundle bundle{build_instance(gb.next_vertex, gb.endpoints, values)};
  bundle.edge_roles = std::move(gb.roles);
  bundle.circuit = circuit;
  bundle.input_names = circuit.inputs;
  for (const auto& [name, w] : wires) {
    bundle.wire_edge[name] = w.edge;
    bundle.wire_true_end[name] = w.t;
  }
  bundle.gadgets = std::move(gadgets);
  bundle.output_edge = wires.at(circuit.output).edge;
  bundle.priceless = Value(P);
  bundle.eps1 = Value(eps1);
  bundle.eps2 = Value(eps2);

  if (!priceless_preconditions_hold(bundle.instance))
    throw std::logic_error("compiled gadget graph violates the priceless preconditions");
  return bundle;
}

// ---------------------------------------------------------------------------
// Circuit certificate translation
// ---------------------------------------------------------------------------

namespace {

// Wire values of every named wire under an input assignment.
std::map<std::string, bool> wire_values(const Circuit& c, const std::vector<bool>& inputs) {
  if (inputs.size() != c.inputs.size()) fail(Errc::InvalidArgument, "input arity mismatch");
  std::map<std::string, bool> w;
  for (size_t i = 0; i < c.inputs.size(); ++i) w[c.inputs[i]] = inputs[i];
  for (const Gate& g : c.gates) {
    bool a = w.at(g.in0);
    w[g.name] = g.op == GateOp::Not ? !a : (g.op == GateOp::And ? (a && w.at(g.in1)) : (a || w.at(g.in1)));
  }
  return w;
}

}  // namespace

Allocation circuit_assignment_to_allocation(const ReductionBundle& bundle,
                                            const std::vector<bool>& input_values) {
  if (!bundle.circuit) fail(Errc::InvalidArgument, "bundle is not a circuit reduction");
  const Circuit& c = *bundle.circuit;
  std::map<std::string, bool> w = wire_values(c, input_values);
  if (!w.at(c.output)) fail(Errc::OutputFalse, "assignment does not make the output true");

  // Wire-copy gadgets introduced by the compiler are not in the circuit;
  // their value equals their source wire's.
  for (const GadgetInfo& g : bundle.gadgets) {
    if (g.kind == GadgetKind::Wire && !w.count(g.out_wire)) w[g.out_wire] = w.at(g.in_wires[0]);
  }

  const Instance& inst = bundle.instance;
  Allocation out(inst.edge_count());

  // Wire edges encode their value by orientation.
  for (const auto& [name, edge] : bundle.wire_edge) {
    AgentId t = bundle.wire_true_end.at(name);
    out.assign(edge, w.at(name) ? t : inst.edge(edge).other(t));
  }

  // Per-gadget completions.
  for (const GadgetInfo& g : bundle.gadgets) {
    auto E = [&](const char* label) { return g.edges.at(label); };
    auto V = [&](const char* label) { return g.verts.at(label); };
    switch (g.kind) {
      case GadgetKind::Not: {
        bool in = w.at(g.in_wires[0]);
        if (in) {  // clockwise
          out.assign(E("a1-a2"), V("a2"));
          out.assign(E("a1'-a2'"), V("a1'"));
        } else {  // counterclockwise
          out.assign(E("a1'-a2'"), V("a2'"));
          out.assign(E("a1-a2"), V("a1"));
        }
        break;
      }
      case GadgetKind::Wire: {
        bool in = w.at(g.in_wires[0]);
        if (in) {
          out.assign(E("a1-a2'"), V("a2'"));
          out.assign(E("a1'-a2"), V("a1'"));
        } else {
          out.assign(E("a1'-a2"), V("a2"));
          out.assign(E("a1-a2'"), V("a1"));
        }
        break;
      }
      case GadgetKind::Or: {
        bool x = w.at(g.in_wires[0]), y = w.at(g.in_wires[1]);
        if (x && y) {
          out.assign(E("b1-b1'"), V("b1"));
          out.assign(E("b2-b2'"), V("b2"));
          out.assign(E("b3-b3'"), V("b3"));
          out.assign(E("a1'-b1'"), V("a1'"));
          out.assign(E("b1'-b2'"), V("b1'"));
          out.assign(E("b2'-b3'"), V("b3'"));
          out.assign(E("b3'-a2'"), V("a2'"));
          out.assign(E("b2'-a3"), V("b2'"));
          out.assign(E("a1-a3'"), V("a3'"));
          out.assign(E("a2-a3'"), V("a3'"));
        } else if (x && !y) {
          out.assign(E("b1-b1'"), V("b1'"));
          out.assign(E("b2-b2'"), V("b2"));
          out.assign(E("b3-b3'"), V("b3"));
          out.assign(E("a1'-b1'"), V("a1'"));
          out.assign(E("b1'-b2'"), V("b2'"));
          out.assign(E("b2'-b3'"), V("b3'"));
          out.assign(E("b3'-a2'"), V("b3'"));
          out.assign(E("b2'-a3"), V("b2'"));
          out.assign(E("a1-a3'"), V("a3'"));
          out.assign(E("a2-a3'"), V("a2"));
        } else if (!x && y) {
          out.assign(E("b1-b1'"), V("b1"));
          out.assign(E("b2-b2'"), V("b2"));
          out.assign(E("b3-b3'"), V("b3'"));
          out.assign(E("a1'-b1'"), V("b1'"));
          out.assign(E("b1'-b2'"), V("b1'"));
          out.assign(E("b2'-b3'"), V("b2'"));
          out.assign(E("b3'-a2'"), V("a2'"));
          out.assign(E("b2'-a3"), V("b2'"));
          out.assign(E("a1-a3'"), V("a1"));
          out.assign(E("a2-a3'"), V("a3'"));
        } else {
          out.assign(E("b1-b1'"), V("b1"));
          out.assign(E("b2-b2'"), V("b2'"));
          out.assign(E("b3-b3'"), V("b3"));
          out.assign(E("a1'-b1'"), V("b1'"));
          out.assign(E("b1'-b2'"), V("b1'"));
          out.assign(E("b2'-b3'"), V("b3'"));
          out.assign(E("b3'-a2'"), V("b3'"));
          out.assign(E("b2'-a3"), V("a3"));
          out.assign(E("a1-a3'"), V("a1"));
          out.assign(E("a2-a3'"), V("a2"));
        }
        break;
      }
      case GadgetKind::True: {
        out.assign(E("a1-a1'"), V("a1"));
        out.assign(E("a1'-a2"), V("a1'"));
        out.assign(E("a1'-a2'"), V("a1'"));
        out.assign(E("a1-a2'"), V("a2'"));
        break;
      }
    }
  }

  if (!out.is_total()) throw std::logic_error("gadget completion left edges unallocated");
  if (!passes(inst, out, Notion::Efx00))
    throw std::logic_error("gadget completion failed the EFX-00 checker");
  return out;
}

std::vector<bool> allocation_to_circuit_assignment(const ReductionBundle& bundle,
                                                   const Allocation& allocation) {
  if (!bundle.circuit) fail(Errc::InvalidArgument, "bundle is not a circuit reduction");
  if (!passes(bundle.instance, allocation, Notion::Efx00))
    fail(Errc::NotEfx, "allocation does not satisfy the target notion");

  std::vector<bool> inputs;
  for (const std::string& name : bundle.input_names) {
    EdgeId e = bundle.wire_edge.at(name);
    auto owner = allocation.owner(e);
    if (!owner || !bundle.instance.edge(e).incident(*owner))
      throw std::logic_error("fair allocation is not an orientation on a priceless graph");
    inputs.push_back(*owner == bundle.wire_true_end.at(name));
  }
  if (!bundle.circuit->evaluate(inputs))
    throw std::logic_error("fair allocation decoded to a falsifying assignment");
  return inputs;
}

// ---------------------------------------------------------------------------
// Pricelessness checks
// ---------------------------------------------------------------------------

bool is_priceless(const Instance& instance, AgentId agent, EdgeId edge) {
  const auto* additive = dynamic_cast<const AdditiveValuation*>(&instance.valuation());
  if (!additive) fail(Errc::InvalidArgument, "pricelessness test needs an additive valuation");
  if (!instance.edge(edge).incident(agent)) return false;
  Value own = additive->item_value(agent, edge);
  Value others;
  for (EdgeId e : instance.incident(agent)) {
    if (e == edge) continue;
    Value v = additive->item_value(agent, e);
    others += v.is_negative() ? -v : v;
  }
  return own > others;
}

bool priceless_preconditions_hold(const Instance& instance) {
  for (const Edge& e : instance.edges()) {
    if (instance.sign(e.u, e.id) != SignClass::Good ||
        instance.sign(e.v, e.id) != SignClass::Good)
      return false;
    if (is_priceless(instance, e.u, e.id) != is_priceless(instance, e.v, e.id)) return false;
  }
  for (AgentId a = 0; a < instance.agent_count(); ++a) {
    int count = 0;
    for (EdgeId e : instance.incident(a)) {
      if (is_priceless(instance, a, e)) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Map-file serialization
// ---------------------------------------------------------------------------

namespace {

const char* role_name(EdgeRole r) {
  switch (r) {
    case EdgeRole::Variable: return "variable";
    case EdgeRole::ClauseLiteral: return "clause_literal";
    case EdgeRole::Triangle: return "triangle";
    case EdgeRole::Penalty: return "penalty";
    case EdgeRole::Priceless: return "priceless";
    case EdgeRole::GadgetSmall: return "gadget_small";
  }
  return "?";
}

EdgeRole role_from_name(const std::string& s) {
  if (s == "variable") return EdgeRole::Variable;
  if (s == "clause_literal") return EdgeRole::ClauseLiteral;
  if (s == "triangle") return EdgeRole::Triangle;
  if (s == "penalty") return EdgeRole::Penalty;
  if (s == "priceless") return EdgeRole::Priceless;
  if (s == "gadget_small") return EdgeRole::GadgetSmall;
  fail(Errc::ParseError, "unknown edge role: " + s);
}

const char* gadget_kind_name(GadgetKind k) {
  switch (k) {
    case GadgetKind::Not: return "NOT";
    case GadgetKind::Wire: return "WIRE";
    case GadgetKind::Or: return "OR";
    case GadgetKind::True: return "TRUE";
  }
  return "?";
}

GadgetKind gadget_kind_from_name(const std::string& s) {
  if (s == "NOT") return GadgetKind::Not;
  if (s == "WIRE") return GadgetKind::Wire;
  if (s == "OR") return GadgetKind::Or;
  if (s == "TRUE") return GadgetKind::True;
  fail(Errc::ParseError, "unknown gadget kind: " + s);
}

const char* gate_op_name(GateOp op) {
  switch (op) {
    case GateOp::And: return "AND";
    case GateOp::Or: return "OR";
    case GateOp::Not: return "NOT";
  }
  return "?";
}

}  // namespace

json bundle_map_to_json(const ReductionBundle& bundle) {
  json out;
  out["kind"] = bundle.formula ? "sat3b2" : "circuit";

  json roles = json::array();
  for (const auto& [edge, info] : bundle.edge_roles) {
    roles.push_back({{"edge", edge},
                     {"role", role_name(info.role)},
                     {"index", info.index},
                     {"gadget", info.gadget},
                     {"label", info.label}});
  }
  out["edge_roles"] = roles;

  if (bundle.formula) {
    json clauses = json::array();
    for (const auto& c : bundle.formula->clauses) clauses.push_back({c[0], c[1], c[2]});
    out["formula"] = {{"vars", bundle.formula->num_vars}, {"clauses", clauses}};
    out["variable_edges"] = bundle.variable_edges;
    out["true_vertex"] = bundle.true_vertex;
    out["false_vertex"] = bundle.false_vertex;
    out["clause_vertex"] = bundle.clause_vertex;
    out["anchor_vertex"] = bundle.anchor_vertex;
  } else {
    json gates = json::array();
    for (const Gate& g : bundle.circuit->gates) {
      gates.push_back({{"name", g.name}, {"op", gate_op_name(g.op)}, {"in0", g.in0}, {"in1", g.in1}});
    }
    out["circuit"] = {{"inputs", bundle.circuit->inputs},
                      {"gates", gates},
                      {"output", bundle.circuit->output}};
    out["input_names"] = bundle.input_names;
    out["wire_edge"] = bundle.wire_edge;
    out["wire_true_end"] = bundle.wire_true_end;
    out["output_edge"] = bundle.output_edge;
    out["params"] = {{"priceless", bundle.priceless.num()},
                     {"eps1", bundle.eps1.num()},
                     {"eps2", bundle.eps2.num()}};
    json gadgets = json::array();
    for (const GadgetInfo& g : bundle.gadgets) {
      gadgets.push_back({{"kind", gadget_kind_name(g.kind)},
                         {"verts", g.verts},
                         {"edges", g.edges},
                         {"in_wires", g.in_wires},
                         {"out_wire", g.out_wire}});
    }
    out["gadgets"] = gadgets;
  }
  return out;
}

ReductionBundle bundle_map_from_json(const json& j, Instance instance) {
  ReductionBundle bundle{std::move(instance)};
  std::string kind = j.at("kind").get<std::string>();
  for (const json& r : j.at("edge_roles")) {
    RoleInfo info;
    info.role = role_from_name(r.at("role").get<std::string>());
    info.index = r.at("index").get<int>();
    info.gadget = r.at("gadget").get<int>();
    info.label = r.at("label").get<std::string>();
    bundle.edge_roles[r.at("edge").get<int>()] = info;
  }
  if (kind == "sat3b2") {
    Sat3B2Formula f;
    f.num_vars = j.at("formula").at("vars").get<int>();
    for (const json& c : j.at("formula").at("clauses")) {
      f.clauses.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
    }
    bundle.formula = f;
    bundle.variable_edges = j.at("variable_edges").get<std::vector<EdgeId>>();
    bundle.true_vertex = j.at("true_vertex").get<std::vector<AgentId>>();
    bundle.false_vertex = j.at("false_vertex").get<std::vector<AgentId>>();
    bundle.clause_vertex = j.at("clause_vertex").get<std::vector<AgentId>>();
    bundle.anchor_vertex = j.at("anchor_vertex").get<std::vector<AgentId>>();
  } else if (kind == "circuit") {
    Circuit c;
    c.inputs = j.at("circuit").at("inputs").get<std::vector<std::string>>();
    c.output = j.at("circuit").at("output").get<std::string>();
    for (const json& g : j.at("circuit").at("gates")) {
      Gate gate;
      gate.name = g.at("name").get<std::string>();
      std::string op = g.at("op").get<std::string>();
      gate.op = op == "AND" ? GateOp::And : (op == "OR" ? GateOp::Or : GateOp::Not);
      gate.in0 = g.at("in0").get<std::string>();
      gate.in1 = g.at("in1").get<std::string>();
      c.gates.push_back(gate);
    }
    bundle.circuit = c;
    bundle.input_names = j.at("input_names").get<std::vector<std::string>>();
    bundle.wire_edge = j.at("wire_edge").get<std::map<std::string, EdgeId>>();
    bundle.wire_true_end = j.at("wire_true_end").get<std::map<std::string, AgentId>>();
    bundle.output_edge = j.at("output_edge").get<int>();
    bundle.priceless = Value(j.at("params").at("priceless").get<long long>());
    bundle.eps1 = Value(j.at("params").at("eps1").get<long long>());
    bundle.eps2 = Value(j.at("params").at("eps2").get<long long>());
    for (const json& g : j.at("gadgets")) {
      GadgetInfo info;
      info.kind = gadget_kind_from_name(g.at("kind").get<std::string>());
      info.verts = g.at("verts").get<std::map<std::string, AgentId>>();
      info.edges = g.at("edges").get<std::map<std::string, EdgeId>>();
      info.in_wires = g.at("in_wires").get<std::vector<std::string>>();
      info.out_wire = g.at("out_wire").get<std::string>();
      bundle.gadgets.push_back(std::move(info));
    }
  } else {
    fail(Errc::ParseError, "unknown bundle kind: " + kind);
  }
  return bundle;
}

}  // namespace edgefair
