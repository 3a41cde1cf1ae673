#include "wirelogic/weaver.h"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "wirelogic/error.h"

namespace wirelogic {

Style style_of(const PinGroup& g) noexcept {
  return std::holds_alternative<PinGroup3>(g) ? Style::ThreePin : Style::FourPin;
}

std::vector<VertexId> terminals(const PinGroup& g) {
  if (const auto* p = std::get_if<PinGroup3>(&g)) return {p->t, p->g, p->f};
  const auto& q = std::get<PinGroup4>(g);
  return {q.tp, q.tm, q.fp, q.fm};
}

const std::vector<std::string>& terminal_names(Style s) {
  static const std::vector<std::string> three{"T", "G", "F"};
  static const std::vector<std::string> four{"TP", "TM", "FP", "FM"};
  return s == Style::ThreePin ? three : four;
}

PinGroup swap_rails(const PinGroup& g) {
  if (const auto* p = std::get_if<PinGroup3>(&g)) return PinGroup3{p->f, p->g, p->t};
  const auto& q = std::get<PinGroup4>(g);
  return PinGroup4{q.fp, q.fm, q.tp, q.tm};
}

const InputBinding* StructuralCircuit::find_input(std::string_view variable) const {
  for (const auto& b : inputs) {
    if (b.variable == variable) return &b;
  }
  return nullptr;
}

PinGroup Weaver::new_group(const std::string& name) {
  const auto& roles = terminal_names(style_);
  std::vector<VertexId> ids;
  for (const auto& r : roles) ids.push_back(graph_.add_vertex(name + "." + r));
  PinGroup g = style_ == Style::ThreePin ? PinGroup{PinGroup3{ids[0], ids[1], ids[2]}}
                                         : PinGroup{PinGroup4{ids[0], ids[1], ids[2], ids[3]}};
  groups_.push_back({name, g});
  return g;
}

void Weaver::wire(std::vector<Edge>& out, VertexId u, VertexId v) {
  graph_.add_edge(u, v, EdgeKind::Undirected);
  out.push_back({u, v, EdgeKind::Undirected});
}

PinGroup Weaver::input(const std::string& variable) {
  auto it = std::find_if(inputs_.begin(), inputs_.end(),
                         [&](const InputBinding& b) { return b.variable == variable; });
  if (it == inputs_.end()) {
    inputs_.push_back({variable, {}});
    it = std::prev(inputs_.end());
  }
  PinGroup g = new_group(variable + "#" + std::to_string(it->occurrences.size() + 1));
  it->occurrences.push_back(g);
  return g;
}

GateResult Weaver::gate_not(const PinGroup& in) {
  GateResult r{new_group("NOT#" + std::to_string(++not_count_)), {}};
  if (style_ == Style::ThreePin) {
    const auto& i = std::get<PinGroup3>(in);
    const auto& o = std::get<PinGroup3>(r.out);
    wire(r.edges, i.t, o.f);
    wire(r.edges, i.g, o.g);
    wire(r.edges, i.f, o.t);
  } else {
    const auto& i = std::get<PinGroup4>(in);
    const auto& o = std::get<PinGroup4>(r.out);
    wire(r.edges, i.tp, o.fp);
    wire(r.edges, i.tm, o.fm);
    wire(r.edges, i.fp, o.tp);
    wire(r.edges, i.fm, o.tm);
  }
  return r;
}

GateResult Weaver::gate_and(const PinGroup& a, const PinGroup& b) {
  return gate_and_wired(a, b, "AND#" + std::to_string(++and_count_), false);
}

GateResult Weaver::gate_or(const PinGroup& a, const PinGroup& b) {
  return gate_and_wired(swap_rails(a), swap_rails(b),
                        "OR#" + std::to_string(++or_count_), true);
}

// Wires the AND topology over a, b and a fresh output group. With `swapped`
// the caller passed rail-swapped inputs and the output is swapped too, which
// turns the series/parallel roles upside down into an OR.
GateResult Weaver::gate_and_wired(const PinGroup& a, const PinGroup& b,
                                  const std::string& name, bool swapped) {
  PinGroup fresh = new_group(name);
  GateResult r{fresh, {}};
  PinGroup c = swapped ? swap_rails(fresh) : fresh;
  if (style_ == Style::ThreePin) {
    const auto& x = std::get<PinGroup3>(a);
    const auto& y = std::get<PinGroup3>(b);
    const auto& z = std::get<PinGroup3>(c);
    wire(r.edges, z.g, x.g);
    wire(r.edges, x.t, y.g);
    wire(r.edges, y.t, z.t);
    wire(r.edges, x.f, z.f);
    wire(r.edges, y.f, z.f);
  } else {
    const auto& x = std::get<PinGroup4>(a);
    const auto& y = std::get<PinGroup4>(b);
    const auto& z = std::get<PinGroup4>(c);
    wire(r.edges, z.tp, x.tp);
    wire(r.edges, x.tm, y.tp);
    wire(r.edges, y.tm, z.tm);
    wire(r.edges, z.fp, x.fp);
    wire(r.edges, x.fm, z.fm);
    wire(r.edges, z.fp, y.fp);
    wire(r.edges, y.fm, z.fm);
  }
  return r;
}

StructuralCircuit Weaver::finish(const PinGroup& output,
                                 const std::vector<std::string>& input_order) && {
  StructuralCircuit c;
  c.style = style_;
  c.output_group = output;
  for (const auto& v : input_order) {
    auto it = std::find_if(inputs_.begin(), inputs_.end(),
                           [&](const InputBinding& b) { return b.variable == v; });
    if (it != inputs_.end()) c.inputs.push_back(std::move(*it));
  }
  c.graph = std::move(graph_);
  c.groups = std::move(groups_);
  return c;
}

namespace {

void check_fan_out(const Expr& e, std::unordered_map<const void*, int>& uses) {
  if (e.is_var()) return;
  if (++uses[e.node_id()] > 1) {
    throw FanOutUnsupported("intermediate signal '" + to_string(e) +
                            "' would drive more than one gate; replicate it with a "
                            "clocked split instead");
  }
  if (e.kind() == Expr::Kind::Not) {
    check_fan_out(e.child(), uses);
  } else {
    check_fan_out(e.left(), uses);
    check_fan_out(e.right(), uses);
  }
}

PinGroup build(Weaver& w, const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return w.input(e.name());
    case Expr::Kind::Not:
      return w.gate_not(build(w, e.child())).out;
    case Expr::Kind::And: {
      PinGroup a = build(w, e.left());
      PinGroup b = build(w, e.right());
      return w.gate_and(a, b).out;
    }
    case Expr::Kind::Or: {
      PinGroup a = build(w, e.left());
      PinGroup b = build(w, e.right());
      return w.gate_or(a, b).out;
    }
  }
  throw std::logic_error("unknown expression kind");
}

Expr mirror_memo(const Expr& e, std::unordered_map<const void*, Expr>& memo) {
  if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
  Expr out = e;
  switch (e.kind()) {
    case Expr::Kind::Var:
      break;
    case Expr::Kind::Not:
      out = Expr::make_not(mirror_memo(e.child(), memo));
      break;
    case Expr::Kind::And:
      out = Expr::make_or(mirror_memo(e.left(), memo), mirror_memo(e.right(), memo));
      break;
    case Expr::Kind::Or:
      out = Expr::make_and(mirror_memo(e.left(), memo), mirror_memo(e.right(), memo));
      break;
  }
  memo.emplace(e.node_id(), out);
  return out;
}

}  // namespace

StructuralCircuit compile(const Netlist& n, Style style) {
  std::unordered_map<const void*, int> uses;
  check_fan_out(n.body, uses);
  Weaver w(style);
  PinGroup out = build(w, n.body);
  return std::move(w).finish(out, n.inputs);
}

Expr mirror(const Expr& e) {
  std::unordered_map<const void*, Expr> memo;
  return mirror_memo(e, memo);
}

StructuralCircuit mirror_circuit(const StructuralCircuit& c) {
  StructuralCircuit m = c;
  for (auto& b : m.inputs) {
    for (auto& g : b.occurrences) g = swap_rails(g);
  }
  m.output_group = swap_rails(m.output_group);
  for (auto& g : m.groups) g.group = swap_rails(g.group);
  return m;
}

namespace {

void write_ids(std::ostream& os, const PinGroup& g) {
  for (VertexId v : terminals(g)) os << ' ' << v;
}

PinGroup group_from_ids(Style style, const std::vector<VertexId>& ids) {
  if (style == Style::ThreePin) return PinGroup3{ids[0], ids[1], ids[2]};
  return PinGroup4{ids[0], ids[1], ids[2], ids[3]};
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw FormatError("circuit line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

void write_circuit(std::ostream& os, const StructuralCircuit& c) {
  os << "style " << (c.style == Style::ThreePin ? 3 : 4) << '\n';
  for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
    os << "v " << v << ' ' << c.graph.label(static_cast<VertexId>(v)) << '\n';
  }
  for (const Edge& e : c.graph.edges()) {
    os << "e " << e.u << ' ' << e.v << ' '
       << (e.kind == EdgeKind::Undirected ? 'u' : 'd') << '\n';
  }
  for (const auto& b : c.inputs) {
    for (std::size_t k = 0; k < b.occurrences.size(); ++k) {
      os << "in " << b.variable << ' ' << (k + 1);
      write_ids(os, b.occurrences[k]);
      os << '\n';
    }
  }
  os << "out";
  write_ids(os, c.output_group);
  os << '\n';
}

std::string to_text(const StructuralCircuit& c) {
  std::ostringstream os;
  write_circuit(os, c);
  return os.str();
}

StructuralCircuit read_circuit(std::string_view text) {
  StructuralCircuit c;
  bool have_style = false;
  bool have_out = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  const auto width = [&] { return c.style == Style::ThreePin ? 3u : 4u; };
  auto read_group = [&](std::istringstream& ls) {
    std::vector<VertexId> ids;
    long long id = 0;
    while (ls >> id) {
      if (id < 0 || static_cast<std::size_t>(id) >= c.graph.vertex_count()) {
        bad_line(line_no, "pin id " + std::to_string(id) + " is not a vertex");
      }
      ids.push_back(static_cast<VertexId>(id));
    }
    if (ids.size() != width()) bad_line(line_no, "wrong number of pin ids");
    std::vector<VertexId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      bad_line(line_no, "pin ids of a group must be distinct");
    }
    return group_from_ids(c.style, ids);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "style") {
      int s = 0;
      if (!(ls >> s) || (s != 3 && s != 4)) bad_line(line_no, "style must be 3 or 4");
      if (c.graph.vertex_count() != 0) bad_line(line_no, "style must precede vertices");
      c.style = s == 3 ? Style::ThreePin : Style::FourPin;
      have_style = true;
    } else if (tag == "v") {
      long long id = -1;
      std::string label;
      if (!(ls >> id >> label)) bad_line(line_no, "expected 'v <id> <label>'");
      if (id != static_cast<long long>(c.graph.vertex_count())) {
        bad_line(line_no, "vertex ids must be dense and ascending");
      }
      c.graph.add_vertex(label);
    } else if (tag == "e") {
      long long u = -1;
      long long v = -1;
      std::string kind;
      if (!(ls >> u >> v >> kind) || (kind != "u" && kind != "d")) {
        bad_line(line_no, "expected 'e <u> <v> u|d'");
      }
      if (u < 0 || v < 0) bad_line(line_no, "negative vertex id");
      try {
        c.graph.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v),
                         kind == "u" ? EdgeKind::Undirected : EdgeKind::Directed);
      } catch (const InvalidGraph& err) {
        bad_line(line_no, err.what());
      }
    } else if (tag == "in") {
      std::string var;
      long long occ = 0;
      if (!(ls >> var >> occ)) bad_line(line_no, "expected 'in <var> <occurrence> <ids>'");
      PinGroup g = read_group(ls);
      auto it = std::find_if(c.inputs.begin(), c.inputs.end(),
                             [&](const InputBinding& b) { return b.variable == var; });
      if (it == c.inputs.end()) {
        c.inputs.push_back({var, {}});
        it = std::prev(c.inputs.end());
      }
      if (occ != static_cast<long long>(it->occurrences.size()) + 1) {
        bad_line(line_no, "occurrence indices must count up from 1");
      }
      it->occurrences.push_back(g);
    } else if (tag == "out") {
      c.output_group = read_group(ls);
      have_out = true;
    } else {
      bad_line(line_no, "unknown item '" + tag + "'");
    }
  }
  if (!have_style) throw FormatError("circuit has no 'style' line");
  if (!have_out) throw FormatError("circuit has no 'out' line");

  // Recover named groups from labels; skipped when the labels do not
  // describe complete groups.
  const auto& roles = terminal_names(c.style);
  std::map<std::string, std::vector<long long>> by_name;
  std::vector<std::string> order;
  bool complete = true;
  for (std::size_t v = 0; v < c.graph.vertex_count() && complete; ++v) {
    const std::string& label = c.graph.label(static_cast<VertexId>(v));
    auto dot = label.rfind('.');
    auto role = dot == std::string::npos
                    ? roles.end()
                    : std::find(roles.begin(), roles.end(), label.substr(dot + 1));
    if (role == roles.end()) {
      complete = false;
      break;
    }
    std::string name = label.substr(0, dot);
    auto [it, inserted] = by_name.try_emplace(name, std::vector<long long>(roles.size(), -1));
    if (inserted) order.push_back(name);
    auto& slot = it->second[static_cast<std::size_t>(role - roles.begin())];
    if (slot != -1) complete = false;
    slot = static_cast<long long>(v);
  }
  if (complete) {
    for (const auto& name : order) {
      const auto& slots = by_name[name];
      if (std::count(slots.begin(), slots.end(), -1) != 0) {
        complete = false;
        break;
      }
      std::vector<VertexId> ids(slots.begin(), slots.end());
      c.groups.push_back({name, group_from_ids(c.style, ids)});
    }
  }
  if (!complete) c.groups.clear();
  return c;
}

}  // namespace wirelogic
