#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wirelogic/graph.h"
#include "wirelogic/netlist.h"

namespace wirelogic {

enum class Style : std::uint8_t { ThreePin = 3, FourPin = 4 };

// True rail, shared ground, inverted rail.
struct PinGroup3 {
  VertexId t;
  VertexId g;
  VertexId f;

  friend bool operator==(const PinGroup3&, const PinGroup3&) = default;
};

// Double pair: value 1 joins tp-tm, value 0 joins fp-fm.
struct PinGroup4 {
  VertexId tp;
  VertexId tm;
  VertexId fp;
  VertexId fm;

  friend bool operator==(const PinGroup4&, const PinGroup4&) = default;
};

using PinGroup = std::variant<PinGroup3, PinGroup4>;

Style style_of(const PinGroup& g) noexcept;

// Terminals in canonical order: t g f, or tp tm fp fm.
std::vector<VertexId> terminals(const PinGroup& g);
// "T" "G" "F", or "TP" "TM" "FP" "FM".
const std::vector<std::string>& terminal_names(Style s);

// Same vertices with the true and inverted roles exchanged.
PinGroup swap_rails(const PinGroup& g);

struct InputBinding {
  std::string variable;
  std::vector<PinGroup> occurrences;  // one per occurrence in the tree
};

struct NamedGroup {
  std::string name;  // "A#1", "AND#2", ...
  PinGroup group;
};

struct StructuralCircuit {
  Graph graph;
  Style style = Style::ThreePin;
  std::vector<InputBinding> inputs;  // netlist input order
  PinGroup output_group;
  std::vector<NamedGroup> groups;    // every group, construction order

  const InputBinding* find_input(std::string_view variable) const;
};

struct GateResult {
  PinGroup out;
  std::vector<Edge> edges;
};

// Incremental circuit construction. Every call allocates a fresh pin group
// and returns the undirected edges it wired.
class Weaver {
 public:
  explicit Weaver(Style style) : style_(style) {}

  PinGroup input(const std::string& variable);
  GateResult gate_not(const PinGroup& in);
  // True rails in series, inverted rails in parallel.
  GateResult gate_and(const PinGroup& a, const PinGroup& b);
  // gate_and with every true/inverted role exchanged.
  GateResult gate_or(const PinGroup& a, const PinGroup& b);

  StructuralCircuit finish(const PinGroup& output,
                           const std::vector<std::string>& input_order) &&;

  const Graph& graph() const noexcept { return graph_; }

 private:
  PinGroup new_group(const std::string& name);
  GateResult gate_and_wired(const PinGroup& a, const PinGroup& b,
                            const std::string& name, bool swapped);
  void wire(std::vector<Edge>& out, VertexId u, VertexId v);

  Style style_;
  Graph graph_;
  std::vector<InputBinding> inputs_;
  std::vector<NamedGroup> groups_;
  std::size_t not_count_ = 0;
  std::size_t and_count_ = 0;
  std::size_t or_count_ = 0;
};

// Bottom-up, left-to-right compilation. Each variable occurrence gets its own
// input group. Throws FanOutUnsupported when a non-leaf node is shared.
StructuralCircuit compile(const Netlist& n, Style style);

// De Morgan mirror of an expression: And <-> Or, leaves and NOT untouched.
Expr mirror(const Expr& e);

// Same graph with true/inverted roles exchanged in every pin group.
StructuralCircuit mirror_circuit(const StructuralCircuit& c);

// Text format, one item per line:
//   style 3|4
//   v <id> <label>
//   e <u> <v> u|d
//   in <var> <occurrence> <ids...>
//   out <ids...>
void write_circuit(std::ostream& os, const StructuralCircuit& c);
std::string to_text(const StructuralCircuit& c);
// Throws FormatError on malformed input. Groups other than inputs/output are
// recovered from `NAME.ROLE` vertex labels.
StructuralCircuit read_circuit(std::string_view text);

}  // namespace wirelogic
