#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wirelogic/dualrail.h"

namespace wirelogic {

// Immutable boolean expression over Var/Not/And/Or. Copies share nodes.
// Sharing is visible through node_id(): the compiler treats a non-leaf node
// that is reachable twice as an intermediate signal with fan-out.
class Expr {
 public:
  enum class Kind : std::uint8_t { Var, Not, And, Or };

  static Expr var(std::string name);
  static Expr make_not(Expr child);
  static Expr make_and(Expr left, Expr right);
  static Expr make_or(Expr left, Expr right);

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Var; }
  const std::string& name() const;  // Var only
  const Expr& child() const;        // Not only
  const Expr& left() const;         // And/Or only
  const Expr& right() const;        // And/Or only

  // Stable identity of the underlying node.
  const void* node_id() const noexcept { return node_.get(); }

  // Structural equality; sharing is ignored.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind;
  std::string name;
  std::vector<Expr> children;
};

inline Expr::Kind Expr::kind() const noexcept { return node_->kind; }

using Assignment = std::map<std::string, Bit, std::less<>>;

struct Netlist {
  std::string name;
  std::vector<std::string> inputs;  // first-occurrence order, no duplicates
  Expr body;
};

// Parses netlist source text. Each non-blank line holds one definition
// `NAME = expr`; `#` starts a comment. A definition may refer to the name of
// an earlier one, which splices that expression in as a shared node. The
// last definition is the netlist returned.
//
// Binary operators AND OR NAND NOR XOR XNOR are left-associative with equal
// precedence; mixing two different ones without parentheses raises
// MixedPrecedenceError. NOT binds tightest. Compound operators are desugared:
//   A NAND B -> NOT(A AND B)
//   A NOR B  -> NOT(A OR B)
//   A XOR B  -> (NOT(A AND B)) AND (A OR B)
//   A XNOR B -> NOT(A XOR B)
Netlist parse(std::string_view text);

// Canonical text; re-parses to a structurally identical netlist.
std::string to_string(const Expr& e);
std::string to_string(const Netlist& n);

std::vector<std::string> variables_in_order(const Expr& e);

Bit eval(const Expr& e, const Assignment& a);
Bit eval(const Netlist& n, const Assignment& a);

// Row `index` of the binary counting order over `inputs` (first input is the
// most significant bit).
Assignment assignment_from_index(const std::vector<std::string>& inputs,
                                 std::uint64_t index);
Assignment complement(const Assignment& a);

inline constexpr std::size_t kTruthTableCap = 20;

struct TruthRow {
  Assignment assignment;
  Bit out;
};

struct TruthTable {
  std::vector<std::string> inputs;
  std::vector<TruthRow> rows;
};

// Throws ExplicitCapExceeded above kTruthTableCap inputs.
TruthTable truth_table(const Netlist& n);

// Header `A,B,...,out` followed by 0/1 rows.
std::string to_csv(const TruthTable& t);

}  // namespace wirelogic
