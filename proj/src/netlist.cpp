#include "wirelogic/netlist.h"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "wirelogic/error.h"

namespace wirelogic {

Expr Expr::var(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Expr Expr::make_not(Expr child) {
  return Expr(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(child)}}));
}

Expr Expr::make_and(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{Kind::And, {}, {std::move(left), std::move(right)}}));
}

Expr Expr::make_or(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{Kind::Or, {}, {std::move(left), std::move(right)}}));
}

const std::string& Expr::name() const {
  if (kind() != Kind::Var) throw std::logic_error("Expr::name on non-variable");
  return node_->name;
}

const Expr& Expr::child() const {
  if (kind() != Kind::Not) throw std::logic_error("Expr::child on non-NOT");
  return node_->children[0];
}

const Expr& Expr::left() const {
  if (kind() != Kind::And && kind() != Kind::Or) {
    throw std::logic_error("Expr::left on non-binary node");
  }
  return node_->children[0];
}

const Expr& Expr::right() const {
  if (kind() != Kind::And && kind() != Kind::Or) {
    throw std::logic_error("Expr::right on non-binary node");
  }
  return node_->children[1];
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Var:
      return a.name() == b.name();
    case Expr::Kind::Not:
      return a.child() == b.child();
    case Expr::Kind::And:
    case Expr::Kind::Or:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

enum class Tok { Word, Equals, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

enum class BinOp { And, Or, Nand, Nor, Xor, Xnor };

std::optional<BinOp> binop_of(std::string_view word) {
  if (word == "AND") return BinOp::And;
  if (word == "OR") return BinOp::Or;
  if (word == "NAND") return BinOp::Nand;
  if (word == "NOR") return BinOp::Nor;
  if (word == "XOR") return BinOp::Xor;
  if (word == "XNOR") return BinOp::Xnor;
  return std::nullopt;
}

bool is_keyword(std::string_view word) {
  return word == "NOT" || binop_of(word).has_value();
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '=') {
      out.push_back({Tok::Equals, "=", i + 1});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", i + 1});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i + 1});
      ++i;
    } else if (is_word_char(c)) {
      std::size_t start = i;
      while (i < line.size() && is_word_char(line[i])) ++i;
      out.push_back({Tok::Word, std::string(line.substr(start, i - start)), start + 1});
    } else {
      throw SyntaxError(i + 1, "line " + std::to_string(line_no) +
                                   ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

Expr apply(BinOp op, const Expr& a, const Expr& b) {
  switch (op) {
    case BinOp::And:
      return Expr::make_and(a, b);
    case BinOp::Or:
      return Expr::make_or(a, b);
    case BinOp::Nand:
      return Expr::make_not(Expr::make_and(a, b));
    case BinOp::Nor:
      return Expr::make_not(Expr::make_or(a, b));
    case BinOp::Xor:
      return Expr::make_and(Expr::make_not(Expr::make_and(a, b)), Expr::make_or(a, b));
    case BinOp::Xnor:
      return Expr::make_not(apply(BinOp::Xor, a, b));
  }
  throw std::logic_error("unknown operator");
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no,
             const std::unordered_map<std::string, Expr>& defined)
      : toks_(std::move(tokens)), line_no_(line_no), defined_(defined) {}

  std::pair<std::string, Expr> definition() {
    const Token& name = peek();
    if (name.kind != Tok::Word) fail(name, "expected netlist name");
    ++pos_;
    if (peek().kind != Tok::Equals) fail(peek(), "expected '='");
    ++pos_;
    Expr body = expr();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return {name.text, std::move(body)};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    throw SyntaxError(at.column, "line " + std::to_string(line_no_) + ": " + what);
  }

  Expr expr() {
    Expr lhs = term();
    std::optional<BinOp> chain;
    std::string chain_word;
    while (peek().kind == Tok::Word) {
      auto op = binop_of(peek().text);
      if (!op) fail(peek(), "expected operator, got '" + peek().text + "'");
      if (chain && *chain != *op) {
        throw MixedPrecedenceError(
            "line " + std::to_string(line_no_) + ", column " +
            std::to_string(peek().column) + ": '" + peek().text + "' follows '" +
            chain_word + "' without parentheses");
      }
      chain = op;
      chain_word = peek().text;
      ++pos_;
      Expr rhs = term();
      lhs = apply(*op, lhs, rhs);
    }
    return lhs;
  }

  Expr term() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos_;
      Expr inner = expr();
      if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
      ++pos_;
      return inner;
    }
    if (t.kind == Tok::Word && t.text == "NOT") {
      ++pos_;
      return Expr::make_not(term());
    }
    if (t.kind == Tok::Word && !is_keyword(t.text)) {
      ++pos_;
      if (auto it = defined_.find(t.text); it != defined_.end()) return it->second;
      return Expr::var(t.text);
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input"
                               : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
  const std::unordered_map<std::string, Expr>& defined_;
};

void collect_vars(const Expr& e, std::vector<std::string>& out,
                  std::set<std::string>& seen) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      if (seen.insert(e.name()).second) out.push_back(e.name());
      return;
    case Expr::Kind::Not:
      collect_vars(e.child(), out, seen);
      return;
    default:
      collect_vars(e.left(), out, seen);
      collect_vars(e.right(), out, seen);
  }
}

std::string operand(const Expr& e) {
  if (e.kind() == Expr::Kind::And || e.kind() == Expr::Kind::Or) {
    return "(" + to_string(e) + ")";
  }
  return to_string(e);
}

}  // namespace

Netlist parse(std::string_view text) {
  std::unordered_map<std::string, Expr> defined;
  std::optional<Netlist> last;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = tokenize(line, line_no);
    if (tokens.size() == 1) continue;

    LineParser parser(std::move(tokens), line_no, defined);
    auto [name, body] = parser.definition();
    if (defined.count(name)) {
      throw SyntaxError(1, "line " + std::to_string(line_no) + ": '" + name +
                               "' is already defined");
    }
    defined.emplace(name, body);
    last = Netlist{name, variables_in_order(body), body};
  }
  if (!last) throw SyntaxError(1, "no definition found");
  return *last;
}

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return e.name();
    case Expr::Kind::Not:
      return "NOT " + operand(e.child());
    case Expr::Kind::And:
      return operand(e.left()) + " AND " + operand(e.right());
    case Expr::Kind::Or:
      return operand(e.left()) + " OR " + operand(e.right());
  }
  return {};
}

std::string to_string(const Netlist& n) { return n.name + " = " + to_string(n.body); }

std::vector<std::string> variables_in_order(const Expr& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_vars(e, out, seen);
  return out;
}

Bit eval(const Expr& e, const Assignment& a) {
  switch (e.kind()) {
    case Expr::Kind::Var: {
      auto it = a.find(e.name());
      if (it == a.end()) throw MissingVariable("no value for variable '" + e.name() + "'");
      return it->second;
    }
    case Expr::Kind::Not:
      return !eval(e.child(), a);
    case Expr::Kind::And:
      return eval(e.left(), a) & eval(e.right(), a);
    case Expr::Kind::Or:
      return eval(e.left(), a) | eval(e.right(), a);
  }
  return Bit::Zero;
}

Bit eval(const Netlist& n, const Assignment& a) {
  for (const auto& v : n.inputs) {
    if (!a.count(v)) throw MissingVariable("no value for variable '" + v + "'");
  }
  return eval(n.body, a);
}

Assignment assignment_from_index(const std::vector<std::string>& inputs,
                                 std::uint64_t index) {
  Assignment a;
  const std::size_t n = inputs.size();
  for (std::size_t i = 0; i < n; ++i) {
    a[inputs[i]] = to_bit((index >> (n - 1 - i)) & 1U);
  }
  return a;
}

Assignment complement(const Assignment& a) {
  Assignment out;
  for (const auto& [k, v] : a) out[k] = !v;
  return out;
}

TruthTable truth_table(const Netlist& n) {
  if (n.inputs.size() > kTruthTableCap) {
    throw ExplicitCapExceeded(std::to_string(n.inputs.size()) +
                              " inputs exceed the explicit truth-table cap of " +
                              std::to_string(kTruthTableCap) +
                              "; use sampled verification instead");
  }
  TruthTable t{n.inputs, {}};
  const std::uint64_t count = std::uint64_t{1} << n.inputs.size();
  t.rows.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Assignment a = assignment_from_index(n.inputs, i);
    Bit out = eval(n.body, a);
    t.rows.push_back({std::move(a), out});
  }
  return t;
}

std::string to_csv(const TruthTable& t) {
  std::ostringstream os;
  for (const auto& v : t.inputs) os << v << ',';
  os << "out\n";
  for (const auto& row : t.rows) {
    for (const auto& v : t.inputs) os << to_int(row.assignment.at(v)) << ',';
    os << to_int(row.out) << '\n';
  }
  return os.str();
}

}  // namespace wirelogic
