#include "wirelogic/netlist.h"

#include <gtest/gtest.h>

#include <random>

#include "wirelogic/error.h"

using namespace wirelogic;

namespace {

Expr v(const char* name) { return Expr::var(name); }

// Random expression text using every surface operator, parenthesized so the
// grammar accepts it.
std::string random_source(std::mt19937& rng, int depth) {
  static const char* vars[] = {"A", "B", "C", "D"};
  static const char* ops[] = {"AND", "OR", "NAND", "NOR", "XOR", "XNOR"};
  std::uniform_int_distribution<int> pick(0, 9);
  int r = pick(rng);
  if (depth == 0 || r < 3) return vars[rng() % 4];
  if (r < 5) return "NOT " + random_source(rng, depth - 1);
  return "(" + random_source(rng, depth - 1) + ") " + ops[rng() % 6] + " (" +
         random_source(rng, depth - 1) + ")";
}

}  // namespace

TEST(NetlistTest, ParsesXorComposition) {
  Netlist n = parse("XOR = (A NAND B) AND (A OR B)");
  EXPECT_EQ(n.name, "XOR");
  EXPECT_EQ(n.inputs, (std::vector<std::string>{"A", "B"}));
  Expr want = Expr::make_and(Expr::make_not(Expr::make_and(v("A"), v("B"))),
                             Expr::make_or(v("A"), v("B")));
  EXPECT_EQ(n.body, want);
}

TEST(NetlistTest, ParsesIdentity) {
  Netlist n = parse("ID = A");
  EXPECT_EQ(n.inputs, std::vector<std::string>{"A"});
  EXPECT_EQ(n.body, v("A"));
}

TEST(NetlistTest, MixedOperatorsNeedParentheses) {
  EXPECT_THROW(parse("BAD = A AND B OR C"), MixedPrecedenceError);
  EXPECT_NO_THROW(parse("OK = (A AND B) OR C"));
  EXPECT_NO_THROW(parse("OK = A AND B AND C"));
}

TEST(NetlistTest, SameOperatorChainsAreLeftAssociative) {
  Netlist n = parse("C3 = A AND B AND C");
  EXPECT_EQ(n.body, Expr::make_and(Expr::make_and(v("A"), v("B")), v("C")));
}

TEST(NetlistTest, NotBindsTightest) {
  Netlist n = parse("X = NOT A AND B");
  EXPECT_EQ(n.body, Expr::make_and(Expr::make_not(v("A")), v("B")));
}

TEST(NetlistTest, CompoundOperatorsDesugar) {
  EXPECT_EQ(parse("N = A NAND B").body, Expr::make_not(Expr::make_and(v("A"), v("B"))));
  EXPECT_EQ(parse("N = A NOR B").body, Expr::make_not(Expr::make_or(v("A"), v("B"))));
  EXPECT_EQ(parse("N = A XNOR B").body, Expr::make_not(parse("X = A XOR B").body));
}

TEST(NetlistTest, SyntaxErrorsCarryPosition) {
  try {
    parse("X = A AND");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_THROW(parse("X = (A AND B"), SyntaxError);
  EXPECT_THROW(parse("X A AND B"), SyntaxError);
  EXPECT_THROW(parse("X = A $ B"), SyntaxError);
  EXPECT_THROW(parse("X = AND"), SyntaxError);
  EXPECT_THROW(parse("# only a comment\n"), SyntaxError);
  EXPECT_THROW(parse("X = A\nX = B"), SyntaxError);
}

TEST(NetlistTest, CommentsAndBlankLinesAreIgnored) {
  Netlist n = parse("# header\n\nC = A AND B  # trailing\n");
  EXPECT_EQ(n.name, "C");
  EXPECT_EQ(n.inputs, (std::vector<std::string>{"A", "B"}));
}

TEST(NetlistTest, EarlierDefinitionsSpliceAsSharedNodes) {
  Netlist n = parse("N = A NAND B\nOUT = N AND N");
  EXPECT_EQ(n.name, "OUT");
  EXPECT_EQ(n.inputs, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(n.body.left().node_id(), n.body.right().node_id());
}

TEST(NetlistTest, EvalXor) {
  Netlist n = parse("XOR = (A NAND B) AND (A OR B)");
  EXPECT_EQ(eval(n, {{"A", Bit::One}, {"B", Bit::Zero}}), Bit::One);
  EXPECT_EQ(eval(n, {{"A", Bit::One}, {"B", Bit::One}}), Bit::Zero);
  EXPECT_THROW(eval(n, {{"A", Bit::One}}), MissingVariable);
}

TEST(NetlistTest, TruthTableXor) {
  TruthTable t = truth_table(parse("XOR = (A NAND B) AND (A OR B)"));
  ASSERT_EQ(t.rows.size(), 4u);
  const int expected[] = {0, 1, 1, 0};  // 00 01 10 11
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(to_int(t.rows[i].assignment.at("A")), i >> 1);
    EXPECT_EQ(to_int(t.rows[i].assignment.at("B")), i & 1);
    EXPECT_EQ(to_int(t.rows[i].out), expected[i]);
  }
}

TEST(NetlistTest, TruthTableSizes) {
  TruthTable and_table = truth_table(parse("C = A AND B"));
  ASSERT_EQ(and_table.rows.size(), 4u);
  EXPECT_EQ(and_table.rows.back().out, Bit::One);
  EXPECT_EQ(truth_table(parse("ID = A")).rows.size(), 2u);
  EXPECT_EQ(to_csv(and_table), "A,B,out\n0,0,0\n0,1,0\n1,0,0\n1,1,1\n");
}

TEST(NetlistTest, TruthTableCap) {
  std::string src = "BIG = V0";
  for (int i = 1; i <= 20; ++i) src += " AND V" + std::to_string(i);
  EXPECT_THROW(truth_table(parse(src)), ExplicitCapExceeded);
}

TEST(NetlistTest, XorDesugaringMatchesSumOfProducts) {
  Netlist n = parse("X = A XOR B");
  Expr sop = Expr::make_or(Expr::make_and(v("A"), Expr::make_not(v("B"))),
                           Expr::make_and(Expr::make_not(v("A")), v("B")));
  for (std::uint64_t i = 0; i < 4; ++i) {
    Assignment a = assignment_from_index(n.inputs, i);
    EXPECT_EQ(eval(n.body, a), eval(sop, a));
  }
}

TEST(NetlistTest, PrintParseRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::string src = "R = " + random_source(rng, 4);
    Netlist n = parse(src);
    std::string printed = to_string(n);
    Netlist again = parse(printed);
    ASSERT_EQ(again.body, n.body) << src << "\n" << printed;
    EXPECT_EQ(again.inputs, n.inputs);
    EXPECT_EQ(to_string(again), printed);
    // The canonical form only uses the core operators.
    EXPECT_EQ(printed.find("NAND"), std::string::npos);
    EXPECT_EQ(printed.find("XOR"), std::string::npos);
    EXPECT_EQ(printed.find("NOR"), std::string::npos);
  }
}

TEST(NetlistTest, ComplementFlipsEveryBit) {
  Assignment a{{"A", Bit::One}, {"B", Bit::Zero}};
  Assignment c = complement(a);
  EXPECT_EQ(c.at("A"), Bit::Zero);
  EXPECT_EQ(c.at("B"), Bit::One);
}
