#include "wirelogic/fabricate.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "test_util.h"
#include "wirelogic/error.h"

using namespace wirelogic;

namespace {

struct Contact {
  std::size_t a;
  std::size_t b;
  Point at;

  auto key() const { return std::tuple(a, b, at.x, at.y); }
  bool operator<(const Contact& o) const { return key() < o.key(); }
  bool operator==(const Contact& o) const { return key() == o.key(); }
};

// All contact points between two axis-aligned segments. Collinear overlaps
// are reported at both ends of the overlap.
std::vector<Point> touch(Point p, Point q, Point r, Point s) {
  auto lo = [](Hundredths a, Hundredths b) { return std::min(a, b); };
  auto hi = [](Hundredths a, Hundredths b) { return std::max(a, b); };
  Hundredths x0 = std::max(lo(p.x, q.x), lo(r.x, s.x));
  Hundredths x1 = std::min(hi(p.x, q.x), hi(r.x, s.x));
  Hundredths y0 = std::max(lo(p.y, q.y), lo(r.y, s.y));
  Hundredths y1 = std::min(hi(p.y, q.y), hi(r.y, s.y));
  if (x0 > x1 || y0 > y1) return {};
  if (x0 == x1 && y0 == y1) return {{x0, y0}};
  return {{x0, y0}, {x1, y1}};
}

// Brute force over every segment pair of every trace pair.
std::set<Contact> all_contacts(const Layout& l) {
  std::set<Contact> out;
  for (std::size_t a = 0; a < l.traces.size(); ++a) {
    for (std::size_t b = a + 1; b < l.traces.size(); ++b) {
      const auto& ta = l.traces[a];
      const auto& tb = l.traces[b];
      for (std::size_t i = 0; i + 1 < ta.size(); ++i) {
        for (std::size_t j = 0; j + 1 < tb.size(); ++j) {
          for (Point p : touch(ta[i], ta[i + 1], tb[j], tb[j + 1])) out.insert({a, b, p});
        }
      }
    }
  }
  return out;
}

bool on_segment(Point p, Point a, Point b) {
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) &&
         p.y <= std::max(a.y, b.y);
}

// Every contact is either an edge trace meeting its own endpoint's pad, or a
// bridge. Every bridge is a real contact.
void check_crossings(const StructuralCircuit& c, const Layout& l) {
  const std::size_t nv = c.graph.vertex_count();
  ASSERT_EQ(l.traces.size(), nv + c.graph.edges().size());
  std::set<Contact> expected_bridges;
  for (const Contact& k : all_contacts(l)) {
    if (k.a < nv && k.b >= nv) {
      const Edge& e = c.graph.edges()[k.b - nv];
      const Polyline& t = l.traces[k.b];
      bool junction = (k.at == t.front() && k.a == e.u) || (k.at == t.back() && k.a == e.v);
      ASSERT_TRUE(junction) << "edge trace " << k.b << " touches pad " << k.a;
      continue;
    }
    ASSERT_GE(k.a, nv) << "pads " << k.a << " and " << k.b << " touch";
    expected_bridges.insert(k);
  }
  std::set<Contact> got;
  for (const Bridge& br : l.bridges) {
    const Polyline& t = l.traces[br.trace];
    ASSERT_LT(br.segment + 1, t.size());
    EXPECT_TRUE(on_segment(br.at, t[br.segment], t[br.segment + 1]));
    got.insert({std::min(br.trace, br.other), std::max(br.trace, br.other), br.at});
  }
  EXPECT_EQ(got.size(), l.bridges.size());
  EXPECT_EQ(got, expected_bridges);
}

// Every edge trace starts on its u pad and ends on its v pad.
void check_connectivity(const StructuralCircuit& c, const Layout& l) {
  const std::size_t nv = c.graph.vertex_count();
  for (std::size_t i = 0; i < c.graph.edges().size(); ++i) {
    const Edge& e = c.graph.edges()[i];
    const Polyline& t = l.traces[nv + i];
    const Polyline& pu = l.traces[e.u];
    const Polyline& pv = l.traces[e.v];
    EXPECT_TRUE(on_segment(t.front(), pu.front(), pu.back()));
    EXPECT_TRUE(on_segment(t.back(), pv.front(), pv.back()));
  }
}

StructuralCircuit single_wire() {
  StructuralCircuit c;
  c.style = Style::ThreePin;
  for (const char* l : {"P.T", "P.G", "P.F", "Q.T", "Q.G", "Q.F"}) c.graph.add_vertex(l);
  c.graph.add_edge(0, 3, EdgeKind::Undirected);
  c.groups = {{"P", PinGroup3{0, 1, 2}}, {"Q", PinGroup3{3, 4, 5}}};
  c.output_group = c.groups[0].group;
  return c;
}

}  // namespace

TEST(FabricateTest, FormatMm) {
  EXPECT_EQ(format_mm(1250), "12.50");
  EXPECT_EQ(format_mm(5), "0.05");
  EXPECT_EQ(format_mm(-254), "-2.54");
  EXPECT_EQ(to_hundredths(2.54), 254);
}

TEST(FabricateTest, NotGateHasExactlyOneCrossing) {
  StructuralCircuit c = compile(parse("B = NOT A"), Style::ThreePin);
  Layout l = layout(c, 2.54);
  EXPECT_EQ(l.bridges.size(), 1u);
  check_crossings(c, l);
}

TEST(FabricateTest, SingleWireHasNoCrossings) {
  StructuralCircuit c = single_wire();
  Layout l = layout(c, 2.54);
  EXPECT_EQ(l.traces.size(), 7u);
  EXPECT_TRUE(l.bridges.empty());
  check_crossings(c, l);
}

TEST(FabricateTest, AndGateTraceCount) {
  StructuralCircuit c = compile(parse("C = A AND B"), Style::ThreePin);
  Layout l = layout(c, 2.54);
  EXPECT_EQ(l.traces.size(), 14u);
  check_crossings(c, l);
  check_connectivity(c, l);
}

TEST(FabricateTest, RandomCircuitsCrossOnlyAtBridges) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Netlist n = testutil::random_netlist(rng, 1 + rng() % 4, 8);
    for (Style s : {Style::ThreePin, Style::FourPin}) {
      StructuralCircuit c = compile(n, s);
      Layout l = layout(c, 1.0);
      check_crossings(c, l);
      check_connectivity(c, l);
    }
  }
}

TEST(FabricateTest, TwoPointTraceProgram) {
  Layout l;
  l.pitch = 254;
  l.hop = 63;
  l.traces = {{{0, 0}, {1000, 0}}};
  GCodeProgram p = emit_gcode(l);
  EXPECT_EQ(to_text(p),
            "G21\nG90\n"
            "G0 X0.00 Y0.00 Z2.00\n"
            "G0 X0.00 Y0.00 Z0.20\n"
            "G1 X10.00 Y0.00 F600.00\n"
            "G0 X10.00 Y0.00 Z2.00\n");
  EXPECT_EQ(p.lines.size(), 6u);
}

TEST(FabricateTest, EmptyLayoutIsHeaderOnly) {
  GCodeProgram p = emit_gcode(Layout{});
  EXPECT_EQ(to_text(p), "G21\nG90\n");
}

TEST(FabricateTest, BridgeLiftsThePen) {
  StructuralCircuit c = compile(parse("B = NOT A"), Style::ThreePin);
  Layout l = layout(c, 2.54);
  GCodeProgram p = emit_gcode(l);
  // One extra raise/move/drop per bridge on top of the per-trace moves.
  std::size_t points = 0;
  for (const auto& t : l.traces) points += t.size();
  std::size_t want = 2 + l.traces.size() * 3 + (points - l.traces.size()) + 4 * l.bridges.size();
  EXPECT_EQ(p.lines.size(), want);
}

TEST(FabricateTest, EmitParseRoundTrip) {
  for (const char* src : {"B = NOT A", "C = A AND B", "XOR = (A NAND B) AND (A OR B)"}) {
    for (Style s : {Style::ThreePin, Style::FourPin}) {
      Layout l = layout(compile(parse(src), s), 2.54);
      GCodeProgram p = emit_gcode(l);
      std::string text = to_text(p);
      GCodeProgram back = parse_gcode(text);
      EXPECT_EQ(back, p);
      EXPECT_EQ(to_text(back), text);
      EXPECT_EQ(replay_strokes(back, to_hundredths(0.2)), l.strokes());
    }
  }
}

TEST(FabricateTest, StrokesCoverTraceMinusHops) {
  StructuralCircuit c = compile(parse("XOR = (A NAND B) AND (A OR B)"), Style::ThreePin);
  Layout l = layout(c, 2.54);
  auto length = [](const Polyline& p) {
    Hundredths s = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      s += std::llabs(p[i + 1].x - p[i].x) + std::llabs(p[i + 1].y - p[i].y);
    }
    return s;
  };
  Hundredths traced = 0;
  for (const auto& t : l.traces) traced += length(t);
  Hundredths stroked = 0;
  for (const auto& s : l.strokes()) stroked += length(s);
  EXPECT_EQ(stroked, traced - 2 * l.hop * static_cast<Hundredths>(l.bridges.size()));
  EXPECT_EQ(l.strokes().size(), l.traces.size() + l.bridges.size());
}

TEST(FabricateTest, MovesUseTheRightHeights) {
  Layout l = layout(compile(parse("XOR = (A NAND B) AND (A OR B)"), Style::FourPin), 2.54);
  GCodeProgram p = emit_gcode(l);
  const GCommand* prev = nullptr;
  Hundredths z = 0;
  for (const GCommand& cmd : p.lines) {
    if (cmd.code == GCommand::Code::G1) {
      EXPECT_EQ(z, 20);  // draw moves at draw_z
      EXPECT_EQ(cmd.f, 60000);
    } else if (cmd.code == GCommand::Code::G0) {
      ASSERT_TRUE(cmd.z.has_value());
      if (*cmd.z == 20) {
        // The pen only drops in place, straight down from travel height.
        ASSERT_NE(prev, nullptr);
        EXPECT_EQ(prev->z, 200);
        EXPECT_EQ(prev->x, cmd.x);
        EXPECT_EQ(prev->y, cmd.y);
      } else {
        EXPECT_EQ(*cmd.z, 200);
      }
      z = *cmd.z;
    }
    prev = &cmd;
  }
}

TEST(FabricateTest, ParserRejectsUnsupportedWords) {
  try {
    parse_gcode("G21\nG2 X1 Y1\n");
    FAIL() << "expected UnsupportedWord";
  } catch (const UnsupportedWord& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_gcode("G1 X1.005\n"), UnsupportedWord);
  EXPECT_THROW(parse_gcode("G1 X1 X2\n"), UnsupportedWord);
  EXPECT_THROW(parse_gcode("G1 Q1\n"), UnsupportedWord);
  EXPECT_THROW(parse_gcode("M3\n"), UnsupportedWord);
  EXPECT_EQ(parse_gcode("\nG1 X1.5\n").lines.at(0).x, 150);
}

TEST(FabricateTest, Deterministic) {
  Netlist n = parse("M = ((A AND B) OR (C AND D)) OR NOT E");
  std::string first = to_text(emit_gcode(layout(compile(n, Style::ThreePin), 2.54)));
  std::string second = to_text(emit_gcode(layout(compile(n, Style::ThreePin), 2.54)));
  EXPECT_EQ(first, second);
  EXPECT_EQ(to_svg(layout(compile(n, Style::ThreePin), 2.54)),
            to_svg(layout(compile(n, Style::ThreePin), 2.54)));
}

TEST(FabricateTest, InvalidInputs) {
  StructuralCircuit c = compile(parse("XOR = (A NAND B) AND (A OR B)"), Style::ThreePin);
  EXPECT_THROW(layout(c, 2.54, {1.0}), LayoutOverflow);
  EXPECT_THROW(layout(c, 0.0), InvalidParams);
  EXPECT_THROW(layout(c, 0.03), InvalidParams);
  Layout l = layout(c, 2.54);
  EXPECT_THROW(emit_gcode(l, {0.0, 0.2, 2.0}), InvalidParams);
  EXPECT_THROW(emit_gcode(l, {600.0, 2.0, 2.0}), InvalidParams);

  StructuralCircuit bare = c;
  bare.groups.clear();
  EXPECT_THROW(layout(bare, 2.54), FormatError);
}
