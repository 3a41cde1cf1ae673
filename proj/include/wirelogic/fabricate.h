#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wirelogic/weaver.h"

namespace wirelogic {

// Layout and G-code coordinates are integers in hundredths of a millimetre,
// the resolution of the emitted two-decimal G-code.
using Hundredths = std::int64_t;

Hundredths to_hundredths(double mm);
std::string format_mm(Hundredths v);  // "12.50"

struct Point {
  Hundredths x = 0;
  Hundredths y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

using Polyline = std::vector<Point>;

// A crossing that the trace `trace` hops over on its segment `segment`
// (between points segment and segment + 1). `other` is the trace crossed.
struct Bridge {
  std::size_t trace = 0;
  std::size_t segment = 0;
  Point at;
  std::size_t other = 0;

  friend bool operator==(const Bridge&, const Bridge&) = default;
};

struct Layout {
  std::vector<Polyline> traces;
  std::vector<Bridge> bridges;  // sorted by trace, segment, travel order
  Hundredths pitch = 0;
  Hundredths hop = 0;  // half-width of a pen-up hop around a crossing

  // Pen-down runs: every trace cut open at hop spans around its bridges.
  std::vector<Polyline> strokes() const;
};

struct LayoutOptions {
  double max_extent_mm = 2000.0;
};

// Places every pin on one baseline, pin groups left to right in construction
// order, and routes each graph edge as a three-segment orthogonal trace on its
// own track. Each vertex also gets a pad trace on the baseline that its edges
// attach to. Ground (3-pin) or minus-terminal (4-pin) links route below the
// baseline, everything else above. Groups alternate orientation with tree
// depth, so straight links nest and a NOT twist crosses.
//
// Throws InvalidParams for pitch below 0.04 mm, FormatError when the circuit
// lacks pin groups, LayoutOverflow when the extent exceeds the bound.
Layout layout(const StructuralCircuit& c, double pitch_mm, const LayoutOptions& opts = {});

struct GCommand {
  enum class Code : std::uint8_t { G0, G1, G21, G90 };

  Code code = Code::G0;
  std::optional<Hundredths> x;
  std::optional<Hundredths> y;
  std::optional<Hundredths> z;
  std::optional<Hundredths> f;

  friend bool operator==(const GCommand&, const GCommand&) = default;
};

struct GCodeProgram {
  std::vector<GCommand> lines;

  friend bool operator==(const GCodeProgram&, const GCodeProgram&) = default;
};

struct GCodeParams {
  double feed_mm_per_min = 600.0;
  double draw_z_mm = 0.2;
  double travel_z_mm = 2.0;
};

// G21, G90, then per trace: travel at travel_z, drop to draw_z, G1 through
// the points (hopping at bridges), raise. Throws InvalidParams unless
// travel_z > draw_z and feed > 0.
GCodeProgram emit_gcode(const Layout& l, const GCodeParams& p = {});

// LF-terminated lines, uppercase words, two-decimal numbers.
std::string to_text(const GCodeProgram& p);

// Accepts G0/G1 with X Y Z F words, G21 and G90. Blank lines are skipped.
// Throws UnsupportedWord with the 1-based line number.
GCodeProgram parse_gcode(std::string_view text);

// Pen-down runs reconstructed by replaying the program.
std::vector<Polyline> replay_strokes(const GCodeProgram& p, Hundredths draw_z);

std::string to_svg(const Layout& l);

}  // namespace wirelogic
