#include "wirelogic/fabricate.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

#include "wirelogic/error.h"

namespace wirelogic {

Hundredths to_hundredths(double mm) { return static_cast<Hundredths>(std::llround(mm * 100.0)); }

std::string format_mm(Hundredths v) {
  std::string sign = v < 0 ? "-" : "";
  Hundredths a = std::llabs(v);
  std::string frac = std::to_string(a % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return sign + std::to_string(a / 100) + "." + frac;
}

namespace {

Hundredths sgn(Hundredths v) { return (v > 0) - (v < 0); }

Hundredths distance_along(Point from, Point to) {
  return std::llabs(to.x - from.x) + std::llabs(to.y - from.y);
}

struct HopSpan {
  Point start;
  Point end;
};

HopSpan hop_span(Point a, Point b, Point at, Hundredths hop) {
  Point dir{sgn(b.x - a.x), sgn(b.y - a.y)};
  return {{at.x - dir.x * hop, at.y - dir.y * hop}, {at.x + dir.x * hop, at.y + dir.y * hop}};
}

// Lower-side roles: the ground pin, or the minus end of each 4-pin pair.
bool is_lower_role(Style s, std::size_t role) {
  return s == Style::ThreePin ? role == 1 : (role == 1 || role == 3);
}

}  // namespace

std::vector<Polyline> Layout::strokes() const {
  std::vector<Polyline> out;
  auto bridge = bridges.begin();
  for (std::size_t t = 0; t < traces.size(); ++t) {
    const Polyline& line = traces[t];
    if (line.empty()) continue;
    Polyline stroke{line.front()};
    for (std::size_t s = 0; s + 1 < line.size(); ++s) {
      for (; bridge != bridges.end() && bridge->trace == t && bridge->segment == s; ++bridge) {
        HopSpan span = hop_span(line[s], line[s + 1], bridge->at, hop);
        stroke.push_back(span.start);
        out.push_back(std::move(stroke));
        stroke = {span.end};
      }
      stroke.push_back(line[s + 1]);
    }
    out.push_back(std::move(stroke));
  }
  return out;
}

Layout layout(const StructuralCircuit& c, double pitch_mm, const LayoutOptions& opts) {
  const Hundredths pitch = to_hundredths(pitch_mm);
  if (!(pitch_mm > 0.0) || pitch < 4) {
    throw InvalidParams("layout pitch must be at least 0.04 mm");
  }
  const Graph& g = c.graph;
  const std::size_t nv = g.vertex_count();

  // Group membership and role of every vertex.
  std::vector<long> group_of(nv, -1);
  std::vector<std::size_t> role_of(nv, 0);
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    auto ids = terminals(c.groups[gi].group);
    for (std::size_t r = 0; r < ids.size(); ++r) {
      group_of[ids[r]] = static_cast<long>(gi);
      role_of[ids[r]] = r;
    }
  }
  if (std::count(group_of.begin(), group_of.end(), -1) != 0) {
    throw FormatError("layout needs every vertex to belong to a named pin group");
  }

  // Tree depth of each group: breadth-first distance from the output group
  // over the group adjacency the gate edges induce.
  std::vector<std::vector<std::size_t>> group_adj(c.groups.size());
  for (const Edge& e : g.edges()) {
    auto a = static_cast<std::size_t>(group_of[e.u]);
    auto b = static_cast<std::size_t>(group_of[e.v]);
    if (a != b) {
      group_adj[a].push_back(b);
      group_adj[b].push_back(a);
    }
  }
  std::vector<long> depth(c.groups.size(), -1);
  if (!c.groups.empty()) {
    const VertexId out_vertex = terminals(c.output_group).front();
    std::deque<std::size_t> queue{static_cast<std::size_t>(group_of[out_vertex])};
    depth[queue.front()] = 0;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : group_adj[x]) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }

  // Baseline order: groups in construction order, reversed on odd depth.
  std::vector<VertexId> order;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    auto ids = terminals(c.groups[gi].group);
    if (depth[gi] > 0 && depth[gi] % 2 == 1) std::reverse(ids.begin(), ids.end());
    order.insert(order.end(), ids.begin(), ids.end());
  }

  std::vector<std::size_t> degree(nv, 0);
  for (const Edge& e : g.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }

  // Pads: slot s of vertex v sits at pad_start[v] + (s + 1) * pitch.
  std::vector<Hundredths> pad_start(nv, 0);
  std::vector<Hundredths> pad_end(nv, 0);
  Hundredths cursor = pitch;
  for (VertexId v : order) {
    std::size_t slots = std::max<std::size_t>(1, degree[v]);
    pad_start[v] = cursor;
    pad_end[v] = cursor + static_cast<Hundredths>(slots + 1) * pitch;
    cursor = pad_end[v] + pitch;
  }

  struct Route {
    Hundredths xu;
    Hundredths xv;
    bool lower;
    Hundredths level = 0;
  };
  std::vector<Route> routes;
  std::vector<std::size_t> next_slot(nv, 0);
  for (const Edge& e : g.edges()) {
    Hundredths xu = pad_start[e.u] + static_cast<Hundredths>(++next_slot[e.u]) * pitch;
    Hundredths xv = pad_start[e.v] + static_cast<Hundredths>(++next_slot[e.v]) * pitch;
    bool lower = is_lower_role(c.style, role_of[e.u]) && is_lower_role(c.style, role_of[e.v]);
    routes.push_back({xu, xv, lower});
  }

  // Shorter spans get lower tracks so that nested spans never cross.
  Hundredths lower_levels = 0;
  Hundredths upper_levels = 0;
  for (bool side : {false, true}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      if (routes[i].lower == side) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      auto span = [&](std::size_t i) { return std::llabs(routes[i].xv - routes[i].xu); };
      auto left = [&](std::size_t i) { return std::min(routes[i].xu, routes[i].xv); };
      if (span(a) != span(b)) return span(a) < span(b);
      if (left(a) != left(b)) return left(a) < left(b);
      return a < b;
    });
    for (std::size_t r = 0; r < idx.size(); ++r) routes[idx[r]].level = static_cast<Hundredths>(r + 1);
    (side ? lower_levels : upper_levels) = static_cast<Hundredths>(idx.size());
  }

  const Hundredths baseline = (lower_levels + 1) * pitch;
  const Hundredths max_x = cursor;
  const Hundredths max_y = baseline + (upper_levels + 1) * pitch;
  const Hundredths bound = to_hundredths(opts.max_extent_mm);
  if (max_x > bound || max_y > bound) {
    throw LayoutOverflow("layout extent " + format_mm(std::max(max_x, max_y)) +
                         " mm exceeds the bound of " + format_mm(bound) + " mm");
  }

  Layout l;
  l.pitch = pitch;
  l.hop = pitch / 4;
  for (std::size_t v = 0; v < nv; ++v) {
    l.traces.push_back({{pad_start[v], baseline}, {pad_end[v], baseline}});
  }
  auto track_y = [&](const Route& r) {
    return r.lower ? baseline - r.level * pitch : baseline + r.level * pitch;
  };
  for (const Route& r : routes) {
    Hundredths y = track_y(r);
    l.traces.push_back({{r.xu, baseline}, {r.xu, y}, {r.xv, y}, {r.xv, baseline}});
  }

  // A vertical leg of route b crosses the track of route a when both route on
  // the same side, the leg lies strictly inside a's span, and b climbs past
  // a's level. The climbing trace hops.
  for (std::size_t b = 0; b < routes.size(); ++b) {
    for (std::size_t a = 0; a < routes.size(); ++a) {
      if (a == b || routes[a].lower != routes[b].lower) continue;
      if (routes[b].level <= routes[a].level) continue;
      const Hundredths lo = std::min(routes[a].xu, routes[a].xv);
      const Hundredths hi = std::max(routes[a].xu, routes[a].xv);
      const Hundredths y = track_y(routes[a]);
      const std::pair<std::size_t, Hundredths> legs[] = {{0, routes[b].xu}, {2, routes[b].xv}};
      for (auto [segment, x] : legs) {
        if (x > lo && x < hi) {
          l.bridges.push_back({nv + b, segment, {x, y}, nv + a});
        }
      }
    }
  }
  std::sort(l.bridges.begin(), l.bridges.end(), [&](const Bridge& p, const Bridge& q) {
    if (p.trace != q.trace) return p.trace < q.trace;
    if (p.segment != q.segment) return p.segment < q.segment;
    const Point origin = l.traces[p.trace][p.segment];
    return distance_along(origin, p.at) < distance_along(origin, q.at);
  });
  return l;
}

GCodeProgram emit_gcode(const Layout& l, const GCodeParams& p) {
  if (!(p.feed_mm_per_min > 0.0)) throw InvalidParams("feed must be positive");
  if (!(p.travel_z_mm > p.draw_z_mm)) throw InvalidParams("travel_z must exceed draw_z");
  const Hundredths feed = to_hundredths(p.feed_mm_per_min);
  const Hundredths draw = to_hundredths(p.draw_z_mm);
  const Hundredths travel = to_hundredths(p.travel_z_mm);

  GCodeProgram prog;
  using Code = GCommand::Code;
  prog.lines.push_back({Code::G21, {}, {}, {}, {}});
  prog.lines.push_back({Code::G90, {}, {}, {}, {}});
  auto g0 = [&](Point at, Hundredths z) { prog.lines.push_back({Code::G0, at.x, at.y, z, {}}); };
  auto g1 = [&](Point at) { prog.lines.push_back({Code::G1, at.x, at.y, {}, feed}); };

  auto bridge = l.bridges.begin();
  for (std::size_t t = 0; t < l.traces.size(); ++t) {
    const Polyline& line = l.traces[t];
    if (line.empty()) continue;
    g0(line.front(), travel);
    g0(line.front(), draw);
    for (std::size_t s = 0; s + 1 < line.size(); ++s) {
      for (; bridge != l.bridges.end() && bridge->trace == t && bridge->segment == s; ++bridge) {
        HopSpan span = hop_span(line[s], line[s + 1], bridge->at, l.hop);
        g1(span.start);
        g0(span.start, travel);
        g0(span.end, travel);
        g0(span.end, draw);
      }
      g1(line[s + 1]);
    }
    g0(line.back(), travel);
  }
  return prog;
}

std::string to_text(const GCodeProgram& p) {
  std::ostringstream os;
  for (const GCommand& c : p.lines) {
    switch (c.code) {
      case GCommand::Code::G0:
        os << "G0";
        break;
      case GCommand::Code::G1:
        os << "G1";
        break;
      case GCommand::Code::G21:
        os << "G21";
        break;
      case GCommand::Code::G90:
        os << "G90";
        break;
    }
    if (c.x) os << " X" << format_mm(*c.x);
    if (c.y) os << " Y" << format_mm(*c.y);
    if (c.z) os << " Z" << format_mm(*c.z);
    if (c.f) os << " F" << format_mm(*c.f);
    os << '\n';
  }
  return os.str();
}

namespace {

// Parses "12.50", "-3", "7.5" into hundredths; rejects finer precision.
std::optional<Hundredths> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    ++i;
  }
  Hundredths whole = 0;
  std::size_t digits = 0;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++digits) {
    whole = whole * 10 + (s[i] - '0');
  }
  Hundredths frac = 0;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      if (++frac_digits > 2) return std::nullopt;
      frac = frac * 10 + (s[i] - '0');
    }
  }
  if (i != s.size() || digits + frac_digits == 0) return std::nullopt;
  if (frac_digits == 1) frac *= 10;
  Hundredths v = whole * 100 + frac;
  return neg ? -v : v;
}

}  // namespace

GCodeProgram parse_gcode(std::string_view text) {
  GCodeProgram prog;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    GCommand cmd;
    bool motion = true;
    if (word == "G0") {
      cmd.code = GCommand::Code::G0;
    } else if (word == "G1") {
      cmd.code = GCommand::Code::G1;
    } else if (word == "G21") {
      cmd.code = GCommand::Code::G21;
      motion = false;
    } else if (word == "G90") {
      cmd.code = GCommand::Code::G90;
      motion = false;
    } else {
      throw UnsupportedWord(line_no, word);
    }
    while (ls >> word) {
      if (!motion || word.size() < 2) throw UnsupportedWord(line_no, word);
      std::optional<Hundredths>* slot = nullptr;
      switch (word[0]) {
        case 'X':
          slot = &cmd.x;
          break;
        case 'Y':
          slot = &cmd.y;
          break;
        case 'Z':
          slot = &cmd.z;
          break;
        case 'F':
          slot = &cmd.f;
          break;
        default:
          throw UnsupportedWord(line_no, word);
      }
      auto value = parse_number(std::string_view(word).substr(1));
      if (!value || slot->has_value()) throw UnsupportedWord(line_no, word);
      *slot = *value;
    }
    prog.lines.push_back(cmd);
  }
  return prog;
}

std::vector<Polyline> replay_strokes(const GCodeProgram& p, Hundredths draw_z) {
  std::vector<Polyline> out;
  Point pos;
  std::optional<Hundredths> z;
  bool down = false;
  for (const GCommand& c : p.lines) {
    if (c.code != GCommand::Code::G0 && c.code != GCommand::Code::G1) continue;
    if (c.x) pos.x = *c.x;
    if (c.y) pos.y = *c.y;
    if (c.z) z = *c.z;
    const bool now_down = z && *z == draw_z;
    if (now_down && !down) {
      out.push_back({pos});
    } else if (now_down && c.code == GCommand::Code::G1) {
      out.back().push_back(pos);
    }
    down = now_down;
  }
  return out;
}

std::string to_svg(const Layout& l) {
  Hundredths max_x = 0;
  Hundredths max_y = 0;
  for (const auto& t : l.traces) {
    for (const Point& p : t) {
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
  }
  max_x += l.pitch;
  max_y += l.pitch;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_mm(max_x)
     << "mm\" height=\"" << format_mm(max_y) << "mm\" viewBox=\"0 0 " << max_x << ' '
     << max_y << "\">\n";
  // Flip y so the baseline reads bottom-up like the plotter bed.
  os << "<g transform=\"translate(0," << max_y << ") scale(1,-1)\" fill=\"none\" "
     << "stroke=\"black\" stroke-width=\"" << std::max<Hundredths>(1, l.pitch / 10) << "\">\n";
  for (const auto& stroke : l.strokes()) {
    os << "<polyline points=\"";
    for (std::size_t i = 0; i < stroke.size(); ++i) {
      os << (i ? " " : "") << stroke[i].x << ',' << stroke[i].y;
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
  for (const Bridge& b : l.bridges) {
    os << "<circle cx=\"" << b.at.x << "\" cy=\"" << (max_y - b.at.y) << "\" r=\"" << l.hop
       << "\" fill=\"none\" stroke=\"red\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wirelogic
