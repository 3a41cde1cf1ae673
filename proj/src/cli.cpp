#include "wirelogic/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wirelogic/costmodel.h"
#include "wirelogic/error.h"
#include "wirelogic/fabricate.h"
#include "wirelogic/graphsim.h"
#include "wirelogic/netlist.h"
#include "wirelogic/pulse.h"
#include "wirelogic/weaver.h"

namespace wirelogic::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot write '" + path + "'");
  f << text;
}

Style parse_style(int s) { return s == 4 ? Style::FourPin : Style::ThreePin; }

Assignment parse_sets(const std::vector<std::string>& sets) {
  Assignment a;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != s.size() ||
        (s[eq + 1] != '0' && s[eq + 1] != '1')) {
      throw CLI::ValidationError("--set", "expected NAME=0 or NAME=1, got '" + s + "'");
    }
    a[s.substr(0, eq)] = to_bit(s[eq + 1] == '1');
  }
  return a;
}

std::string path_text(const Graph& g, const Path& p) {
  std::string s;
  for (VertexId v : p) {
    if (!s.empty()) s += ' ';
    s += g.label(v);
  }
  return s;
}

struct Options {
  std::string input;
  std::string second;
  std::string output;
  std::string format = "text";
  int style = 3;
  std::vector<std::string> sets;
  std::uint64_t seed = kDefaultSeed;
  std::string mode = "auto";
  bool complement = false;
  bool joint = false;
  std::size_t period = 4;
  std::size_t length = 16;
  std::string signal;
  double pitch = 2.54;
  double feed = 600.0;
  double draw_z = 0.2;
  double travel_z = 2.0;
  std::string svg;
  double r_semi = 100.0;
  double c_semi = 1e-6;
  double r_struct = 1.0;
  double c_struct = 1e-6;
};

int cmd_parse(const Options& o, std::ostream& out) {
  emit(to_string(parse(read_file(o.input))) + "\n", o.output, out);
  return kOk;
}

int cmd_truth_table(const Options& o, std::ostream& out) {
  emit(to_csv(truth_table(parse(read_file(o.input)))), o.output, out);
  return kOk;
}

int cmd_compile(const Options& o, std::ostream& out) {
  emit(to_text(compile(parse(read_file(o.input)), parse_style(o.style))), o.output, out);
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  StructuralCircuit c = read_circuit(read_file(o.input));
  Assignment a = parse_sets(o.sets);
  Graph driven = apply_assignment(c, a);
  OutputReading r = read_output(driven, c.output_group);
  std::ostringstream os;
  os << to_string(r.value) << '\n';
  if (r.true_witness) os << "true rail: " << path_text(driven, *r.true_witness) << '\n';
  if (r.inverted_witness) {
    os << "inverted rail: " << path_text(driven, *r.inverted_witness) << '\n';
  }
  emit(os.str(), o.output, out);
  return r.is_fault() ? kFault : kOk;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.seed = o.seed;
  v.complement_drives = o.complement;
  v.mode = o.mode == "exhaustive" ? VerifyMode::Exhaustive
           : o.mode == "sampled"  ? VerifyMode::Sampled
                                  : VerifyMode::Auto;
  return v;
}

int cmd_verify(const Options& o, std::ostream& out) {
  StructuralCircuit c = read_circuit(read_file(o.input));
  Netlist n = parse(read_file(o.second));
  VerifyOptions opts = verify_options(o);
  VerificationReport r = verify(c, n, opts);
  if (o.format == "csv") {
    emit(verification_csv(c, n, opts), o.output, out);
  } else {
    std::ostringstream os;
    os << summary(r) << '\n';
    for (const auto& m : r.mismatches) {
      for (const auto& [k, v] : m.assignment) os << k << '=' << to_int(v) << ' ';
      os << "expected " << to_int(m.expected) << " got " << to_string(m.got) << '\n';
    }
    emit(os.str(), o.output, out);
  }
  if (r.fault_count() > 0) return kFault;
  return r.passed() ? kOk : kVerificationFailed;
}

int cmd_audit(const Options& o, std::ostream& out) {
  StructuralCircuit c = read_circuit(read_file(o.input));
  AuditReport r = o.joint ? audit_joint(c) : audit(c);
  if (o.format == "csv") {
    emit(to_csv(r), o.output, out);
    return kOk;
  }
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << row.start << " -> " << row.end << ' ' << (row.reachable ? 'O' : 'X') << '\n';
  }
  os << r.rows.size() << " rows\n";
  emit(os.str(), o.output, out);
  return kOk;
}

int cmd_mirror_check(const Options& o, std::ostream& out) {
  Netlist n = parse(read_file(o.input));
  Expr m = mirror(n.body);
  TruthTable table = truth_table(n);
  std::size_t expr_ok = 0;
  for (const auto& row : table.rows) {
    if (eval(m, complement(row.assignment)) == !row.out) ++expr_ok;
  }
  StructuralCircuit mirrored = mirror_circuit(compile(n, parse_style(o.style)));
  Netlist negated{n.name, n.inputs, Expr::make_not(n.body)};
  VerifyOptions opts;
  opts.mode = VerifyMode::Exhaustive;
  opts.complement_drives = true;
  VerificationReport r = verify(mirrored, negated, opts);

  const bool expr_pass = expr_ok == table.rows.size();
  std::ostringstream os;
  os << "expression mirror: " << expr_ok << '/' << table.rows.size()
     << (expr_pass ? " pass" : " FAIL") << '\n'
     << "circuit mirror:    " << summary(r) << (r.passed() ? " pass" : " FAIL") << '\n';
  emit(os.str(), o.output, out);
  return expr_pass && r.passed() ? kOk : kVerificationFailed;
}

int cmd_pulse_demo(const Options& o, std::ostream& out) {
  Waveform cp = clock(o.period, o.length);
  std::vector<Bit> bits;
  if (!o.signal.empty()) {
    for (char ch : o.signal) {
      if (ch != '0' && ch != '1') {
        throw CLI::ValidationError("--signal", "expected a string of 0/1");
      }
      bits.push_back(to_bit(ch == '1'));
    }
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::size_t t = 0; t < o.length; ++t) bits.push_back(to_bit(rng() & 1U));
  }
  Waveform a = waveform_from_bits(bits, o.period);
  auto [b, c] = split(a, cp);
  Waveform back = recover(b, c);
  bool disjoint = true;
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (decode(b.samples[t]) == Bit::One && decode(c.samples[t]) == Bit::One) disjoint = false;
  }
  const bool identity = back == a;
  std::ostringstream os;
  os << timing_diagram({{"A", a}, {"CP", cp}, {"B", b}, {"C", c}, {"B|C", back}});
  os << "identity: " << (identity ? "pass" : "FAIL") << '\n'
     << "disjoint: " << (disjoint ? "pass" : "FAIL") << '\n';
  emit(os.str(), o.output, out);
  return identity && disjoint ? kOk : kVerificationFailed;
}

int cmd_cost(const Options& o, std::ostream& out) {
  CostReport r = compare(parse(read_file(o.input)), {o.r_semi, o.c_semi},
                         {o.r_struct, o.c_struct});
  emit(o.format == "csv" ? to_csv(r) : to_text(r), o.output, out);
  return kOk;
}

int cmd_gcode(const Options& o, std::ostream& out) {
  StructuralCircuit c = read_circuit(read_file(o.input));
  Layout l = layout(c, o.pitch);
  GCodeProgram p = emit_gcode(l, {o.feed, o.draw_z, o.travel_z});
  emit(to_text(p), o.output, out);
  if (!o.svg.empty()) emit(to_svg(l), o.svg, out);
  return kOk;
}

int cmd_export_legacy(const Options& o, std::ostream& out) {
  StructuralCircuit c = read_circuit(read_file(o.input));
  Graph g = o.sets.empty() ? c.graph : apply_assignment(c, parse_sets(o.sets));
  auto out_terms = terminals(c.output_group);
  VertexId start = c.style == Style::ThreePin ? out_terms[1] : out_terms[0];
  emit(export_legacy(g, start), o.output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile boolean netlists into connection-encoded wiring graphs, "
               "simulate them by reachability, and emit cost reports and G-code."};
  app.name("wirelogic");
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write the result to this file");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}));
  };
  auto add_style = [&](CLI::App* sub) {
    sub->add_option("--style", o.style, "Pin-group style")->check(CLI::IsMember({3, 4}));
  };

  auto* parse_cmd = app.add_subcommand("parse", "Print a netlist in canonical form");
  parse_cmd->add_option("netlist", o.input)->required();
  add_output(parse_cmd);

  auto* tt_cmd = app.add_subcommand("truth-table", "Exhaustive truth table as CSV");
  tt_cmd->add_option("netlist", o.input)->required();
  add_output(tt_cmd);

  auto* compile_cmd = app.add_subcommand("compile", "Compile a netlist into a circuit file");
  compile_cmd->add_option("netlist", o.input)->required();
  add_style(compile_cmd);
  add_output(compile_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "Drive a circuit and read its output");
  sim_cmd->add_option("circuit", o.input)->required();
  sim_cmd->add_option("--set", o.sets, "Input value, NAME=0|1 (repeatable)");
  add_output(sim_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a circuit against a netlist");
  verify_cmd->add_option("circuit", o.input)->required();
  verify_cmd->add_option("netlist", o.second)->required();
  verify_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  verify_cmd->add_option("--seed", o.seed, "Sampling seed");
  verify_cmd->add_flag("--complement", o.complement,
                       "Drive the complement of every assignment");
  add_format(verify_cmd);
  add_output(verify_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "Input-to-output reachability matrix");
  audit_cmd->add_option("circuit", o.input)->required();
  audit_cmd->add_flag("--joint", o.joint, "Start from all occurrences of a variable at once");
  add_format(audit_cmd);
  add_output(audit_cmd);

  auto* mirror_cmd = app.add_subcommand("mirror-check", "Check the De Morgan mirror property");
  mirror_cmd->add_option("netlist", o.input)->required();
  add_style(mirror_cmd);
  add_output(mirror_cmd);

  auto* pulse_cmd = app.add_subcommand("pulse-demo", "Clocked split/recover timing diagram");
  pulse_cmd->add_option("--period", o.period, "Clock period in ticks (even)");
  pulse_cmd->add_option("--length", o.length, "Number of ticks");
  pulse_cmd->add_option("--signal", o.signal, "Input bits, e.g. 1101; random when omitted");
  pulse_cmd->add_option("--seed", o.seed, "Seed for the random signal");
  add_output(pulse_cmd);

  auto* cost_cmd = app.add_subcommand("cost", "Device counts and RC delay comparison");
  cost_cmd->add_option("netlist", o.input)->required();
  cost_cmd->add_option("--semi-r", o.r_semi, "Semiconductor resistance (ohm)");
  cost_cmd->add_option("--semi-c", o.c_semi, "Semiconductor capacitance (F)");
  cost_cmd->add_option("--struct-r", o.r_struct, "Structural resistance (ohm)");
  cost_cmd->add_option("--struct-c", o.c_struct, "Structural capacitance (F)");
  add_format(cost_cmd);
  add_output(cost_cmd);

  auto* gcode_cmd = app.add_subcommand("gcode", "Plot a circuit layout as G-code");
  gcode_cmd->add_option("circuit", o.input)->required();
  gcode_cmd->add_option("--pitch", o.pitch, "Grid pitch (mm)");
  gcode_cmd->add_option("--feed", o.feed, "Draw feed rate (mm/min)");
  gcode_cmd->add_option("--draw-z", o.draw_z, "Pen-down height (mm)");
  gcode_cmd->add_option("--travel-z", o.travel_z, "Pen-up height (mm)");
  gcode_cmd->add_option("--svg", o.svg, "Also write an SVG preview");
  add_output(gcode_cmd);

  auto* legacy_cmd = app.add_subcommand("export-legacy", "Edge list for the reference DFS program");
  legacy_cmd->add_option("circuit", o.input)->required();
  legacy_cmd->add_option("--set", o.sets, "Apply input drives, NAME=0|1 (repeatable)");
  add_output(legacy_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(o, out);
    if (tt_cmd->parsed()) return cmd_truth_table(o, out);
    if (compile_cmd->parsed()) return cmd_compile(o, out);
    if (sim_cmd->parsed()) return cmd_simulate(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (audit_cmd->parsed()) return cmd_audit(o, out);
    if (mirror_cmd->parsed()) return cmd_mirror_check(o, out);
    if (pulse_cmd->parsed()) return cmd_pulse_demo(o, out);
    if (cost_cmd->parsed()) return cmd_cost(o, out);
    if (gcode_cmd->parsed()) return cmd_gcode(o, out);
    if (legacy_cmd->parsed()) return cmd_export_legacy(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kModuleError;
  }
  return kUsage;
}

}  // namespace wirelogic::cli
