#include "wirelogic/graphsim.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "wirelogic/error.h"

namespace wirelogic {

namespace {

Edge drive_edge(const PinGroup& g, Bit value) {
  if (const auto* p = std::get_if<PinGroup3>(&g)) {
    return {p->g, value == Bit::One ? p->t : p->f, EdgeKind::Directed};
  }
  const auto& q = std::get<PinGroup4>(g);
  return value == Bit::One ? Edge{q.tp, q.tm, EdgeKind::Directed}
                           : Edge{q.fp, q.fm, EdgeKind::Directed};
}

Graph with_edges(const Graph& base, const std::vector<Edge>& extra) {
  Graph g = base;
  for (const Edge& e : extra) g.add_edge(e.u, e.v, e.kind);
  return g;
}

std::string path_labels(const Graph& g, const Path& p) {
  std::string out;
  for (VertexId v : p) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

}  // namespace

Graph apply_assignment(const StructuralCircuit& c, const Assignment& a) {
  std::vector<Edge> drives;
  for (const auto& b : c.inputs) {
    auto it = a.find(b.variable);
    if (it == a.end()) throw MissingVariable("no value for variable '" + b.variable + "'");
    for (const auto& g : b.occurrences) drives.push_back(drive_edge(g, it->second));
  }
  return with_edges(c.graph, drives);
}

std::string to_string(Reading r) {
  switch (r) {
    case Reading::Zero:
      return "Zero";
    case Reading::One:
      return "One";
    case Reading::ShortFault:
      return "ShortFault";
    case Reading::OpenFault:
      return "OpenFault";
  }
  return "?";
}

OutputReading read_output(const Graph& g, const PinGroup& out) {
  Adjacency adj(g);
  OutputReading r;
  if (const auto* p = std::get_if<PinGroup3>(&out)) {
    r.true_witness = dfs_path(adj, p->g, p->t);
    r.inverted_witness = dfs_path(adj, p->g, p->f);
  } else {
    const auto& q = std::get<PinGroup4>(out);
    r.true_witness = dfs_path(adj, q.tp, q.tm);
    r.inverted_witness = dfs_path(adj, q.fp, q.fm);
  }
  const bool t = r.true_witness.has_value();
  const bool f = r.inverted_witness.has_value();
  r.value = t && f   ? Reading::ShortFault
            : t      ? Reading::One
            : f      ? Reading::Zero
                     : Reading::OpenFault;
  return r;
}

OutputReading simulate(const StructuralCircuit& c, const Assignment& a) {
  return read_output(apply_assignment(c, a), c.output_group);
}

AuditReport audit(const StructuralCircuit& c) {
  AuditReport report;
  const auto out_terms = terminals(c.output_group);
  for (const auto& b : c.inputs) {
    for (std::size_t k = 0; k < b.occurrences.size(); ++k) {
      const PinGroup& grp = b.occurrences[k];
      for (Bit polarity : {Bit::Zero, Bit::One}) {
        Edge drive = drive_edge(grp, polarity);
        Graph g = with_edges(c.graph, {drive});
        Adjacency adj(g);
        const VertexId start[] = {drive.u};
        auto seen = reachable_from(adj, start);
        std::string start_name =
            b.variable + "#" + std::to_string(k + 1) + "=" + std::to_string(to_int(polarity));
        for (VertexId t : out_terms) {
          report.rows.push_back({start_name, c.graph.label(t), seen[t]});
        }
      }
    }
  }
  return report;
}

AuditReport audit_joint(const StructuralCircuit& c) {
  AuditReport report;
  Adjacency adj(c.graph);
  const auto out_terms = terminals(c.output_group);
  const std::size_t width = out_terms.size();
  for (const auto& b : c.inputs) {
    for (std::size_t role = 0; role < width; ++role) {
      std::vector<VertexId> starts;
      std::string start_name;
      for (const auto& grp : b.occurrences) {
        VertexId v = terminals(grp)[role];
        starts.push_back(v);
        if (!start_name.empty()) start_name += ',';
        start_name += c.graph.label(v);
      }
      auto seen = reachable_from(adj, starts);
      for (VertexId t : out_terms) {
        report.rows.push_back({start_name, c.graph.label(t), seen[t]});
      }
    }
  }
  return report;
}

std::size_t VerificationReport::fault_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      mismatches.begin(), mismatches.end(), [](const Mismatch& m) {
        return m.got == Reading::ShortFault || m.got == Reading::OpenFault;
      }));
}

namespace {

struct Plan {
  bool exhaustive = false;
  std::vector<Assignment> assignments;
};

Plan plan_assignments(const Netlist& n, const VerifyOptions& opts) {
  const std::size_t width = n.inputs.size();
  bool exhaustive = false;
  switch (opts.mode) {
    case VerifyMode::Exhaustive:
      if (width > kTruthTableCap) {
        throw ExplicitCapExceeded(std::to_string(width) +
                                  " inputs exceed the exhaustive cap of " +
                                  std::to_string(kTruthTableCap));
      }
      exhaustive = true;
      break;
    case VerifyMode::Auto:
      exhaustive = width <= kExhaustiveVerifyLimit;
      break;
    case VerifyMode::Sampled:
      break;
  }
  Plan plan{exhaustive, {}};
  if (exhaustive) {
    const std::uint64_t count = std::uint64_t{1} << width;
    plan.assignments.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      plan.assignments.push_back(assignment_from_index(n.inputs, i));
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    plan.assignments.reserve(opts.samples);
    for (std::size_t s = 0; s < opts.samples; ++s) {
      Assignment a;
      for (const auto& v : n.inputs) a[v] = to_bit(rng() & 1U);
      plan.assignments.push_back(std::move(a));
    }
  }
  return plan;
}

std::vector<OutputReading> simulate_all(const StructuralCircuit& c,
                                        const std::vector<Assignment>& assignments,
                                        bool complement_drives, unsigned workers) {
  std::vector<OutputReading> out(assignments.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = simulate(c, complement_drives ? complement(assignments[i]) : assignments[i]);
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t per_worker = 256;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, (assignments.size() + per_worker - 1) / per_worker));
  if (workers <= 1) {
    work(0, assignments.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (assignments.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(assignments.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

VerificationReport verify(const StructuralCircuit& c, const Netlist& n,
                          const VerifyOptions& opts) {
  Plan plan = plan_assignments(n, opts);
  auto readings = simulate_all(c, plan.assignments, opts.complement_drives, opts.workers);
  VerificationReport report;
  report.exhaustive = plan.exhaustive;
  report.checked = plan.assignments.size();
  for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
    Bit expected = eval(n, plan.assignments[i]);
    Reading want = expected == Bit::One ? Reading::One : Reading::Zero;
    if (readings[i].value == want) {
      ++report.matched;
    } else {
      report.mismatches.push_back({plan.assignments[i], expected, readings[i].value});
    }
  }
  return report;
}

std::string to_csv(const AuditReport& r) {
  std::ostringstream os;
  os << "start,end,result\n";
  for (const auto& row : r.rows) {
    os << '"' << row.start << "\"," << row.end << ',' << (row.reachable ? 'O' : 'X')
       << '\n';
  }
  return os.str();
}

std::string verification_csv(const StructuralCircuit& c, const Netlist& n,
                             const VerifyOptions& opts) {
  Plan plan = plan_assignments(n, opts);
  std::ostringstream os;
  os << "startend";
  for (const auto& v : n.inputs) os << ',' << v;
  os << ",result\n";

  const auto out = terminals(c.output_group);
  // (source, goal) for the true rail, then the inverted rail.
  std::pair<VertexId, VertexId> queries[2];
  if (c.style == Style::ThreePin) {
    queries[0] = {out[1], out[0]};
    queries[1] = {out[1], out[2]};
  } else {
    queries[0] = {out[0], out[1]};
    queries[1] = {out[2], out[3]};
  }
  auto readings = simulate_all(c, plan.assignments, opts.complement_drives, opts.workers);
  for (int q = 0; q < 2; ++q) {
    const std::string head =
        c.graph.label(queries[q].first) + "->" + c.graph.label(queries[q].second);
    for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
      os << head;
      for (const auto& v : n.inputs) os << ',' << to_int(plan.assignments[i].at(v));
      const auto& witness = q == 0 ? readings[i].true_witness : readings[i].inverted_witness;
      Graph driven = apply_assignment(
          c, opts.complement_drives ? complement(plan.assignments[i]) : plan.assignments[i]);
      os << ',' << (witness ? path_labels(driven, *witness) : std::string("X")) << '\n';
    }
  }
  return os.str();
}

std::string summary(const VerificationReport& r) {
  std::ostringstream os;
  os << r.matched << '/' << r.checked << " assignments match"
     << (r.exhaustive ? " (exhaustive)" : " (sampled)");
  if (!r.passed()) {
    os << "; " << r.mismatches.size() << " mismatches";
    if (std::size_t f = r.fault_count()) os << ", " << f << " faults";
  }
  return os.str();
}

std::string export_legacy(const Graph& g, VertexId start) {
  if (start >= g.vertex_count()) throw InvalidGraph("start vertex out of range");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) {
    pairs.emplace_back(e.u, e.v);
    if (e.kind == EdgeKind::Undirected) pairs.emplace_back(e.v, e.u);
  }
  std::ostringstream os;
  os << g.vertex_count() << ' ' << pairs.size() << '\n';
  for (auto [u, v] : pairs) os << (u + 1) << ' ' << (v + 1) << '\n';
  os << (start + 1) << '\n';
  return os.str();
}

}  // namespace wirelogic
