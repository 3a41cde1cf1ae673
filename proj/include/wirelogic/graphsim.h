#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wirelogic/graph.h"
#include "wirelogic/netlist.h"
#include "wirelogic/weaver.h"

namespace wirelogic {

// Copy of the circuit graph plus one directed drive edge per occurrence
// group: g->t for 1 and g->f for 0 (3-pin), tp->tm for 1 and fp->fm for 0
// (4-pin). Throws MissingVariable.
Graph apply_assignment(const StructuralCircuit& c, const Assignment& a);

enum class Reading : std::uint8_t { Zero, One, ShortFault, OpenFault };

std::string to_string(Reading r);

struct OutputReading {
  Reading value = Reading::OpenFault;
  std::optional<Path> true_witness;      // path to the true rail, if reached
  std::optional<Path> inverted_witness;  // path to the inverted rail, if reached

  bool is_fault() const noexcept {
    return value == Reading::ShortFault || value == Reading::OpenFault;
  }
};

// 3-pin: search g->t and g->f. 4-pin: tp->tm and fp->fm.
OutputReading read_output(const Graph& g, const PinGroup& out);
OutputReading simulate(const StructuralCircuit& c, const Assignment& a);

struct AuditRow {
  std::string start;  // e.g. "A#1:1" (occurrence, polarity) or "A.T" (joint)
  std::string end;    // output terminal role, e.g. "T"
  bool reachable = false;
};

struct AuditReport {
  std::vector<AuditRow> rows;

  bool empty() const noexcept { return rows.empty(); }
};

// Per-occurrence audit. For every input occurrence and both drive polarities,
// only that drive is applied and reachability from the driven pair to each
// output terminal is recorded. Rows are ordered by (variable, occurrence,
// polarity, terminal).
AuditReport audit(const StructuralCircuit& c);

// Joint audit over the undriven graph: for each variable and each terminal
// role, start from that terminal of every occurrence at once and record
// reachability to each output terminal.
AuditReport audit_joint(const StructuralCircuit& c);

struct Mismatch {
  Assignment assignment;
  Bit expected;
  Reading got;
};

enum class VerifyMode : std::uint8_t { Auto, Exhaustive, Sampled };

inline constexpr std::size_t kExhaustiveVerifyLimit = 16;
inline constexpr std::size_t kVerifySamples = 10000;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Auto;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kVerifySamples;
  // Drive the circuit with the complement of every assignment while
  // comparing against the netlist evaluated on the assignment itself.
  bool complement_drives = false;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct VerificationReport {
  bool exhaustive = false;
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::vector<Mismatch> mismatches;  // includes fault readings

  bool passed() const noexcept { return mismatches.empty(); }
  std::size_t fault_count() const noexcept;
};

// Simulates every assignment (exhaustive up to kExhaustiveVerifyLimit inputs
// in Auto mode, otherwise seeded uniform samples) and compares the decoded
// reading with eval(). Mismatch order follows assignment order.
VerificationReport verify(const StructuralCircuit& c, const Netlist& n,
                          const VerifyOptions& opts = {});

// "start,end,result" with O/X results.
std::string to_csv(const AuditReport& r);
// "startend,A,B,...,result" rows for every checked assignment and both output
// rails, mirroring the input/output test table.
std::string verification_csv(const StructuralCircuit& c, const Netlist& n,
                             const VerifyOptions& opts = {});
std::string summary(const VerificationReport& r);

// Edge list for the stack-based reference program: `n m`, then m directed
// `v1 v2` pairs (undirected edges as two pairs), then the start vertex.
// Vertices are numbered from 1 as that program expects.
std::string export_legacy(const Graph& g, VertexId start);

}  // namespace wirelogic
