#pragma once

#include <cstdint>
#include <string>

#include "wirelogic/netlist.h"

namespace wirelogic {

struct GateCounts {
  std::uint64_t n = 0;  // distinct input signals
  std::uint64_t k = 0;  // AND/OR operations
  std::uint64_t i = 0;  // NOT operations

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct RCParams {
  double resistance = 0.0;   // ohms
  double capacitance = 0.0;  // farads
};

GateCounts counts_from_netlist(const Netlist& n);
// Total variable occurrences in the tree; reported alongside n.
std::uint64_t input_occurrences(const Netlist& n);

// Transistor count of a semiconductor implementation: two per AND/OR, one
// per NOT, one switch per input. f(n,k,i) = n + 2k + i.
constexpr std::uint64_t semiconductor_devices(const GateCounts& c) noexcept {
  return c.n + 2 * c.k + c.i;
}

// Structural implementation only switches its inputs. g(n,k,i) = n.
constexpr std::uint64_t structural_devices(const GateCounts& c) noexcept { return c.n; }

// tau = R * C in seconds. Throws InvalidParams unless both are positive.
double rc_delay(const RCParams& p);

struct CostReport {
  std::string netlist;
  GateCounts counts;
  std::uint64_t occurrences = 0;
  std::uint64_t semiconductor = 0;
  std::uint64_t structural = 0;
  double ratio = 0.0;  // semiconductor / structural
  double tau_semiconductor = 0.0;
  double tau_structural = 0.0;
  bool structural_dominates = false;
};

CostReport compare(const Netlist& n, const RCParams& semiconductor,
                   const RCParams& structural);

std::string to_csv(const CostReport& r);
std::string to_text(const CostReport& r);

}  // namespace wirelogic
