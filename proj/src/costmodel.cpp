#include "wirelogic/costmodel.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "wirelogic/error.h"

namespace wirelogic {

namespace {

void count_nodes(const Expr& e, GateCounts& c, std::uint64_t& occurrences) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      ++occurrences;
      return;
    case Expr::Kind::Not:
      ++c.i;
      count_nodes(e.child(), c, occurrences);
      return;
    case Expr::Kind::And:
    case Expr::Kind::Or:
      ++c.k;
      count_nodes(e.left(), c, occurrences);
      count_nodes(e.right(), c, occurrences);
      return;
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << v;
  return os.str();
}

std::string format_short(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

GateCounts counts_from_netlist(const Netlist& n) {
  GateCounts c;
  std::uint64_t occurrences = 0;
  count_nodes(n.body, c, occurrences);
  c.n = n.inputs.size();
  return c;
}

std::uint64_t input_occurrences(const Netlist& n) {
  GateCounts c;
  std::uint64_t occurrences = 0;
  count_nodes(n.body, c, occurrences);
  return occurrences;
}

double rc_delay(const RCParams& p) {
  if (!(p.resistance > 0.0) || !(p.capacitance > 0.0) || !std::isfinite(p.resistance) ||
      !std::isfinite(p.capacitance)) {
    throw InvalidParams("resistance and capacitance must be positive and finite");
  }
  return p.resistance * p.capacitance;
}

CostReport compare(const Netlist& n, const RCParams& semiconductor,
                   const RCParams& structural) {
  CostReport r;
  r.netlist = n.name;
  r.counts = counts_from_netlist(n);
  r.occurrences = input_occurrences(n);
  r.semiconductor = semiconductor_devices(r.counts);
  r.structural = structural_devices(r.counts);
  r.ratio = r.structural == 0 ? std::numeric_limits<double>::quiet_NaN()
                              : static_cast<double>(r.semiconductor) /
                                    static_cast<double>(r.structural);
  r.tau_semiconductor = rc_delay(semiconductor);
  r.tau_structural = rc_delay(structural);
  r.structural_dominates =
      r.structural <= r.semiconductor && r.tau_structural <= r.tau_semiconductor;
  return r;
}

std::string to_csv(const CostReport& r) {
  std::ostringstream os;
  os << "netlist,n,k,i,occurrences,semiconductor_devices,structural_devices,ratio,"
        "tau_semiconductor,tau_structural,structural_dominates\n";
  os << r.netlist << ',' << r.counts.n << ',' << r.counts.k << ',' << r.counts.i << ','
     << r.occurrences << ',' << r.semiconductor << ',' << r.structural << ','
     << format_double(r.ratio) << ',' << format_double(r.tau_semiconductor) << ','
     << format_double(r.tau_structural) << ',' << (r.structural_dominates ? 1 : 0)
     << '\n';
  return os.str();
}

std::string to_text(const CostReport& r) {
  std::ostringstream os;
  os << "netlist:              " << r.netlist << '\n'
     << "inputs (n):           " << r.counts.n << " (" << r.occurrences
     << " occurrences)\n"
     << "AND/OR ops (k):       " << r.counts.k << '\n'
     << "NOT ops (i):          " << r.counts.i << '\n'
     << "semiconductor f:      " << r.semiconductor << '\n'
     << "structural g:         " << r.structural << '\n'
     << "ratio f/g:            " << format_short(r.ratio) << '\n'
     << "tau semiconductor:    " << format_short(r.tau_semiconductor) << " s\n"
     << "tau structural:       " << format_short(r.tau_structural) << " s\n"
     << "structural dominates: " << (r.structural_dominates ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace wirelogic
