#include "wirelogic/pulse.h"

#include <algorithm>
#include <sstream>

#include "wirelogic/error.h"

namespace wirelogic {

std::vector<Bit> Waveform::decoded() const {
  std::vector<Bit> out;
  out.reserve(samples.size());
  for (DualBit d : samples) out.push_back(decode(d));
  return out;
}

Waveform clock(std::size_t period, std::size_t length) {
  if (period < 2 || period % 2 != 0) {
    throw InvalidPeriod("clock period must be even and at least 2, got " +
                        std::to_string(period));
  }
  if (length == 0) throw InvalidPeriod("clock length must be at least 1 tick");
  Waveform w{period, {}};
  w.samples.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    w.samples.push_back(encode(to_bit(t % period < period / 2)));
  }
  return w;
}

Waveform waveform_from_bits(const std::vector<Bit>& bits, std::size_t period) {
  if (period == 0) throw InvalidPeriod("period must be positive");
  Waveform w{period, {}};
  w.samples.reserve(bits.size());
  for (Bit b : bits) w.samples.push_back(encode(b));
  return w;
}

namespace {

void require_same_length(const Waveform& a, const Waveform& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("waveforms have " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " samples");
  }
}

}  // namespace

std::pair<Waveform, Waveform> split(const Waveform& a, const Waveform& cp) {
  require_same_length(a, cp);
  Waveform b{a.period, {}};
  Waveform c{a.period, {}};
  b.samples.reserve(a.size());
  c.samples.reserve(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    b.samples.push_back(dand(a.samples[t], cp.samples[t]));
    c.samples.push_back(dand(a.samples[t], dnot(cp.samples[t])));
  }
  return {std::move(b), std::move(c)};
}

Waveform recover(const Waveform& b, const Waveform& c) {
  require_same_length(b, c);
  Waveform out{b.period, {}};
  out.samples.reserve(b.size());
  for (std::size_t t = 0; t < b.size(); ++t) {
    out.samples.push_back(dor(b.samples[t], c.samples[t]));
  }
  return out;
}

std::string to_text(const Waveform& w) {
  std::ostringstream os;
  os << "period " << w.period << '\n';
  for (DualBit d : w.samples) os << to_int(d.alpha()) << ' ' << to_int(d.beta()) << '\n';
  return os.str();
}

Waveform parse_waveform(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Waveform w;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_header) {
      long long period = 0;
      if (first != "period" || !(ls >> period) || period <= 0) {
        throw FormatError("waveform line " + std::to_string(line_no) +
                          ": expected 'period <T>' with T > 0");
      }
      w.period = static_cast<std::size_t>(period);
      have_header = true;
      continue;
    }
    std::string second;
    std::string extra;
    if (!(ls >> second) || (ls >> extra) || (first != "0" && first != "1") ||
        (second != "0" && second != "1")) {
      throw FormatError("waveform line " + std::to_string(line_no) +
                        ": expected 'alpha beta' bits");
    }
    w.samples.push_back(DualBit::from_raw(to_bit(first == "1"), to_bit(second == "1")));
  }
  if (!have_header) throw FormatError("waveform has no 'period' header");
  if (w.samples.empty()) throw FormatError("waveform has no samples");
  return w;
}

std::string timing_diagram(const std::vector<std::pair<std::string, Waveform>>& rows) {
  std::size_t width = 0;
  for (const auto& [name, _] : rows) width = std::max(width, name.size());
  std::ostringstream os;
  for (const auto& [name, w] : rows) {
    os << name << std::string(width - name.size(), ' ') << " |";
    for (DualBit d : w.samples) os << (decode(d) == Bit::One ? '#' : '_');
    os << "|\n";
  }
  return os.str();
}

}  // namespace wirelogic
