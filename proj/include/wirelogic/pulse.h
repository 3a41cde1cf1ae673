#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wirelogic/dualrail.h"

namespace wirelogic {

// Time-sampled dual-rail signal, one DualBit per tick.
struct Waveform {
  std::size_t period = 1;  // ticks
  std::vector<DualBit> samples;

  std::size_t size() const noexcept { return samples.size(); }
  std::vector<Bit> decoded() const;

  friend bool operator==(const Waveform&, const Waveform&) = default;
};

// Square wave: 1 for the first half of every period, 0 for the second.
// Throws InvalidPeriod unless period is even and >= 2, or when length is 0.
Waveform clock(std::size_t period, std::size_t length);

// Constant or arbitrary signal built from decoded bits.
Waveform waveform_from_bits(const std::vector<Bit>& bits, std::size_t period = 1);

// B_t = A_t AND CP_t, C_t = A_t AND NOT CP_t. The halves inherit a's period.
// Throws LengthMismatch.
std::pair<Waveform, Waveform> split(const Waveform& a, const Waveform& cp);

// out_t = B_t OR C_t. Throws LengthMismatch.
Waveform recover(const Waveform& b, const Waveform& c);

// `period <T>` header, then one `alpha beta` line per sample.
std::string to_text(const Waveform& w);
// Throws FormatError, or InvalidPair for a sample with alpha == beta.
Waveform parse_waveform(std::string_view text);

// One row per named waveform: "A   |##__##__|".
std::string timing_diagram(const std::vector<std::pair<std::string, Waveform>>& rows);

}  // namespace wirelogic
