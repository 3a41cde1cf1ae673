#include "wirelogic/pulse.h"

#include <gtest/gtest.h>

#include <random>

#include "wirelogic/error.h"

using namespace wirelogic;

namespace {

std::vector<Bit> bits(std::initializer_list<int> v) {
  std::vector<Bit> out;
  for (int b : v) out.push_back(to_bit(b != 0));
  return out;
}

}  // namespace

TEST(PulseTest, ClockIsHalfHighHalfLow) {
  EXPECT_EQ(clock(2, 4).decoded(), bits({1, 0, 1, 0}));
  EXPECT_EQ(clock(4, 10).decoded(), bits({1, 1, 0, 0, 1, 1, 0, 0, 1, 1}));
  EXPECT_EQ(clock(4, 10).period, 4u);
}

TEST(PulseTest, ClockRejectsBadPeriods) {
  EXPECT_THROW(clock(0, 4), InvalidPeriod);
  EXPECT_THROW(clock(1, 4), InvalidPeriod);
  EXPECT_THROW(clock(3, 4), InvalidPeriod);
  EXPECT_THROW(clock(4, 0), InvalidPeriod);
}

TEST(PulseTest, SplitExamples) {
  Waveform cp = clock(2, 4);
  auto [b, c] = split(waveform_from_bits(bits({1, 1, 0, 1})), cp);
  EXPECT_EQ(b.decoded(), bits({1, 0, 0, 0}));
  EXPECT_EQ(c.decoded(), bits({0, 1, 0, 1}));
  EXPECT_EQ(recover(b, c).decoded(), bits({1, 1, 0, 1}));
}

TEST(PulseTest, HalvesInheritSignalPeriod) {
  Waveform a = waveform_from_bits(bits({1, 0, 1, 1}), 3);
  auto [b, c] = split(a, clock(2, 4));
  EXPECT_EQ(b.period, 3u);
  EXPECT_EQ(c.period, 3u);
}

TEST(PulseTest, RandomSplitRecoverIdentityAndDisjointness) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t len = 1 + rng() % 64;
    std::size_t period = 2 * (1 + rng() % 8);
    std::vector<Bit> a_bits;
    for (std::size_t t = 0; t < len; ++t) a_bits.push_back(to_bit(rng() & 1));
    Waveform a = waveform_from_bits(a_bits);
    Waveform cp = clock(period, len);
    auto [b, c] = split(a, cp);
    ASSERT_EQ(recover(b, c), a);
    for (std::size_t t = 0; t < len; ++t) {
      // Direct oracle on plain booleans.
      bool at = to_bool(a_bits[t]);
      bool ct = (t % period) < period / 2;
      EXPECT_EQ(to_bool(b.decoded()[t]), at && ct);
      EXPECT_EQ(to_bool(c.decoded()[t]), at && !ct);
      EXPECT_FALSE(to_bool(b.decoded()[t]) && to_bool(c.decoded()[t]));
      // Every sample stays a valid dual-rail pair.
      EXPECT_NE(b.samples[t].alpha(), b.samples[t].beta());
      EXPECT_NE(c.samples[t].alpha(), c.samples[t].beta());
    }
  }
}

TEST(PulseTest, LengthMismatch) {
  Waveform a = waveform_from_bits(bits({1, 0, 1}));
  EXPECT_THROW(split(a, clock(2, 4)), LengthMismatch);
  EXPECT_THROW(recover(a, waveform_from_bits(bits({1}))), LengthMismatch);
}

TEST(PulseTest, TextRoundTrip) {
  Waveform w = clock(4, 6);
  std::string text = to_text(w);
  EXPECT_EQ(text, "period 4\n1 0\n1 0\n0 1\n0 1\n1 0\n1 0\n");
  EXPECT_EQ(parse_waveform(text), w);
}

TEST(PulseTest, TextRejectsInvalidPairs) {
  EXPECT_THROW(parse_waveform("period 2\n1 1\n"), InvalidPair);
  EXPECT_THROW(parse_waveform("period 2\n0 0\n"), InvalidPair);
  EXPECT_THROW(parse_waveform("1 0\n"), FormatError);
  EXPECT_THROW(parse_waveform("period 2\n1 x\n"), FormatError);
}

TEST(PulseTest, TimingDiagram) {
  std::string d = timing_diagram({{"CP", clock(2, 4)}, {"A", waveform_from_bits(bits({1, 1, 0, 1}))}});
  EXPECT_NE(d.find("|#_#_|"), std::string::npos);
  EXPECT_NE(d.find("|##_#|"), std::string::npos);
}
