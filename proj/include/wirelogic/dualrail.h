#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wirelogic {

enum class Bit : std::uint8_t { Zero = 0, One = 1 };

constexpr Bit to_bit(bool b) noexcept { return b ? Bit::One : Bit::Zero; }
constexpr bool to_bool(Bit b) noexcept { return b == Bit::One; }
constexpr int to_int(Bit b) noexcept { return b == Bit::One ? 1 : 0; }

constexpr Bit operator!(Bit b) noexcept { return to_bit(!to_bool(b)); }
constexpr Bit operator&(Bit a, Bit b) noexcept {
  return to_bit(to_bool(a) && to_bool(b));
}
constexpr Bit operator|(Bit a, Bit b) noexcept {
  return to_bit(to_bool(a) || to_bool(b));
}

// One logical bit carried as an inverse signal pair: alpha is the true
// signal, beta its complement. The only way to obtain a DualBit is encode(),
// the pair operations, or the validating from_raw(), so beta == !alpha holds
// for every value in the program.
class DualBit {
 public:
  static constexpr DualBit encode(Bit b) noexcept { return DualBit(b, !b); }

  // Validated entry point for pairs read from text or files.
  // Throws InvalidPair when alpha == beta.
  static DualBit from_raw(Bit alpha, Bit beta);

  constexpr Bit alpha() const noexcept { return alpha_; }
  constexpr Bit beta() const noexcept { return beta_; }

  // |A| = alpha
  constexpr Bit decode() const noexcept { return alpha_; }

  friend constexpr bool operator==(DualBit, DualBit) = default;

  friend constexpr DualBit dnot(DualBit a) noexcept;
  friend constexpr DualBit dand(DualBit a, DualBit b) noexcept;
  friend constexpr DualBit dor(DualBit a, DualBit b) noexcept;

 private:
  // Callers guarantee beta == !alpha.
  constexpr DualBit(Bit alpha, Bit beta) noexcept : alpha_(alpha), beta_(beta) {}

  Bit alpha_;
  Bit beta_;
};

constexpr DualBit encode(Bit b) noexcept { return DualBit::encode(b); }
constexpr Bit decode(DualBit d) noexcept { return d.decode(); }

// NOT is a wire swap: (alpha, beta) -> (beta, alpha).
constexpr DualBit dnot(DualBit a) noexcept { return DualBit(a.beta_, a.alpha_); }

// (alpha_a & alpha_b, beta_a | beta_b)
constexpr DualBit dand(DualBit a, DualBit b) noexcept {
  return DualBit(a.alpha_ & b.alpha_, a.beta_ | b.beta_);
}

// (alpha_a | alpha_b, beta_a & beta_b)
constexpr DualBit dor(DualBit a, DualBit b) noexcept {
  return DualBit(a.alpha_ | b.alpha_, a.beta_ & b.beta_);
}

// "(1,0)" / "(0,1)"
std::string to_string(DualBit d);
// Accepts the "(a,b)" form; throws InvalidPair for (0,0)/(1,1) and
// FormatError for anything else.
DualBit parse_dualbit(const std::string& text);

std::ostream& operator<<(std::ostream& os, Bit b);
std::ostream& operator<<(std::ostream& os, DualBit d);

}  // namespace wirelogic
