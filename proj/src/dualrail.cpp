#include "wirelogic/dualrail.h"

#include <ostream>

#include "wirelogic/error.h"

namespace wirelogic {

DualBit DualBit::from_raw(Bit alpha, Bit beta) {
  if (alpha == beta) {
    throw InvalidPair("raw pair (" + std::to_string(to_int(alpha)) + "," +
                      std::to_string(to_int(beta)) +
                      ") violates beta == NOT alpha");
  }
  return DualBit(alpha, beta);
}

std::string to_string(DualBit d) {
  return d.alpha() == Bit::One ? "(1,0)" : "(0,1)";
}

DualBit parse_dualbit(const std::string& text) {
  auto bit_at = [&](std::size_t i) {
    if (text[i] != '0' && text[i] != '1') {
      throw FormatError("expected '(a,b)' pair, got '" + text + "'");
    }
    return to_bit(text[i] == '1');
  };
  if (text.size() != 5 || text[0] != '(' || text[2] != ',' || text[4] != ')') {
    throw FormatError("expected '(a,b)' pair, got '" + text + "'");
  }
  return DualBit::from_raw(bit_at(1), bit_at(3));
}

std::ostream& operator<<(std::ostream& os, Bit b) { return os << to_int(b); }

std::ostream& operator<<(std::ostream& os, DualBit d) {
  return os << to_string(d);
}

}  // namespace wirelogic
