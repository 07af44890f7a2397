#include "cliffroots/signature.hpp"

#include "cliffroots/errors.hpp"

namespace cliffroots {

std::string_view ring_name(Ring ring) {
  switch (ring) {
    case Ring::R: return "R";
    case Ring::R2: return "R^2";
    case Ring::H: return "H";
    case Ring::H2: return "H^2";
    case Ring::C: return "C";
  }
  return "?";
}

Signature::Signature(int p, int q, int max_n) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw UnsupportedSignature("signature counts must be non-negative");
  if (p + q < 2)
    throw UnsupportedSignature("Cl(" + std::to_string(p) + "," + std::to_string(q) +
                               ") has dimension < 4; only algebras of dimension >= 4 are supported");
  if (p + q > max_n)
    throw UnsupportedSignature("n = " + std::to_string(p + q) + " exceeds the limit " +
                               std::to_string(max_n) + " (raise max_n to override)");
  if (p + q > 31) throw UnsupportedSignature("n > 31 does not fit the blade bitmask");
}

Ring Signature::ring() const {
  static constexpr Ring table[8] = {Ring::R, Ring::R2, Ring::R, Ring::C,
                                    Ring::H, Ring::H2, Ring::H, Ring::C};
  return table[((s() % 8) + 8) % 8];
}

int Signature::d() const {
  const int e = n() % 2 == 0 ? (n() - 2) / 2 : (n() - 3) / 2;
  return 1 << e;
}

std::string Signature::name() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Signature& sig) { return os << sig.name(); }

}  // namespace cliffroots
