#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffroots/signature.hpp"

namespace cliffroots {

// Basis monomial e_{i1...ir}, i1 < ... < ir, stored as a bitmask where
// bit (i-1) stands for generator e_i.
struct Blade {
  std::uint32_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t m) : mask(m) {}

  static Blade scalar() { return Blade{}; }
  static Blade generator(int index) { return Blade{std::uint32_t{1} << (index - 1)}; }
  static Blade pseudoscalar(const Signature& sig) {
    return Blade{static_cast<std::uint32_t>(sig.dim() - 1)};
  }
  // Throws DomainError on repeated or out-of-range indices.
  static Blade from_indices(const std::vector<int>& ascending);

  int grade() const { return std::popcount(mask); }
  std::vector<int> indices() const;

  // "1" for the scalar blade, "e123", or "e{1,10}" when an index exceeds 9.
  std::string name() const;

  friend bool operator==(Blade, Blade) = default;
};

// Canonical order: by grade, then lexicographically by ascending index list.
bool canonical_less(Blade a, Blade b);

// All 2^n blades of the algebra in canonical order.
std::vector<Blade> canonical_blades(const Signature& sig);

// Sign of e_A e_B e_A^{-1} e_B^{-1}: +1 when the blades commute.
int commutation_sign(Blade a, Blade b);

// e_a e_b = sign * e_{a xor b}.
std::pair<Blade, int> blade_product(Blade a, Blade b, const Signature& sig);

// e_B e_B, always +1 or -1.
int blade_square(Blade b, const Signature& sig);

}  // namespace cliffroots
