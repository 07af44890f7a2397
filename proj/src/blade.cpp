#include "cliffroots/blade.hpp"

#include <algorithm>

#include "cliffroots/errors.hpp"

namespace cliffroots {

Blade Blade::from_indices(const std::vector<int>& ascending) {
  std::uint32_t mask = 0;
  int last = 0;
  for (int i : ascending) {
    if (i <= last || i > 31) throw DomainError("blade indices must be strictly ascending in 1..31");
    mask |= std::uint32_t{1} << (i - 1);
    last = i;
  }
  return Blade{mask};
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Blade::name() const {
  if (mask == 0) return "1";
  const auto idx = indices();
  const bool compact = idx.back() <= 9;
  std::string s = compact ? "e" : "e{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (!compact && k > 0) s += ',';
    s += std::to_string(idx[k]);
  }
  if (!compact) s += '}';
  return s;
}

bool canonical_less(Blade a, Blade b) {
  const int ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  const std::uint32_t diff = a.mask ^ b.mask;
  if (diff == 0) return false;
  // Same grade: the first differing ascending index is the lowest bit of the
  // symmetric difference, and the blade holding it sorts first.
  return (a.mask & (diff & -diff)) != 0;
}

std::vector<Blade> canonical_blades(const Signature& sig) {
  std::vector<Blade> out;
  out.reserve(sig.dim());
  for (std::uint32_t m = 0; m < sig.dim(); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

// Parity of the transpositions needed to sort e_a e_b into ascending order.
int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

int commutation_sign(Blade a, Blade b) {
  const int ga = a.grade(), gb = b.grade(), common = std::popcount(a.mask & b.mask);
  return ((ga * gb - common) & 1) ? -1 : 1;
}

std::pair<Blade, int> blade_product(Blade a, Blade b, const Signature& sig) {
  int sign = reorder_sign(a.mask, b.mask);
  for (std::uint32_t m = a.mask & b.mask; m != 0; m &= m - 1)
    sign *= sig.generator_square(std::countr_zero(m) + 1);
  return {Blade{a.mask ^ b.mask}, sign};
}

int blade_square(Blade b, const Signature& sig) { return blade_product(b, b, sig).second; }

}  // namespace cliffroots
