#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cliffroots {

// Coefficient ring of the full matrix algebra isomorphic to Cl(p,q).
enum class Ring { R, R2, H, H2, C };

std::string_view ring_name(Ring ring);

inline constexpr int kDefaultMaxN = 12;

// Non-degenerate signature (p, q). Generators e1..ep square to +1,
// e(p+1)..e(p+q) square to -1.
class Signature {
 public:
  // Throws UnsupportedSignature when 2^(p+q) < 4 or p+q > max_n.
  Signature(int p, int q, int max_n = kDefaultMaxN);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  int s() const { return p_ - q_; }

  // Number of basis blades, 2^n.
  std::uint64_t dim() const { return std::uint64_t{1} << n(); }

  Ring ring() const;

  // 2^((n-2)/2) for even n, 2^((n-3)/2) for odd n.
  int d() const;

  // Square of generator e_index (1-based): +1 or -1.
  int generator_square(int index) const { return index <= p_ ? 1 : -1; }

  // The pseudoscalar is central exactly when n is odd.
  bool has_central_pseudoscalar() const { return n() % 2 == 1; }

  std::string name() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

std::ostream& operator<<(std::ostream& os, const Signature& sig);

}  // namespace cliffroots
