#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffroots/blade.hpp"
#include "cliffroots/linalg.hpp"
#include "cliffroots/rational.hpp"
#include "cliffroots/signature.hpp"

namespace cliffroots {

// Element of Cl(p,q): a sparse sum of blades with exact rational coefficients.
// Zero coefficients are never stored, so equality is term-wise.
class MultiVector {
 public:
  using Terms = std::map<std::uint32_t, Rational>;

  explicit MultiVector(Signature sig) : sig_(sig) {}
  MultiVector(Signature sig, Terms terms);

  static MultiVector scalar(Signature sig, const Rational& value);
  static MultiVector blade(Signature sig, Blade b, const Rational& coeff = 1);
  static MultiVector generator(Signature sig, int index);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(Blade b) const;

  // Coefficients of all 2^n blades in canonical order.
  std::vector<Rational> dense() const;
  static MultiVector from_dense(Signature sig, std::span<const Rational> coeffs);

  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  MultiVector& operator*=(const Rational& s);
  MultiVector& operator/=(const Rational& s);

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(MultiVector a, const Rational& s) { return a *= s; }
  friend MultiVector operator*(const Rational& s, MultiVector a) { return a *= s; }
  friend MultiVector operator/(MultiVector a, const Rational& s) { return a /= s; }
  friend MultiVector operator-(MultiVector a) { return a *= Rational(-1); }

  // Geometric product. Throws SignatureMismatch.
  friend MultiVector operator*(const MultiVector& a, const MultiVector& b);

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(std::uint32_t mask, const Rational& c);

  Signature sig_;
  Terms terms_;
};

MultiVector geometric_product(const MultiVector& a, const MultiVector& b);

// ab - ba
MultiVector commutator(const MultiVector& a, const MultiVector& b);

MultiVector grade_project(const MultiVector& a, int grade);

MultiVector grade_involution(const MultiVector& a);
MultiVector reversion(const MultiVector& a);
MultiVector clifford_conjugation(const MultiVector& a);

// Scalar coefficient.
Rational scal(const MultiVector& a);

// Coefficient of the pseudoscalar e1...en. Only defined for odd n, where the
// center is spanned by 1 and the pseudoscalar; throws DomainError otherwise.
Rational spec(const MultiVector& a);

MultiVector pseudoscalar(const Signature& sig);
int pseudoscalar_square(const Signature& sig);

struct CommutingSplit {
  MultiVector commuting;       // A+ = (A + r^-1 A r)/2, commutes with r
  MultiVector anticommuting;   // A- = (A - r^-1 A r)/2, anticommutes with r
};

// Throws DomainError unless r*r == -1.
CommutingSplit split_commuting(const MultiVector& a, const MultiVector& r);

// Matrix of x -> a*x on the blade basis (canonical order).
Matrix<Rational> left_regular_matrix(const MultiVector& a);

std::optional<MultiVector> inverse(const MultiVector& a);

// Algebra homomorphism defined by generator images: e_i -> images[i-1].
// Blades map to the ascending product of their generator images.
MultiVector map_generators(const MultiVector& a, std::span<const MultiVector> images);

// Canonical text form, e.g. "1/2*e23 - e123". Zero prints as "0".
std::string to_string(const MultiVector& a);
std::ostream& operator<<(std::ostream& os, const MultiVector& a);

// Inverse of to_string, also accepting parentheses, products of blades
// ("e1*e2"), reordered indices ("e21") and "Id" for the unit.
MultiVector parse_multivector(std::string_view text, const Signature& sig);

}  // namespace cliffroots
