#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cliffroots/rational.hpp"
#include "cliffroots/signature.hpp"

namespace cliffroots {

// Structure of Cl(p,q) as a matrix algebra and of its square roots of -1.
// All dimensions are real dimensions unless named *_cdim.
struct AlgebraClassification {
  Signature sig;
  Ring ring;
  int d;
  int matrix_size;           // 2d for rings R, R^2, C; d for H, H^2
  std::uint64_t dim;         // 2^n
  int group_components;      // connected components of the group of invertibles
  int class_count;           // conjugacy classes of square roots of -1
  std::uint64_t ordinary_class_dim;
  bool has_exceptional;

  // e.g. "M(4,C)", "M(1,H^2)"
  std::string matrix_form() const;
};

struct ClassDescriptor {
  int k;
  std::uint64_t class_dim;
  std::uint64_t centralizer_dim;
  std::optional<std::uint64_t> class_cdim;        // ring C only
  std::optional<std::uint64_t> centralizer_cdim;  // ring C only
  std::optional<Rational> spec_value;             // when the center has a pseudoscalar part
  int connected_components;
};

// Throws UnsupportedSignature for algebras of dimension < 4.
AlgebraClassification classify(int p, int q, int max_n = kDefaultMaxN);
AlgebraClassification classify(const Signature& sig);

// Valid k: 0 for rings other than C, -d..d for ring C. Throws DomainError.
ClassDescriptor class_descriptor(const AlgebraClassification& cls, int k);

enum class MinimalPolynomial { TMinusI, TPlusI, TSquaredPlusOne };

std::string to_string(MinimalPolynomial m);

// Delta(t) = (t - i)^n1 (t + i)^n2.
struct CharPolyExponents {
  int n1;
  int n2;
  friend bool operator==(const CharPolyExponents&, const CharPolyExponents&) = default;
};

// "(t-i)^3(t+i)", "(t-i)^2", "(t-i)(t+i)".
std::string to_string(const CharPolyExponents& cp);

// Parses the form printed by to_string; throws ParseError.
CharPolyExponents parse_char_poly(const std::string& text);

struct PolynomialDescriptor {
  CharPolyExponents char_poly;
  MinimalPolynomial min_poly;
};

// Predicted polynomials of a root in class k of M(2d,C). Throws DomainError if |k| > d.
PolynomialDescriptor expected_char_poly(int d, int k);

}  // namespace cliffroots
