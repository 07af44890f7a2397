#include "cliffroots/classify.hpp"

#include <regex>

#include "cliffroots/errors.hpp"

namespace cliffroots {

std::string AlgebraClassification::matrix_form() const {
  return "M(" + std::to_string(matrix_size) + "," + std::string(ring_name(ring)) + ")";
}

AlgebraClassification classify(int p, int q, int max_n) { return classify(Signature(p, q, max_n)); }

AlgebraClassification classify(const Signature& sig) {
  const Ring ring = sig.ring();
  const int d = sig.d();
  int components = 1;
  if (ring == Ring::R) components = 2;
  if (ring == Ring::R2) components = 4;
  const bool complex = ring == Ring::C;
  const bool quaternionic = ring == Ring::H || ring == Ring::H2;
  return AlgebraClassification{
      .sig = sig,
      .ring = ring,
      .d = d,
      .matrix_size = quaternionic ? d : 2 * d,
      .dim = sig.dim(),
      .group_components = components,
      .class_count = complex ? 2 * d + 1 : 1,
      .ordinary_class_dim = sig.dim() / 2,
      .has_exceptional = complex,
  };
}

ClassDescriptor class_descriptor(const AlgebraClassification& cls, int k) {
  ClassDescriptor out{};
  out.k = k;
  const bool has_spec = cls.sig.has_central_pseudoscalar();
  if (cls.ring != Ring::C) {
    if (k != 0)
      throw DomainError("only k = 0 exists in " + cls.matrix_form() + ", got k = " + std::to_string(k));
    out.centralizer_dim = cls.dim / 2;
    out.class_dim = cls.dim / 2;
    if (has_spec) out.spec_value = Rational(0);
    out.connected_components = cls.group_components;
    return out;
  }
  const int d = cls.d;
  if (k < -d || k > d)
    throw DomainError("k = " + std::to_string(k) + " outside [-" + std::to_string(d) + ", " +
                      std::to_string(d) + "]");
  const auto np = static_cast<std::uint64_t>(d + k), nm = static_cast<std::uint64_t>(d - k);
  out.centralizer_cdim = np * np + nm * nm;
  out.centralizer_dim = 2 * *out.centralizer_cdim;
  out.class_dim = cls.dim - out.centralizer_dim;
  out.class_cdim = out.class_dim / 2;
  out.spec_value = ratio(k, d);
  out.connected_components = 1;
  return out;
}

std::string to_string(MinimalPolynomial m) {
  switch (m) {
    case MinimalPolynomial::TMinusI: return "t-i";
    case MinimalPolynomial::TPlusI: return "t+i";
    case MinimalPolynomial::TSquaredPlusOne: return "t^2+1";
  }
  return "?";
}

std::string to_string(const CharPolyExponents& cp) {
  auto factor = [](const char* base, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
  };
  std::string s = factor("(t-i)", cp.n1) + factor("(t+i)", cp.n2);
  return s.empty() ? "1" : s;
}

CharPolyExponents parse_char_poly(const std::string& text) {
  static const std::regex re(R"(^\s*(?:\(t-i\)(?:\^(\d+))?)?\s*(?:\(t\+i\)(?:\^(\d+))?)?\s*$)");
  std::smatch m;
  if (text.empty() || !std::regex_match(text, m, re))
    throw ParseError("characteristic polynomial '" + text + "' is not of the form (t-i)^a(t+i)^b");
  const bool has_minus = text.find("(t-i)") != std::string::npos;
  const bool has_plus = text.find("(t+i)") != std::string::npos;
  if (!has_minus && !has_plus) throw ParseError("empty characteristic polynomial");
  CharPolyExponents cp{0, 0};
  if (has_minus) cp.n1 = m[1].matched ? std::stoi(m[1]) : 1;
  if (has_plus) cp.n2 = m[2].matched ? std::stoi(m[2]) : 1;
  return cp;
}

PolynomialDescriptor expected_char_poly(int d, int k) {
  if (d < 1 || k < -d || k > d) throw DomainError("expected_char_poly needs |k| <= d");
  MinimalPolynomial m = MinimalPolynomial::TSquaredPlusOne;
  if (k == d) m = MinimalPolynomial::TMinusI;
  if (k == -d) m = MinimalPolynomial::TPlusI;
  return {{d + k, d - k}, m};
}

}  // namespace cliffroots
