#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffroots/classify.hpp"
#include "cliffroots/errors.hpp"

using namespace cliffroots;

TEST_CASE("classification examples") {
  const auto c30 = classify(3, 0);
  CHECK(c30.matrix_form() == "M(2,C)");
  CHECK(c30.class_count == 3);
  const auto c41 = classify(4, 1);
  CHECK(c41.matrix_form() == "M(4,C)");
  CHECK(c41.d == 2);
  CHECK(c41.class_count == 5);
  const auto c03 = classify(0, 3);
  CHECK(c03.ring == Ring::H2);
  CHECK(c03.group_components == 1);
  const auto c21 = classify(2, 1);
  CHECK(c21.matrix_form() == "M(2,R^2)");
  CHECK(c21.group_components == 4);
  CHECK_THROWS_AS(classify(1, 0), UnsupportedSignature);
  CHECK(classify(7, 0).matrix_form() == "M(8,C)");
  CHECK(classify(0, 2).matrix_form() == "M(1,H)");
}

TEST_CASE("class descriptors") {
  const auto c30 = classify(3, 0);
  auto d0 = class_descriptor(c30, 0);
  CHECK(d0.class_dim == 4);
  CHECK(d0.centralizer_dim == 4);
  for (int k : {1, -1}) {
    const auto d = class_descriptor(c30, k);
    CHECK(d.class_dim == 0);
    CHECK(d.centralizer_dim == 8);
  }
  const auto d4 = class_descriptor(classify(7, 0), 4);
  CHECK(d4.class_dim == 0);
  CHECK(d4.centralizer_cdim == 64);
  CHECK(d4.centralizer_dim == 128);
  CHECK(d4.spec_value == Rational(1));
  const auto r = class_descriptor(classify(2, 0), 0);
  CHECK(r.class_dim == 2);
  CHECK(r.connected_components == 2);
  CHECK(class_descriptor(classify(2, 1), 0).connected_components == 4);
  CHECK_THROWS_AS(class_descriptor(c30, 2), DomainError);
  CHECK_THROWS_AS(class_descriptor(classify(2, 0), 1), DomainError);
}

TEST_CASE("ring table and dimension identities for n <= 8") {
  const Ring by_s[8] = {Ring::R, Ring::R2, Ring::R, Ring::C, Ring::H, Ring::H2, Ring::H, Ring::C};
  for (int n = 2; n <= 8; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto cls = classify(p, n - p);
      const int s = ((p - (n - p)) % 8 + 8) % 8;
      CHECK(cls.ring == by_s[s]);
      CHECK(cls.ordinary_class_dim == cls.dim / 2);
      const int want_components = cls.ring == Ring::R ? 2 : cls.ring == Ring::R2 ? 4 : 1;
      CHECK(cls.group_components == want_components);
      // matrix algebra dimension: (size^2) * dim of the coefficient ring
      const std::uint64_t size = static_cast<std::uint64_t>(cls.matrix_size);
      const std::uint64_t ring_dim = cls.ring == Ring::R ? 1 : cls.ring == Ring::R2 ? 2 : cls.ring == Ring::C ? 2
                                     : cls.ring == Ring::H ? 4 : 8;
      CHECK(size * size * ring_dim == cls.dim);
      if (cls.ring == Ring::C) {
        CHECK(cls.class_count == 2 * cls.d + 1);
        for (int k = -cls.d; k <= cls.d; ++k) {
          const auto desc = class_descriptor(cls, k);
          CHECK(desc.class_dim + desc.centralizer_dim == cls.dim);
          CHECK(desc.class_dim == static_cast<std::uint64_t>(4 * (cls.d * cls.d - k * k)));
          CHECK(desc.centralizer_dim ==
                static_cast<std::uint64_t>(2 * ((cls.d + k) * (cls.d + k) + (cls.d - k) * (cls.d - k))));
        }
        CHECK(class_descriptor(cls, 0).class_dim == cls.ordinary_class_dim);
      } else {
        CHECK(cls.class_count == 1);
        const auto desc = class_descriptor(cls, 0);
        CHECK(desc.class_dim + desc.centralizer_dim == cls.dim);
        CHECK(desc.class_dim == cls.ordinary_class_dim);
      }
    }
  }
}

TEST_CASE("periodicity of eight") {
  CHECK(classify(4, 1).matrix_form() == classify(0, 5).matrix_form());
  CHECK(classify(2, 3).matrix_form() == classify(0, 5).matrix_form());
  for (int n = 2; n <= 8; ++n)
    for (int p = 0; p + 8 <= n; ++p) CHECK(classify(p + 8, n - p - 8 + 0).ring == classify(p, n - p).ring);
  CHECK(classify(8, 0).ring == classify(0, 0 + 8).ring);
}

TEST_CASE("characteristic polynomial descriptors") {
  auto e = expected_char_poly(2, 1);
  CHECK(to_string(e.char_poly) == "(t-i)^3(t+i)");
  CHECK(e.min_poly == MinimalPolynomial::TSquaredPlusOne);
  CHECK(to_string(expected_char_poly(4, 0).char_poly) == "(t-i)^4(t+i)^4");
  e = expected_char_poly(1, 1);
  CHECK(to_string(e.char_poly) == "(t-i)^2");
  CHECK(e.min_poly == MinimalPolynomial::TMinusI);
  CHECK(expected_char_poly(1, -1).min_poly == MinimalPolynomial::TPlusI);
  CHECK(to_string(MinimalPolynomial::TSquaredPlusOne) == "t^2+1");
  CHECK_THROWS_AS(expected_char_poly(1, 2), DomainError);
  for (const char* text : {"(t-i)^3(t+i)", "(t-i)(t+i)", "(t+i)^8", "(t-i)^2(t+i)^6"})
    CHECK(to_string(parse_char_poly(text)) == text);
  CHECK_THROWS_AS(parse_char_poly("(t-1)^2"), ParseError);
  CHECK_THROWS_AS(parse_char_poly(""), ParseError);
}
