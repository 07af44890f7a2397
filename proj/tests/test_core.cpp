#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffroots/errors.hpp"
#include "cliffroots/multivector.hpp"
#include "oracles.hpp"

using namespace cliffroots;

namespace {

MultiVector mv(const char* text, const Signature& sig) { return parse_multivector(text, sig); }

std::vector<Signature> small_signatures(int max_n) {
  std::vector<Signature> out;
  for (int n = 2; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) out.emplace_back(p, n - p);
  return out;
}

}  // namespace

TEST_CASE("signature data") {
  CHECK_THROWS_AS(Signature(1, 0), UnsupportedSignature);
  CHECK_THROWS_AS(Signature(0, 1), UnsupportedSignature);
  CHECK_THROWS_AS(Signature(7, 6), UnsupportedSignature);
  CHECK_NOTHROW(Signature(7, 6, 13));
  CHECK(Signature(3, 0).ring() == Ring::C);
  CHECK(Signature(2, 1).ring() == Ring::R2);
  CHECK(Signature(0, 3).ring() == Ring::H2);
  CHECK(Signature(0, 2).ring() == Ring::H);
  CHECK(Signature(2, 0).ring() == Ring::R);
  CHECK(Signature(4, 1).d() == 2);
  CHECK(Signature(7, 0).d() == 4);
  CHECK(Signature(2, 2).d() == 2);
  CHECK(Signature(4, 1).name() == "Cl(4,1)");
}

TEST_CASE("blade products") {
  const Signature e2(2, 0), m11(1, 1);
  auto [b, s] = blade_product(Blade::generator(1), Blade::generator(1), e2);
  CHECK(b == Blade::scalar());
  CHECK(s == 1);
  std::tie(b, s) = blade_product(Blade::generator(2), Blade::generator(2), m11);
  CHECK(b == Blade::scalar());
  CHECK(s == -1);
  std::tie(b, s) = blade_product(Blade::generator(2), Blade::generator(1), e2);
  CHECK(b == Blade(3));
  CHECK(s == -1);
}

TEST_CASE("blade product agrees with the word oracle on every pair") {
  for (const Signature& sig : small_signatures(6)) {
    for (std::uint32_t a = 0; a < sig.dim(); ++a)
      for (std::uint32_t b = 0; b < sig.dim(); ++b) {
        const auto [blade, sign] = blade_product(Blade(a), Blade(b), sig);
        const auto [word, osign] = oracle::word_product(oracle::indices_of(a), oracle::indices_of(b), sig.p());
        REQUIRE(blade.mask == oracle::mask_of(word));
        REQUIRE(sign == osign);
      }
  }
}

TEST_CASE("generator relations") {
  for (const Signature& sig : small_signatures(8)) {
    for (int h = 1; h <= sig.n(); ++h) {
      const MultiVector eh = MultiVector::generator(sig, h);
      CHECK(eh * eh == MultiVector::scalar(sig, h <= sig.p() ? 1 : -1));
      for (int k = h + 1; k <= sig.n(); ++k) {
        const MultiVector ek = MultiVector::generator(sig, k);
        CHECK((eh * ek + ek * eh).is_zero());
      }
    }
  }
}

TEST_CASE("geometric product examples") {
  const Signature s(3, 0);
  CHECK(mv("e23", s) * mv("e23", s) == MultiVector::scalar(s, -1));
  CHECK(mv("e123", s) * mv("e123", s) == MultiVector::scalar(s, -1));
  CHECK(mv("e123", s) * mv("e23", s) == -mv("e1", s));
  CHECK(oracle::product(mv("e123", s), mv("e23", s)) == (-mv("e1", s)).terms());
  CHECK_THROWS_AS(mv("e1", s) * mv("e1", Signature(2, 1)), SignatureMismatch);
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  for (const Signature& sig : {Signature(3, 0), Signature(4, 1), Signature(0, 5), Signature(2, 2), Signature(7, 0)}) {
    for (int i = 0; i < 1000; ++i) {
      const MultiVector a = oracle::random_multivector(sig, rng), b = oracle::random_multivector(sig, rng),
                        c = oracle::random_multivector(sig, rng);
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("sparse product agrees with the word oracle") {
  std::mt19937_64 rng(12);
  for (const Signature& sig : {Signature(3, 0), Signature(1, 4), Signature(3, 3)}) {
    for (int i = 0; i < 300; ++i) {
      const MultiVector a = oracle::random_multivector(sig, rng, 6), b = oracle::random_multivector(sig, rng, 6);
      REQUIRE((a * b).terms() == oracle::product(a, b));
    }
  }
}

TEST_CASE("grade projection") {
  const Signature s(2, 0);
  CHECK(grade_project(mv("1 + e1 + e12", s), 1) == mv("e1", s));
  CHECK(grade_project(MultiVector(s), 1).is_zero());
  const Signature s41(4, 1);
  const MultiVector f1 = mv("1/2*(e23 + e123 - e2345 + e12345)", s41);
  CHECK(grade_project(f1, 5) == mv("1/2*e12345", s41));
}

TEST_CASE("involution properties") {
  std::mt19937_64 rng(13);
  for (const Signature& sig : {Signature(3, 0), Signature(4, 1), Signature(1, 3)}) {
    for (int i = 0; i < 200; ++i) {
      const MultiVector a = oracle::random_multivector(sig, rng), b = oracle::random_multivector(sig, rng);
      CHECK(reversion(a * b) == reversion(b) * reversion(a));
      CHECK(grade_involution(a * b) == grade_involution(a) * grade_involution(b));
      CHECK(clifford_conjugation(a * b) == clifford_conjugation(b) * clifford_conjugation(a));
      CHECK(reversion(reversion(a)) == a);
      CHECK(grade_involution(grade_involution(a)) == a);
      CHECK(clifford_conjugation(clifford_conjugation(a)) == a);
      CHECK(clifford_conjugation(a) == reversion(grade_involution(a)));
    }
  }
  const Signature s(3, 0);
  CHECK(reversion(MultiVector::scalar(s, 5)) == MultiVector::scalar(s, 5));
  CHECK(reversion(mv("e12", s)) == -mv("e12", s));
  CHECK(grade_involution(mv("e1 + e12", s)) == mv("-e1 + e12", s));
}

TEST_CASE("Scal and Spec") {
  const Signature s(3, 0);
  CHECK(scal(mv("e23", s)) == 0);
  CHECK(scal(MultiVector::scalar(s, 1)) == 1);
  CHECK(scal(mv("1/2 + e1", s)) == Rational(1, 2));
  CHECK(spec(mv("e23", s)) == 0);
  CHECK(spec(mv("e1234567", Signature(7, 0))) == 1);
  CHECK(spec(mv("1/2*(e23 + e123 - e2345 + e12345)", Signature(4, 1))) == Rational(1, 2));
  CHECK_THROWS_AS(spec(mv("e1", Signature(2, 0))), DomainError);
}

TEST_CASE("Scal is a trace form") {
  std::mt19937_64 rng(14);
  for (const Signature& sig : {Signature(3, 0), Signature(2, 2), Signature(0, 5)}) {
    for (int i = 0; i < 300; ++i) {
      const MultiVector a = oracle::random_multivector(sig, rng), b = oracle::random_multivector(sig, rng);
      CHECK(scal(a * b) == scal(b * a));
    }
  }
}

TEST_CASE("pseudoscalar square follows the ring") {
  CHECK(pseudoscalar_square(Signature(2, 1)) == 1);
  CHECK(pseudoscalar_square(Signature(3, 0)) == -1);
  CHECK(pseudoscalar(Signature(4, 1)) == mv("e12345", Signature(4, 1)));
  CHECK(pseudoscalar_square(Signature(4, 1)) == -1);
  for (const Signature& sig : small_signatures(8)) {
    const int sq = pseudoscalar_square(sig);
    CHECK(pseudoscalar(sig) * pseudoscalar(sig) == MultiVector::scalar(sig, sq));
    if (sig.ring() == Ring::C) CHECK(sq == -1);
    if (sig.ring() == Ring::R2 || sig.ring() == Ring::H2) CHECK(sq == 1);
  }
}

TEST_CASE("commuting split") {
  const Signature s(2, 0);
  const auto split = split_commuting(mv("e1", s), mv("e12", s));
  CHECK(split.commuting.is_zero());
  CHECK(split.anticommuting == mv("e1", s));
  const auto unit = split_commuting(MultiVector::scalar(s, 1), mv("e12", s));
  CHECK(unit.commuting == MultiVector::scalar(s, 1));
  CHECK(unit.anticommuting.is_zero());
  CHECK(split_commuting(mv("e12", s), mv("e12", s)).commuting == mv("e12", s));
  CHECK_THROWS_AS(split_commuting(mv("e1", s), mv("e1", s)), DomainError);

  std::mt19937_64 rng(15);
  const Signature s41(4, 1);
  const MultiVector r = mv("1/2*(e23 + e123 - e2345 + e12345)", s41);
  for (int i = 0; i < 100; ++i) {
    const MultiVector a = oracle::random_multivector(s41, rng, 6);
    const auto sp = split_commuting(a, r);
    CHECK(sp.commuting + sp.anticommuting == a);
    CHECK(sp.commuting * r == r * sp.commuting);
    CHECK(sp.anticommuting * r == -(r * sp.anticommuting));
  }
}

TEST_CASE("printer and parser round trip") {
  const Signature s(3, 0);
  CHECK(to_string(mv("1/2*e23 - e123", s)) == "1/2*e23 - e123");
  CHECK(to_string(MultiVector(s)) == "0");
  CHECK(mv("e21", s) == -mv("e12", s));
  CHECK(mv("e1*e2", s) == mv("e12", s));
  CHECK(mv("Id", s) == MultiVector::scalar(s, 1));
  CHECK(mv("(e1 + e2)/2", s) == mv("1/2*e1 + 1/2*e2", s));
  CHECK_THROWS_AS(mv("e4", s), ParseError);
  CHECK_THROWS_AS(mv("e1 +", s), ParseError);
  CHECK_THROWS_AS(mv("e1/e2", s), ParseError);
  CHECK_THROWS_AS(mv("e1/0", s), ParseError);

  const Signature big(6, 5);
  const MultiVector wide = mv("e{1,10} - 3/4*e{2,11} + e1", big);
  CHECK(to_string(wide) == "e1 + e{1,10} - 3/4*e{2,11}");
  CHECK(mv(to_string(wide).c_str(), big) == wide);

  std::mt19937_64 rng(16);
  for (const Signature& sig : {Signature(3, 0), Signature(7, 0), Signature(5, 6)}) {
    for (int i = 0; i < 200; ++i) {
      const MultiVector a = oracle::random_multivector(sig, rng, 5);
      REQUIRE(parse_multivector(to_string(a), sig) == a);
    }
  }
}

TEST_CASE("dense form and regular representation") {
  std::mt19937_64 rng(17);
  const Signature s(2, 2);
  for (int i = 0; i < 50; ++i) {
    const MultiVector a = oracle::random_multivector(s, rng), b = oracle::random_multivector(s, rng);
    const auto dense = a.dense();
    CHECK(MultiVector::from_dense(s, dense) == a);
    CHECK(left_regular_matrix(a) * b.dense() == (a * b).dense());
  }
  const auto inv = inverse(mv("1 + e1", Signature(2, 0)));
  CHECK_FALSE(inv.has_value());
  const auto inv2 = inverse(mv("2 + e12", Signature(2, 0)));
  REQUIRE(inv2.has_value());
  CHECK(*inv2 * mv("2 + e12", Signature(2, 0)) == MultiVector::scalar(Signature(2, 0), 1));
}
