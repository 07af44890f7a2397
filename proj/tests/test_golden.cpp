#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cliffroots/errors.hpp"
#include "cliffroots/golden.hpp"
#include "cliffroots/report.hpp"

using namespace cliffroots;

namespace {

GoldenTable parse(const std::string& text) {
  std::istringstream in(text);
  return parse_golden(in, "inline");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_failed_check(const GoldenResult& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (!c.passed && c.name == name) return true;
  return false;
}

}  // namespace

TEST_CASE("every fixture verifies") {
  const auto files = golden_files(default_golden_dir());
  CHECK(files.size() == 8);
  for (const auto& path : files) {
    CAPTURE(path.string());
    const GoldenResult r = verify_golden(load_golden(path));
    CHECK(r.passed());
    CHECK(r.failures() == 0);
    CHECK(r.checks.size() > 0);
  }
}

TEST_CASE("parser") {
  const GoldenTable t = parse("# comment\nsignature: 3 0\n1 | e123 | (t-i)^2\n0 | e23 | (t-i)(t+i)\n"
                              "-1 | -e123 | (t+i)^2\nrelation: reversion 1 +1\n");
  CHECK(t.sig == Signature(3, 0));
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[1].k == 0);
  CHECK(t.rows[1].line == 4);
  CHECK(t.rows[1].char_poly == CharPolyExponents{1, 1});
  REQUIRE(t.relations.size() == 1);
  CHECK(t.relations[0].sign == 1);
  CHECK(verify_golden(t).passed());

  CHECK_THROWS_AS(parse("1 | e1 | (t-i)^2\n"), ParseError);
  CHECK_THROWS_AS(parse("signature: 3 0\n1 | e9 | (t-i)^2\n"), ParseError);
  CHECK_THROWS_AS(parse("signature: 3 0\n1 | e123\n"), ParseError);
  CHECK_THROWS_AS(parse("signature: 3 0\nrelation: transpose 1 +1\n"), ParseError);
  try {
    parse("signature: 3 0\nx | e123 | (t-i)^2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("inline:2:", 0) == 0);
  }
}

TEST_CASE("tampered coefficient is reported") {
  const auto path = default_golden_dir() / "cl4_1.txt";
  std::string text = read_file(path);
  const std::string original = "1/2*(e23 + e123 - e2345 + e12345)";
  const auto pos = text.find(original);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, original.size(), "1/2*(e23 + e123 - e2345 + 3*e12345)");
  const GoldenResult r = verify_golden(parse(text));
  CHECK_FALSE(r.passed());
  CHECK(has_failed_check(r, "root"));
  CHECK(golden_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("wrong metadata is reported") {
  const GoldenResult wrong_k = verify_golden(parse("signature: 3 0\n0 | e123 | (t-i)^2\n"));
  CHECK_FALSE(wrong_k.passed());
  CHECK(has_failed_check(wrong_k, "spec"));
  const GoldenResult wrong_poly = verify_golden(parse("signature: 3 0\n1 | e123 | (t-i)(t+i)\n"));
  CHECK(has_failed_check(wrong_poly, "char_poly_listed"));
  const GoldenResult wrong_rel =
      verify_golden(parse("signature: 3 0\n1 | e123 | (t-i)^2\n-1 | -e123 | (t+i)^2\n"
                          "relation: reversion 1 -1\n"));
  CHECK(has_failed_check(wrong_rel, "relation"));
}

TEST_CASE("involutions by name") {
  const Signature s(3, 0);
  const MultiVector a = parse_multivector("e1 + e12 + e123", s);
  CHECK(apply_involution("reversion", a) == reversion(a));
  CHECK(apply_involution("grade_involution", a) == grade_involution(a));
  CHECK(apply_involution("clifford_conjugation", a) == clifford_conjugation(a));
  CHECK_THROWS_AS(apply_involution("dual", a), DomainError);
}

TEST_CASE("reports") {
  const Json j = to_json(classify(4, 1));
  CHECK(j["ring"] == "C");
  CHECK(j["d"] == 2);
  CHECK(classification_text(classify(4, 1)).rfind("Cl(4,1): M(4,C), d=2, 5 classes, 1 component", 0) == 0);
  const auto reports = root_classes(Signature(3, 0));
  const Json r = to_json(reports.front());
  CHECK(r["k"] == 1);
  CHECK(r["centralizer_dim"] == 8);
  CHECK(r["representative"] == "e123");
  CHECK(roots_csv(reports).find("e23") != std::string::npos);
  CHECK(roots_text(reports).find("(t-i)(t+i)") != std::string::npos);
}
