#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "cliffroots/classify.hpp"
#include "cliffroots/multivector.hpp"

namespace cliffroots {

// Fixture format, one item per line ('#' starts a comment):
//   signature: <p> <q>
//   <k> | <multivector literal> | <characteristic polynomial>
//   relation: <reversion|grade_involution|clifford_conjugation> <k> <+1|-1>
// A relation line states involution(f_k) = sign * f_{-k}.

struct GoldenRow {
  int k;
  MultiVector element;
  CharPolyExponents char_poly;
  int line;
};

struct GoldenRelation {
  std::string involution;
  int k;
  int sign;
  int line;
};

struct GoldenTable {
  std::string source;
  Signature sig;
  std::vector<GoldenRow> rows;
  std::vector<GoldenRelation> relations;
};

// Throws ParseError with "source:line: message".
GoldenTable parse_golden(std::istream& in, const std::string& source);
GoldenTable load_golden(const std::filesystem::path& path);

struct GoldenCheck {
  std::string location;  // "cl4_1.txt:5 k=1"
  std::string name;      // "root", "scal", "spec", ...
  bool passed;
  std::string detail;    // expected vs. actual when failing
};

struct GoldenResult {
  std::string source;
  std::vector<GoldenCheck> checks;
  bool passed() const;
  std::size_t failures() const;
};

// Checks every row (root, Scal = 0, Spec = k/d, centralizer dimension, char
// poly from the spinor representation, class of the row) and every relation.
GoldenResult verify_golden(const GoldenTable& table);

// *.txt files in dir, sorted by name.
std::vector<std::filesystem::path> golden_files(const std::filesystem::path& dir);

// GA_GOLDEN_DIR if set, else the fixture directory of the source tree.
std::filesystem::path default_golden_dir();

// Applies an involution by name; throws DomainError for unknown names.
MultiVector apply_involution(const std::string& name, const MultiVector& a);

}  // namespace cliffroots
