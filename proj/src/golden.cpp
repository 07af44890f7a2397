#include "cliffroots/golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "cliffroots/errors.hpp"
#include "cliffroots/rep.hpp"
#include "cliffroots/roots.hpp"

#ifndef CLIFFROOTS_GOLDEN_DIR
#define CLIFFROOTS_GOLDEN_DIR "golden"
#endif

namespace cliffroots {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(where + ": expected an integer, got '" + s + "'");
}

}  // namespace

bool GoldenResult::passed() const { return failures() == 0; }

std::size_t GoldenResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const GoldenCheck& c) { return !c.passed; }));
}

GoldenTable parse_golden(std::istream& in, const std::string& source) {
  std::optional<Signature> sig;
  std::vector<GoldenRow> rows;
  std::vector<GoldenRelation> relations;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string where = source + ":" + std::to_string(line);
    std::string text = raw.substr(0, raw.find('#'));
    text = trim(text);
    if (text.empty()) continue;
    try {
      if (text.rfind("signature:", 0) == 0) {
        if (sig) throw ParseError("duplicate signature line");
        std::istringstream ss(text.substr(10));
        int p = -1, q = -1;
        std::string extra;
        if (!(ss >> p >> q) || (ss >> extra)) throw ParseError("expected 'signature: <p> <q>'");
        sig.emplace(p, q);
      } else if (text.rfind("relation:", 0) == 0) {
        std::istringstream ss(text.substr(9));
        std::string name, k, sign, extra;
        if (!(ss >> name >> k >> sign) || (ss >> extra))
          throw ParseError("expected 'relation: <involution> <k> <sign>'");
        const int s = parse_int(sign, where);
        if (s != 1 && s != -1) throw ParseError("relation sign must be +1 or -1");
        if (name != "reversion" && name != "grade_involution" && name != "clifford_conjugation")
          throw ParseError("unknown involution '" + name + "'");
        relations.push_back({name, parse_int(k, where), s, line});
      } else {
        if (!sig) throw ParseError("row before signature line");
        const auto cells = split(text, '|');
        if (cells.size() != 3) throw ParseError("expected '<k> | <element> | <char poly>'");
        rows.push_back({parse_int(cells[0], where), parse_multivector(cells[1], *sig),
                        parse_char_poly(cells[2]), line});
      }
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      if (msg.rfind(source + ":", 0) == 0) throw;
      throw ParseError(where + ": " + msg);
    } catch (const UnsupportedSignature& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (!sig) throw ParseError(source + ": missing signature line");
  if (rows.empty()) throw ParseError(source + ": no rows");
  return {source, *sig, std::move(rows), std::move(relations)};
}

GoldenTable load_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  return parse_golden(in, path.filename().string());
}

MultiVector apply_involution(const std::string& name, const MultiVector& a) {
  if (name == "reversion") return reversion(a);
  if (name == "grade_involution") return grade_involution(a);
  if (name == "clifford_conjugation") return clifford_conjugation(a);
  throw DomainError("unknown involution '" + name + "'");
}

GoldenResult verify_golden(const GoldenTable& table) {
  GoldenResult out{table.source, {}};
  const Signature& sig = table.sig;
  const AlgebraClassification cls = classify(sig);
  auto record = [&](std::string location, std::string name, bool ok, std::string detail) {
    out.checks.push_back({std::move(location), std::move(name), ok, ok ? "" : std::move(detail)});
  };

  std::optional<MatrixRep> rep;
  if (sig.ring() == Ring::C) rep.emplace(sig);

  std::map<int, const GoldenRow*> by_k;
  for (const auto& row : table.rows) {
    const std::string loc = table.source + ":" + std::to_string(row.line) + " k=" + std::to_string(row.k);
    const MultiVector& f = row.element;
    by_k[row.k] = &row;

    const MultiVector sq = f * f;
    const bool root = sq == MultiVector::scalar(sig, -1);
    record(loc, "root", root, "f*f = " + to_string(sq) + ", expected -1");
    record(loc, "scal", is_zero(scal(f)), "Scal = " + to_string(scal(f)) + ", expected 0");

    bool k_valid = true;
    try {
      class_descriptor(cls, row.k);
    } catch (const DomainError& e) {
      k_valid = false;
      record(loc, "k", false, e.what());
    }
    if (!k_valid) continue;

    if (sig.has_central_pseudoscalar()) {
      const Rational want = sig.ring() == Ring::C ? ratio(row.k, cls.d) : Rational(0);
      record(loc, "spec", spec(f) == want, "Spec = " + to_string(spec(f)) + ", expected " + to_string(want));
    }
    if (!root) continue;

    const ClassDescriptor desc = class_descriptor(cls, row.k);
    const auto cent = centralizer(f).size();
    record(loc, "centralizer", cent == desc.centralizer_dim,
           "centralizer dimension " + std::to_string(cent) + ", expected " + std::to_string(desc.centralizer_dim));

    if (rep) {
      const PolynomialDescriptor expected = expected_char_poly(cls.d, row.k);
      record(loc, "char_poly_listed", row.char_poly == expected.char_poly,
             "listed " + to_string(row.char_poly) + ", k predicts " + to_string(expected.char_poly));
      try {
        const CharMinPoly got = char_min_poly(f, *rep);
        record(loc, "char_poly", got.char_poly == row.char_poly,
               "computed " + to_string(got.char_poly) + ", listed " + to_string(row.char_poly));
        record(loc, "min_poly", got.min_poly == expected.min_poly,
               "computed " + to_string(got.min_poly) + ", expected " + to_string(expected.min_poly));
      } catch (const std::logic_error& e) {
        record(loc, "char_poly", false, e.what());
      }
    }
  }

  if (sig.ring() == Ring::C) {
    const std::string loc = table.source;
    bool complete = static_cast<int>(by_k.size()) == cls.class_count && table.rows.size() == by_k.size();
    record(loc, "classes", complete,
           std::to_string(by_k.size()) + " distinct k among " + std::to_string(table.rows.size()) +
               " rows, expected " + std::to_string(cls.class_count));
  }

  for (const auto& rel : table.relations) {
    const std::string loc = table.source + ":" + std::to_string(rel.line) + " " + rel.involution;
    const auto a = by_k.find(rel.k), b = by_k.find(-rel.k);
    if (a == by_k.end() || b == by_k.end()) {
      record(loc, "relation", false, "rows for k = +-" + std::to_string(rel.k) + " missing");
      continue;
    }
    const MultiVector lhs = apply_involution(rel.involution, a->second->element);
    const MultiVector rhs = b->second->element * Rational(rel.sign);
    const std::string name = "f_" + std::to_string(rel.k);
    record(loc, "relation", lhs == rhs,
           rel.involution + "(" + name + ") = " + to_string(lhs) + ", expected " +
               (rel.sign < 0 ? "-" : "") + "f_" + std::to_string(-rel.k) + " = " + to_string(rhs));
  }
  return out;
}

std::vector<std::filesystem::path> golden_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  if (!std::filesystem::is_directory(dir)) throw ParseError(dir.string() + ": not a directory");
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("GA_GOLDEN_DIR"); env && *env) return env;
  return CLIFFROOTS_GOLDEN_DIR;
}

}  // namespace cliffroots
