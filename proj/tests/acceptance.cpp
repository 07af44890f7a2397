// Exit gate: one PASS/FAIL line per acceptance criterion. All comparisons are
// exact except the two wall-clock limits, which are pinned below.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cliffroots/golden.hpp"
#include "cliffroots/roots.hpp"
#include "oracles.hpp"

using namespace cliffroots;

namespace {

constexpr double kGoldenSeconds = 30.0;
constexpr double kCl70Seconds = 300.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << what;
      else detail << "; " << what;
      passed = false;
    }
  }
};

MultiVector mv(const std::string& text, const Signature& sig) { return parse_multivector(text, sig); }

GoldenTable table(const std::string& name) { return load_golden(default_golden_dir() / name); }

const GoldenRow* row_for(const GoldenTable& t, int k) {
  for (const auto& r : t.rows)
    if (r.k == k) return &r;
  return nullptr;
}

void golden_suite(Outcome& out) {
  const auto t0 = Clock::now();
  int rows = 0;
  for (const auto& path : golden_files(default_golden_dir())) {
    const GoldenTable t = load_golden(path);
    rows += static_cast<int>(t.rows.size());
    const GoldenResult r = verify_golden(t);
    out.require(r.passed(), path.filename().string() + ": " + std::to_string(r.failures()) + " failed checks");
    for (const auto& row : t.rows) {
      out.require(row.element * row.element == MultiVector::scalar(t.sig, -1), "square");
      out.require(scal(row.element) == 0, "scal");
      out.require(spec(row.element) == ratio(row.k, t.sig.d()), "spec");
    }
  }
  const double secs = seconds_since(t0);
  out.require(rows == 3 + 5 * 3 + 9 * 4, "expected 54 rows, got " + std::to_string(rows));
  out.require(secs < kGoldenSeconds, "took " + std::to_string(secs) + " s");
  out.detail << (out.passed ? "" : "; ") << rows << " rows, " << secs << " s (limit " << kGoldenSeconds << " s)";
}

void cl30_centralizers(Outcome& out) {
  const Signature s(3, 0);
  const int d = 1;
  for (int k : {1, 0, -1}) {
    const auto basis = centralizer(representative_root(s, k));
    const std::size_t formula = 2 * ((d + k) * (d + k) + (d - k) * (d - k));
    out.require(basis.size() == formula, "k=" + std::to_string(k) + ": " + std::to_string(basis.size()));
    out.detail << (k == 1 ? "" : " / ") << basis.size();
  }
}

void class_dimensions(Outcome& out) {
  for (const Signature& sig : {Signature(4, 1), Signature(0, 5), Signature(7, 0)}) {
    const auto t0 = Clock::now();
    const int d = sig.d();
    const MatrixRep rep(sig);
    for (int k = d; k >= -d; --k) {
      const MultiVector f = representative_root(sig, k);
      const std::uint64_t cent = centralizer(f).size();
      const std::uint64_t want = static_cast<std::uint64_t>(4 * (d * d - k * k));
      out.require(sig.dim() - cent == want, sig.name() + " k=" + std::to_string(k));
      out.require(class_of(f, &rep).class_dim == want, sig.name() + " report k=" + std::to_string(k));
    }
    const double secs = seconds_since(t0);
    if (sig == Signature(7, 0)) {
      out.require(secs < kCl70Seconds, "Cl(7,0) took " + std::to_string(secs) + " s");
      out.detail << (out.passed ? "" : "; ") << "Cl(7,0) " << 2 * d + 1 << " classes in " << secs << " s (limit "
                 << kCl70Seconds << " s)";
    }
  }
}

void representation(Outcome& out) {
  const Signature s(3, 0);
  const MatrixRep rep(s);
  const auto g = rep.generator_images();
  out.require(format_matrix_inline(g[0], rep) == "[[1, 0], [0, -1]]", "e1");
  out.require(format_matrix_inline(g[1], rep) == "[[0, 1], [1, 0]]", "e2");
  out.require(format_matrix_inline(g[2], rep) == "[[0, -e23], [e23, 0]]", "e3 -> " + format_matrix_inline(g[2], rep));
  GaussMatrix same(2, 2), opposite(2, 2);
  same(0, 0) = same(1, 1) = opposite(0, 0) = GaussRational::i();
  opposite(1, 1) = -GaussRational::i();
  out.require(rep.reconstruct(same) == mv("e123", s), "diag(i,i)");
  out.require(rep.reconstruct(opposite) == mv("e23", s), "diag(i,-i)");
  out.detail << "e3 -> " << format_matrix_inline(g[2], rep);
}

void polynomials(Outcome& out) {
  int rows = 0;
  for (const char* name : {"cl3_0.txt", "cl4_1.txt", "cl0_5.txt", "cl2_3.txt", "cl7_0.txt"}) {
    const GoldenTable t = table(name);
    const MatrixRep rep(t.sig);
    const int d = t.sig.d();
    for (const auto& row : t.rows) {
      const CharMinPoly cp = char_min_poly(row.element, rep);
      const CharPolyExponents want{d + row.k, d - row.k};
      out.require(cp.char_poly == want && row.char_poly == want,
                  std::string(name) + " k=" + std::to_string(row.k) + ": " + to_string(cp.char_poly));
      ++rows;
    }
  }
  const Signature s(3, 0);
  const CharMinPoly m0 = char_min_poly(row_for(table("cl3_0.txt"), 0)->element, MatrixRep(s));
  out.require(m0.min_poly == MinimalPolynomial::TSquaredPlusOne, "m0 = " + to_string(m0.min_poly));
  out.detail << (out.passed ? "" : "; ") << rows << " rows, m0 = " << to_string(m0.min_poly);
}

void conjugacy(Outcome& out) {
  int found = 0;
  for (const char* name : {"cl3_0.txt", "cl4_1.txt", "cl0_5.txt"}) {
    const GoldenTable t = table(name);
    for (const auto& row : t.rows) {
      const MultiVector rep = representative_root(t.sig, row.k);
      const auto v = find_conjugator(rep, row.element);
      bool ok = v.has_value();
      if (ok) {
        const auto inv = inverse(*v);
        ok = inv && *inv * rep * *v == row.element;
      }
      out.require(ok, std::string(name) + " k=" + std::to_string(row.k));
      found += ok;
    }
  }
  const Signature s(3, 0);
  const MultiVector w = pseudoscalar(s);
  out.require(!find_conjugator(w, -w).has_value(), "conjugator found for (w, -w)");
  out.detail << (out.passed ? "" : "; ") << found << " conjugators, none for (w, -w)";
}

void involutions(Outcome& out) {
  int checked = 0;
  const auto relation = [&](const char* name, const std::string& inv, int k, int sign) {
    const GoldenTable t = table(name);
    const GoldenRow *a = row_for(t, k), *b = row_for(t, -k);
    const bool ok = a && b && apply_involution(inv, a->element) == b->element * Rational(sign);
    out.require(ok, std::string(name) + " " + inv + " k=" + std::to_string(k));
    ++checked;
  };
  relation("cl4_1.txt", "reversion", 1, -1);
  relation("cl0_5.txt", "reversion", 1, -1);
  for (int k : {1, 2, 3}) relation("cl7_0.txt", "clifford_conjugation", k, -1);
  out.detail << (out.passed ? "" : "; ") << checked << " relations";
}

void n2_oracle(Outcome& out) {
  for (int p = 0; p <= 2; ++p) {
    const Signature sig(p, 2 - p);
    const auto rhs = oracle::n2_solution_rhs(p);
    out.require(rhs.has_value(), sig.name() + ": square has unexpected shape");
    if (!rhs) continue;
    for (int i = -6; i <= 6; ++i)
      for (int j = -6; j <= 6; ++j) {
        const Rational b1 = ratio(i, 3), b2 = ratio(j, 2);
        out.require(oracle::evaluate(*rhs, {Rational(0), b1, b2, Rational(0)}) == manifold_rhs(sig, b1, b2),
                    sig.name() + ": rhs mismatch");
      }
    if (p == 0) {
      // beta^2 = 1 - b1^2 - b2^2, the unit sphere
      const oracle::Poly sphere = oracle::poly_add(
          oracle::poly_add(oracle::constant(1), oracle::poly_mul(oracle::var(1), oracle::var(1)), -1),
          oracle::poly_mul(oracle::var(2), oracle::var(2)), -1);
      out.require(*rhs == sphere, "Cl(0,2) is not the unit sphere");
    }
  }
  out.detail << (out.passed ? "" : "; ") << "alpha = 0, beta^2 = b1^2 e2^2 + b2^2 e1^2 + e1^2 e2^2 for 3 signatures";
}

void component_tables(Outcome& out) {
  std::mt19937_64 rng(2024);
  int samples = 0;
  for (bool inner : {true, false})
    for (int a : {1, -1})
      for (int b : {1, -1}) {
        const auto obs = observe_component_permutation(a, b, inner, 20, rng);
        samples += obs.samples;
        out.require(obs.consistent && obs.observed == obs.expected,
                    std::string(inner ? "inner" : "outer") + " (" + std::to_string(a) + "," + std::to_string(b) +
                        "): " + format_permutation(obs.observed));
      }
  int conjugations = 0;
  for (const Signature& sig : {Signature(2, 0), Signature(1, 1)}) {
    for (int t = 0; t < 100; ++t) {
      const ComponentLabel label = t % 2 ? ComponentLabel::BetaPositive : ComponentLabel::BetaNegative;
      const MultiVector f = sample_component_root(sig, label, rng);
      for (int sign : {1, -1}) {
        const MultiVector v = sample_invertible_m2r(sig, sign, rng);
        const auto inv = inverse(v);
        const ComponentLabel after = component_of_d1(*inv * f * v);
        out.require((after == label) == (sign > 0), sig.name() + " det sign " + std::to_string(sign));
        ++conjugations;
      }
    }
  }
  out.detail << (out.passed ? "" : "; ") << "8 tables from " << samples << " samples, " << conjugations
             << " M(2,R) conjugations";
}

void realification(Outcome& out) {
  std::mt19937_64 rng(7);
  int leibniz = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    const GaussMatrix m = oracle::random_gauss_matrix(n, rng);
    const RealificationCheck c = check_realification(m);
    out.require(c.trace_holds && c.trace_real == 2 * c.trace_complex.re, "trace, size " + std::to_string(n));
    out.require(c.det_holds && c.det_real == c.det_complex.norm(), "det, size " + std::to_string(n));
    out.require(c.det_complex == oracle::leibniz_det(m), "Leibniz, size " + std::to_string(n));
    ++leibniz;
  }
  out.detail << (out.passed ? "" : "; ") << "200 matrices up to 6x6, " << leibniz << " Leibniz cross-checks";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"golden tables", golden_suite},
      {"Cl(3,0) centralizer dimensions", cl30_centralizers},
      {"class dimensions 4(d^2-k^2)", class_dimensions},
      {"Cl(3,0) spinor representation", representation},
      {"characteristic and minimal polynomials", polynomials},
      {"conjugators", conjugacy},
      {"involution relations", involutions},
      {"n = 2 symbolic oracle", n2_oracle},
      {"component permutations at d = 1", component_tables},
      {"realification", realification},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << index++ << ": " << name << " ("
              << out.detail.str() << ")" << std::endl;
    failed += !out.passed;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
