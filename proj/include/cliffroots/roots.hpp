#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cliffroots/classify.hpp"
#include "cliffroots/multivector.hpp"
#include "cliffroots/rep.hpp"

namespace cliffroots {

bool is_root(const MultiVector& f);

// omega * (2 eps - 1). Ring C only; throws DomainError unless eps*eps == eps.
MultiVector root_from_idempotent(const MultiVector& eps);

// (1 - omega f) / 2. Ring C only; throws DomainError unless f is a root.
MultiVector idempotent_from_root(const MultiVector& f);

// A root in class k. Ring C: omega (2 eps - 1) with eps the sum of the first
// d + k members of the annihilating family. Otherwise (k = 0 only): the
// canonically smallest blade squaring to -1. Throws DomainError for invalid k.
MultiVector representative_root(const Signature& sig, int k);

// Basis of {g : fg = gf}, in reduced echelon form over the canonical blade order.
std::vector<MultiVector> centralizer(const MultiVector& f);

// Invertible v with v^-1 f v = g, or nullopt. Candidates are 1 - fg, then
// the null space basis of x -> fx - xg and seeded random integer combinations.
std::optional<MultiVector> find_conjugator(const MultiVector& f, const MultiVector& g,
                                           std::uint64_t seed = 0);

bool is_invertible(const MultiVector& v);

struct RootClassReport {
  Signature sig;
  int k;
  MultiVector representative;
  std::optional<Rational> spec;   // n odd only
  Rational scal;
  std::uint64_t class_dim;
  std::uint64_t centralizer_dim;
  std::optional<std::uint64_t> class_cdim;
  std::optional<std::uint64_t> centralizer_cdim;
  std::vector<MultiVector> centralizer_basis;
  std::optional<CharPolyExponents> char_poly;   // ring C only
  std::optional<MinimalPolynomial> min_poly;    // ring C only
  bool ordinary;
};

// Throws DomainError if f is not a root and InconsistencyError when the
// computed invariants contradict each other. rep may be passed to avoid
// rebuilding the spinor representation.
RootClassReport class_of(const MultiVector& f, const MatrixRep* rep = nullptr);

// One report per class, k descending.
std::vector<RootClassReport> root_classes(const Signature& sig);

// Connected components for d = 1: two for M(2,R), four for M(2,R^2).
enum class ComponentLabel { BetaPositive, BetaNegative, C1, C2, C3, C4 };

std::string to_string(ComponentLabel label);

// Image of a in M(2,R) for Cl(2,0) and Cl(1,1). Cl(2,0): e1 -> [[0,1],[1,0]],
// e2 -> diag(1,-1). Cl(1,1): e1 -> [[0,1],[1,0]], e2 -> [[0,-1],[1,0]].
// Throws DomainError for other signatures.
RationalMatrix to_m2r(const MultiVector& a);

// det of to_m2r(a).
Rational det_m2r(const MultiVector& a);

// Cl(2,0), Cl(1,1): sign of c - b for the image [[a,b],[c,d]] (|c - b| >= 2 on
// roots; c - b = 2 beta in Cl(2,0)). Cl(2,1): the pair of labels of the two
// factor projections. Throws DomainError for other signatures or non-roots.
ComponentLabel component_of_d1(const MultiVector& f);

// Projections Cl(2,1) -> Cl(2,0) onto the factors eps_plus, eps_minus
// (e3 -> -e12 and e3 -> +e12 respectively).
MultiVector factor_plus(const MultiVector& a);
MultiVector factor_minus(const MultiVector& a);

// Element of Cl(2,1) with factor projections (a, b).
MultiVector from_factors(const MultiVector& a, const MultiVector& b);

struct DoubleSplit {
  MultiVector eps_plus;
  MultiVector eps_minus;
  MultiVector plus_part(const MultiVector& a) const { return a * eps_plus; }
  MultiVector minus_part(const MultiVector& a) const { return a * eps_minus; }
};

// Central idempotents (1 +- omega)/2. Rings R^2 and H^2 only.
DoubleSplit double_split(const Signature& sig);

// Automorphism e_n -> -e_n, exchanging the two factors of a double algebra.
MultiVector swap(const MultiVector& a, const DoubleSplit& split);

// perm[i] = j means component c_{i+1} is mapped to c_{j+1}.
using ComponentPermutation = std::array<int, 4>;

// Tabulated permutation of c1..c4 induced by (g, g') with the given
// determinant signs, as an inner automorphism or composed with swap.
ComponentPermutation component_permutation_check(int det_sign_g, int det_sign_g2, bool inner);

// Cycle notation, e.g. "(c1 c2)(c3 c4)", "identity".
std::string format_permutation(const ComponentPermutation& perm);

struct PermutationObservation {
  ComponentPermutation expected;
  ComponentPermutation observed;
  int samples;      // conjugated roots in total
  bool consistent;  // every sample agreed with expected
};

// Conjugates sampled roots of each component of Cl(2,1) by explicit
// v = g eps_plus + g' eps_minus (composed with swap when !inner) and records
// the resulting component labels.
PermutationObservation observe_component_permutation(int det_sign_g, int det_sign_g2, bool inner,
                                                     int samples_per_component, std::mt19937_64& rng);

// Random root in the given component of Cl(2,0), Cl(1,1) or Cl(2,1).
MultiVector sample_component_root(const Signature& sig, ComponentLabel label, std::mt19937_64& rng);

// Random element of Cl(2,0) or Cl(1,1) whose M(2,R) determinant has the given sign.
MultiVector sample_invertible_m2r(const Signature& sig, int det_sign, std::mt19937_64& rng);

// n = 2: f = alpha + b1 e1 + b2 e2 + beta e12 is a root iff alpha = 0 and
// beta^2 = b1^2 e2^2 + b2^2 e1^2 + e1^2 e2^2. Throws DomainError unless n = 2.
bool manifold_constraint(const MultiVector& f);

// Right-hand side of the beta^2 relation.
Rational manifold_rhs(const Signature& sig, const Rational& b1, const Rational& b2);

struct ManifoldPoint {
  Rational b1;
  Rational b2;
  double beta;
};

// Sweeps (b1, b2) over a grid x grid lattice of [-2,2]^2 and emits +-sqrt(rhs)
// wherever rhs >= 0 (a single row when rhs = 0).
std::vector<ManifoldPoint> sample_manifold(const Signature& sig, int grid = 41);

std::string manifold_csv(const std::vector<ManifoldPoint>& points);

}  // namespace cliffroots
