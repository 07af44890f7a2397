#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffroots/blade.hpp"
#include "cliffroots/classify.hpp"
#include "cliffroots/gaussian.hpp"
#include "cliffroots/multivector.hpp"

namespace cliffroots {

// element = prod_i (1 + signs[i] * e_{factor_blades[i]}) / 2 over pairwise
// commuting blades that square to +1.
struct Idempotent {
  MultiVector element;
  std::vector<Blade> factor_blades;
  std::vector<int> signs;
};

// Real dimension of a minimal left ideal: 2d for rings R, R^2 and 4d for H, H^2, C.
std::uint64_t minimal_ideal_dim(const Signature& sig);

// Real dimension of the left ideal Cl(p,q) * x.
std::uint64_t left_ideal_dim(const MultiVector& x);

// Depth-first search over +1-squaring blades in canonical order for a
// commuting, GF(2)-independent family whose idempotent spans a minimal left
// ideal. Throws InconsistencyError if the search is exhausted.
Idempotent primitive_idempotent(const Signature& sig);

// All sign variants of the primitive idempotent, all-plus pattern first, then
// lexicographic with '+' before '-'. Members are mutually annihilating and sum to 1.
std::vector<Idempotent> annihilating_family(const Idempotent& primitive);

// Blade (possibly negated) that plays the role of the imaginary unit on the
// minimal left ideal of a ring-C algebra. It is the canonically smallest blade
// squaring to -1 that commutes with every factor blade, with its sign chosen
// so that the pseudoscalar acts on the ideal as +i. Throws DomainError for
// other rings.
MultiVector k_generator(const Idempotent& eps);

// Elements m_i * eps forming a basis of Cl(p,q) * eps over K (K = C via the
// k_generator for ring C, K = R otherwise), chosen greedily over blades m_i in
// canonical order.
std::vector<MultiVector> ideal_basis(const Idempotent& eps);

// Faithful representation of a ring-C algebra on its minimal left ideal
// S = Cl(p,q) * eps, viewed as a right K-module of rank 2d. Matrix entries
// a + b*i stand for right multiplication by a + b*iota, iota = k_generator.
class MatrixRep {
 public:
  // Throws DomainError for rings other than C.
  explicit MatrixRep(const Signature& sig);

  const Signature& signature() const { return sig_; }
  const Idempotent& idempotent() const { return eps_; }
  const MultiVector& k_generator() const { return iota_; }
  const std::vector<Blade>& ideal_blades() const { return ideal_blades_; }
  const std::vector<MultiVector>& ideal_basis() const { return ideal_basis_; }
  std::size_t size() const { return ideal_blades_.size(); }

  // Images of e_1..e_n.
  std::vector<GaussMatrix> generator_images() const;
  const GaussMatrix& blade_image(Blade b) const { return blade_images_.at(b.mask); }

  GaussMatrix represent(const MultiVector& a) const;

  // Inverse of represent. Throws DomainError for a matrix of the wrong size.
  MultiVector reconstruct(const GaussMatrix& m) const;

 private:
  std::vector<Rational> ideal_coordinates(const MultiVector& s) const;

  Signature sig_;
  Idempotent eps_;
  MultiVector iota_;
  std::vector<Blade> ideal_blades_;
  std::vector<MultiVector> ideal_basis_;
  std::vector<MultiVector> real_basis_;      // m_i eps, m_i eps iota interleaved
  std::vector<std::size_t> coordinate_rows_; // blade positions that determine coordinates
  RationalMatrix coordinate_solver_;
  std::vector<GaussMatrix> blade_images_;    // indexed by mask
  RationalMatrix reconstruct_solver_;
};

MatrixRep spinor_representation(const Signature& sig);
GaussMatrix represent(const MultiVector& a, const MatrixRep& rep);
MultiVector reconstruct(const GaussMatrix& m, const MatrixRep& rep);

// Entry a + b*i written with the representation's k_generator, e.g. "-e23".
std::string format_entry(const GaussRational& z, const MatrixRep& rep);

// "[[0, -e23], [e23, 0]]"
std::string format_matrix_inline(const GaussMatrix& m, const MatrixRep& rep);

// One row per line, columns right-aligned.
std::string format_matrix_grid(const GaussMatrix& m, const MatrixRep& rep);

// 2m x 2m real matrix obtained by replacing each entry a+bi by [[a,-b],[b,a]].
using RealifiedMatrix = RationalMatrix;
RealifiedMatrix realify(const GaussMatrix& m);

struct RealificationCheck {
  GaussRational trace_complex;
  Rational trace_real;
  GaussRational det_complex;
  Rational det_real;
  bool trace_holds;  // tr_R == 2 Re tr_C
  bool det_holds;    // det_R == |det_C|^2
};

RealificationCheck check_realification(const GaussMatrix& m);

struct CharMinPoly {
  CharPolyExponents char_poly;
  MinimalPolynomial min_poly;
};

// Eigen-multiplicities of +i and -i from exact ranks of represent(f) -/+ i*1.
// Throws DomainError unless f*f == -1.
CharMinPoly char_min_poly(const MultiVector& f, const MatrixRep& rep);

}  // namespace cliffroots
