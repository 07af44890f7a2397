#include "cliffroots/rep.hpp"

#include <algorithm>
#include <sstream>

#include "cliffroots/errors.hpp"

namespace cliffroots {

namespace {

// Real span of sparse vectors kept in a triangular form: every row has a
// pivot that is zero in all later rows.
class SparseSpan {
 public:
  // Adds v if it is independent of the span; returns whether it was added.
  bool add(const MultiVector::Terms& v) {
    MultiVector::Terms r = reduce(v);
    if (r.empty()) return false;
    const auto pivot = r.begin()->first;
    const Rational lead = r.begin()->second;
    for (auto& [m, c] : r) c /= lead;
    rows_.push_back({pivot, std::move(r)});
    return true;
  }

  bool contains(const MultiVector::Terms& v) const { return reduce(v).empty(); }
  std::size_t size() const { return rows_.size(); }

 private:
  MultiVector::Terms reduce(MultiVector::Terms v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Rational f = it->second;
      for (const auto& [m, c] : row) {
        auto& slot = v[m];
        slot -= f * c;
        if (is_zero(slot)) v.erase(m);
      }
    }
    return v;
  }

  std::vector<std::pair<std::uint32_t, MultiVector::Terms>> rows_;
};

MultiVector idempotent_element(const Signature& sig, const std::vector<Blade>& blades,
                               const std::vector<int>& signs) {
  MultiVector eps = MultiVector::scalar(sig, 1);
  for (std::size_t i = 0; i < blades.size(); ++i) {
    MultiVector factor = MultiVector::scalar(sig, Rational(1, 2)) +
                         MultiVector::blade(sig, blades[i], ratio(signs[i], 2));
    eps = eps * factor;
  }
  return eps;
}

bool in_gf2_span(std::uint32_t mask, const std::vector<Blade>& chosen) {
  const std::size_t count = std::size_t{1} << chosen.size();
  for (std::size_t sel = 0; sel < count; ++sel) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (sel >> i & 1) x ^= chosen[i].mask;
    if (x == mask) return true;
  }
  return false;
}

int log2_exact(std::uint64_t x) {
  int k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  if ((std::uint64_t{1} << k) != x) throw InconsistencyError("expected a power of two");
  return k;
}

bool search(const Signature& sig, const std::vector<Blade>& candidates, std::size_t start,
            std::size_t target, std::uint64_t ideal_dim, std::vector<Blade>& chosen) {
  if (chosen.size() == target) {
    const MultiVector eps = idempotent_element(sig, chosen, std::vector<int>(chosen.size(), 1));
    return left_ideal_dim(eps) == ideal_dim;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    const Blade c = candidates[i];
    bool ok = std::all_of(chosen.begin(), chosen.end(),
                          [&](Blade b) { return commutation_sign(b, c) == 1; });
    if (!ok || in_gf2_span(c.mask, chosen)) continue;
    chosen.push_back(c);
    if (search(sig, candidates, i + 1, target, ideal_dim, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::uint64_t minimal_ideal_dim(const Signature& sig) {
  const auto d = static_cast<std::uint64_t>(sig.d());
  switch (sig.ring()) {
    case Ring::R:
    case Ring::R2:
      return 2 * d;
    case Ring::H:
    case Ring::H2:
    case Ring::C:
      return 4 * d;
  }
  return 0;
}

std::uint64_t left_ideal_dim(const MultiVector& x) {
  const Signature& sig = x.signature();
  SparseSpan span;
  for (Blade b : canonical_blades(sig)) span.add((MultiVector::blade(sig, b) * x).terms());
  return span.size();
}

Idempotent primitive_idempotent(const Signature& sig) {
  std::vector<Blade> candidates;
  for (Blade b : canonical_blades(sig))
    if (b.mask != 0 && blade_square(b, sig) == 1) candidates.push_back(b);
  const std::uint64_t ideal_dim = minimal_ideal_dim(sig);
  const auto target = static_cast<std::size_t>(log2_exact(sig.dim() / ideal_dim));
  std::vector<Blade> chosen;
  if (!search(sig, candidates, 0, target, ideal_dim, chosen))
    throw InconsistencyError("no primitive idempotent found for " + sig.name());
  std::vector<int> signs(chosen.size(), 1);
  return {idempotent_element(sig, chosen, signs), chosen, signs};
}

std::vector<Idempotent> annihilating_family(const Idempotent& primitive) {
  const Signature& sig = primitive.element.signature();
  const std::size_t k = primitive.factor_blades.size();
  std::vector<Idempotent> family;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << k); ++pattern) {
    std::vector<int> signs(k);
    for (std::size_t i = 0; i < k; ++i) signs[i] = (pattern >> (k - 1 - i) & 1) ? -1 : 1;
    family.push_back({idempotent_element(sig, primitive.factor_blades, signs),
                      primitive.factor_blades, signs});
  }
  return family;
}

MultiVector k_generator(const Idempotent& eps) {
  const Signature& sig = eps.element.signature();
  if (sig.ring() != Ring::C) throw DomainError(sig.name() + " is not a complex matrix algebra");
  const MultiVector omega_eps = pseudoscalar(sig) * eps.element;
  for (Blade b : canonical_blades(sig)) {
    if (blade_square(b, sig) != -1) continue;
    bool commutes = std::all_of(eps.factor_blades.begin(), eps.factor_blades.end(),
                                [&](Blade f) { return commutation_sign(b, f) == 1; });
    if (!commutes) continue;
    const MultiVector iota = MultiVector::blade(sig, b);
    const MultiVector be = iota * eps.element;
    if (be == omega_eps) return iota;
    if (be == -omega_eps) return -iota;
  }
  throw InconsistencyError("no imaginary unit found for " + sig.name());
}

std::vector<MultiVector> ideal_basis(const Idempotent& eps) {
  const Signature& sig = eps.element.signature();
  const bool complex = sig.ring() == Ring::C;
  const std::uint64_t real_dim = minimal_ideal_dim(sig);
  std::optional<MultiVector> iota;
  if (complex) iota = k_generator(eps);
  SparseSpan span;
  std::vector<MultiVector> basis;
  for (Blade b : canonical_blades(sig)) {
    if (span.size() == real_dim) break;
    MultiVector v = MultiVector::blade(sig, b) * eps.element;
    if (!span.add(v.terms())) continue;
    if (complex) span.add((v * *iota).terms());
    basis.push_back(std::move(v));
  }
  if (span.size() != real_dim) throw InconsistencyError("ideal basis incomplete for " + sig.name());
  return basis;
}

MatrixRep::MatrixRep(const Signature& sig)
    : sig_(sig), eps_(primitive_idempotent(sig)), iota_(sig) {
  if (sig.ring() != Ring::C) throw DomainError(sig.name() + " is not a complex matrix algebra");
  iota_ = cliffroots::k_generator(eps_);

  // Same greedy choice as ideal_basis, keeping track of the blades.
  const std::size_t m = 2 * static_cast<std::size_t>(sig.d());
  SparseSpan span;
  for (Blade b : canonical_blades(sig)) {
    if (ideal_blades_.size() == m) break;
    MultiVector v = MultiVector::blade(sig, b) * eps_.element;
    if (!span.add(v.terms())) continue;
    MultiVector vi = v * iota_;
    span.add(vi.terms());
    ideal_blades_.push_back(b);
    ideal_basis_.push_back(v);
    real_basis_.push_back(std::move(v));
    real_basis_.push_back(std::move(vi));
  }
  if (ideal_blades_.size() != m) throw InconsistencyError("ideal basis incomplete for " + sig.name());

  const auto blades = canonical_blades(sig);
  const std::size_t dim = blades.size();
  std::vector<std::size_t> position(dim);
  for (std::size_t i = 0; i < dim; ++i) position[blades[i].mask] = i;

  // Rows of the basis matrix that determine coordinates.
  const std::size_t rdim = real_basis_.size();
  RationalMatrix basis_t(rdim, dim);
  for (std::size_t j = 0; j < rdim; ++j)
    for (const auto& [mask, c] : real_basis_[j].terms()) basis_t(j, position[mask]) = c;
  coordinate_rows_ = rref(basis_t).pivots;
  RationalMatrix square(rdim, rdim);
  for (std::size_t r = 0; r < rdim; ++r)
    for (std::size_t j = 0; j < rdim; ++j) square(r, j) = basis_t(j, coordinate_rows_[r]);
  auto solver = cliffroots::inverse(square);
  if (!solver) throw InconsistencyError("singular ideal basis");
  coordinate_solver_ = std::move(*solver);
  // Keep mask-indexed rows from here on.
  for (auto& r : coordinate_rows_) r = blades[r].mask;

  blade_images_.assign(dim, GaussMatrix());
  for (Blade b : blades) {
    GaussMatrix img(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto [prod, sign] = blade_product(b, ideal_blades_[j], sig);
      const MultiVector s = MultiVector::blade(sig, prod, sign) * eps_.element;
      const auto c = ideal_coordinates(s);
      for (std::size_t i = 0; i < m; ++i) img(i, j) = GaussRational(c[2 * i], c[2 * i + 1]);
    }
    blade_images_[b.mask] = std::move(img);
  }

  const auto gens = generator_images();
  const GaussMatrix id = GaussMatrix::identity(m);
  for (int a = 0; a < sig.n(); ++a) {
    if (!(gens[a] * gens[a] == GaussRational(sig.generator_square(a + 1)) * id))
      throw InconsistencyError("generator image has the wrong square");
    for (int b = a + 1; b < sig.n(); ++b)
      if (!is_zero_matrix(gens[a] * gens[b] + gens[b] * gens[a]))
        throw InconsistencyError("generator images do not anticommute");
  }

  RationalMatrix images(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const GaussMatrix& img = blade_images_[blades[col].mask];
    std::size_t row = 0;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        images(row++, col) = img(r, c).re;
        images(row++, col) = img(r, c).im;
      }
  }
  auto rsolver = cliffroots::inverse(images);
  if (!rsolver) throw InconsistencyError("representation of " + sig.name() + " is not faithful");
  reconstruct_solver_ = std::move(*rsolver);
}

std::vector<Rational> MatrixRep::ideal_coordinates(const MultiVector& s) const {
  std::vector<Rational> rhs(coordinate_rows_.size());
  for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] = s.coefficient(Blade(coordinate_rows_[r]));
  std::vector<Rational> c = coordinate_solver_ * rhs;
  MultiVector check(sig_);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!is_zero(c[j])) check += real_basis_[j] * c[j];
  if (!(check == s)) throw InconsistencyError("element is not in the minimal left ideal");
  return c;
}

std::vector<GaussMatrix> MatrixRep::generator_images() const {
  std::vector<GaussMatrix> out;
  for (int i = 1; i <= sig_.n(); ++i) out.push_back(blade_images_[Blade::generator(i).mask]);
  return out;
}

GaussMatrix MatrixRep::represent(const MultiVector& a) const {
  if (!(a.signature() == sig_))
    throw SignatureMismatch("cannot represent an element of " + a.signature().name() + " in " +
                            sig_.name());
  GaussMatrix out(size(), size());
  for (const auto& [mask, c] : a.terms()) out += blade_images_[mask] * GaussRational(c);
  return out;
}

MultiVector MatrixRep::reconstruct(const GaussMatrix& m) const {
  const std::size_t n = size();
  if (m.rows() != n || m.cols() != n)
    throw DomainError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  std::vector<Rational> flat;
  flat.reserve(2 * n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      flat.push_back(m(r, c).re);
      flat.push_back(m(r, c).im);
    }
  const auto coeffs = reconstruct_solver_ * flat;
  return MultiVector::from_dense(sig_, coeffs);
}

MatrixRep spinor_representation(const Signature& sig) { return MatrixRep(sig); }

GaussMatrix represent(const MultiVector& a, const MatrixRep& rep) { return rep.represent(a); }

MultiVector reconstruct(const GaussMatrix& m, const MatrixRep& rep) { return rep.reconstruct(m); }

std::string format_entry(const GaussRational& z, const MatrixRep& rep) {
  const MultiVector v = MultiVector::scalar(rep.signature(), z.re) + rep.k_generator() * z.im;
  return to_string(v);
}

std::string format_matrix_inline(const GaussMatrix& m, const MatrixRep& rep) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << format_entry(m(r, c), rep);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string format_matrix_grid(const GaussMatrix& m, const MatrixRep& rep) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = format_entry(m(r, c), rep);
      width[c] = std::max(width[c], cells[r][c].size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    }
    os << " ]\n";
  }
  return os.str();
}

RealifiedMatrix realify(const GaussMatrix& m) {
  RealifiedMatrix out(2 * m.rows(), 2 * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const GaussRational& z = m(r, c);
      out(2 * r, 2 * c) = z.re;
      out(2 * r, 2 * c + 1) = -z.im;
      out(2 * r + 1, 2 * c) = z.im;
      out(2 * r + 1, 2 * c + 1) = z.re;
    }
  return out;
}

RealificationCheck check_realification(const GaussMatrix& m) {
  RealificationCheck out;
  const RealifiedMatrix real = realify(m);
  out.trace_complex = m.trace();
  out.trace_real = real.trace();
  out.det_complex = determinant(m);
  out.det_real = determinant(real);
  out.trace_holds = out.trace_real == 2 * out.trace_complex.re;
  out.det_holds = out.det_real == out.det_complex.norm();
  return out;
}

CharMinPoly char_min_poly(const MultiVector& f, const MatrixRep& rep) {
  const Signature& sig = rep.signature();
  if (!(f * f == MultiVector::scalar(sig, -1)))
    throw DomainError(to_string(f) + " is not a square root of -1");
  const GaussMatrix mat = rep.represent(f);
  const std::size_t m = rep.size();
  const GaussMatrix shift = GaussMatrix::identity(m) * GaussRational::i();
  const int n1 = static_cast<int>(m - rank(mat - shift));
  const int n2 = static_cast<int>(m - rank(mat + shift));
  if (static_cast<std::size_t>(n1 + n2) != m)
    throw InconsistencyError("eigenspaces of " + to_string(f) + " do not fill the spinor space");
  if (spec(f) * static_cast<long>(m) != Rational(n1 - n2))
    throw InconsistencyError("eigenvalue multiplicities disagree with Spec(" + to_string(f) + ")");
  MinimalPolynomial mp = MinimalPolynomial::TSquaredPlusOne;
  if (n2 == 0) mp = MinimalPolynomial::TMinusI;
  if (n1 == 0) mp = MinimalPolynomial::TPlusI;
  return {{n1, n2}, mp};
}

}  // namespace cliffroots
