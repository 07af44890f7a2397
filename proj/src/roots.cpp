#include "cliffroots/roots.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "cliffroots/errors.hpp"

namespace cliffroots {

namespace {

void require_complex(const Signature& sig) {
  if (sig.ring() != Ring::C) throw DomainError(sig.name() + " is not a complex matrix algebra");
}

void require_root(const MultiVector& f) {
  if (!is_root(f)) throw DomainError(to_string(f) + " is not a square root of -1");
}

MultiVector one(const Signature& sig) { return MultiVector::scalar(sig, 1); }

// Matrix of x -> f x - x g over the canonical blade basis.
RationalMatrix intertwiner_matrix(const MultiVector& f, const MultiVector& g) {
  const Signature& sig = f.signature();
  const auto blades = canonical_blades(sig);
  std::vector<std::size_t> pos(blades.size());
  for (std::size_t i = 0; i < blades.size(); ++i) pos[blades[i].mask] = i;
  RationalMatrix m(blades.size(), blades.size());
  for (std::size_t col = 0; col < blades.size(); ++col) {
    const MultiVector b = MultiVector::blade(sig, blades[col]);
    const MultiVector image = f * b - b * g;
    for (const auto& [mask, c] : image.terms()) m(pos[mask], col) = c;
  }
  return m;
}

// Rescale to integer coefficients; invertibility is unaffected.
MultiVector clear_denominators(const MultiVector& v) {
  mpz_class l = 1;
  for (const auto& [mask, c] : v.terms()) l = lcm(l, mpz_class(c.get_den()));
  return v * Rational(l);
}

bool is_identity(const ComponentPermutation& p) { return p == ComponentPermutation{0, 1, 2, 3}; }

int label_index(ComponentLabel l) {
  switch (l) {
    case ComponentLabel::C1: return 0;
    case ComponentLabel::C2: return 1;
    case ComponentLabel::C3: return 2;
    case ComponentLabel::C4: return 3;
    default: throw DomainError("not a four-component label");
  }
}

constexpr ComponentLabel kFourLabels[] = {ComponentLabel::C1, ComponentLabel::C2, ComponentLabel::C3,
                                          ComponentLabel::C4};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return ratio(num(rng), den(rng));
}

// Root b1 e1 + b2 e2 + beta e12 of Cl(2,0) (or its Cl(1,1) analogue with
// b2 as the distinguished coefficient), rational point on the hyperboloid
// x^2 - u^2 - v^2 = 1 with sign(x) = sign.
MultiVector sample_m2r_root(const Signature& sig, bool positive, std::mt19937_64& rng) {
  Rational u, v, w;
  do {
    u = random_rational(rng);
    v = random_rational(rng);
    w = u * u + v * v;
  } while (w == 1);
  const Rational lambda = Rational(2) / (1 - w);
  Rational x = (1 + w) / (1 - w);
  Rational a = lambda * u, b = lambda * v;
  if ((sgn(x) > 0) != positive) {
    x = -x;
    a = -a;
    b = -b;
  }
  const Blade e1 = Blade::generator(1), e2 = Blade::generator(2), e12 = Blade(3);
  if (sig == Signature(2, 0))
    return MultiVector::blade(sig, e1, a) + MultiVector::blade(sig, e2, b) + MultiVector::blade(sig, e12, x);
  return MultiVector::blade(sig, e1, a) + MultiVector::blade(sig, e2, x) + MultiVector::blade(sig, e12, b);
}

}  // namespace

bool is_root(const MultiVector& f) { return f * f == MultiVector::scalar(f.signature(), -1); }

MultiVector root_from_idempotent(const MultiVector& eps) {
  const Signature& sig = eps.signature();
  require_complex(sig);
  if (!(eps * eps == eps)) throw DomainError(to_string(eps) + " is not idempotent");
  return pseudoscalar(sig) * (eps * Rational(2) - one(sig));
}

MultiVector idempotent_from_root(const MultiVector& f) {
  const Signature& sig = f.signature();
  require_complex(sig);
  require_root(f);
  return (one(sig) - pseudoscalar(sig) * f) / Rational(2);
}

MultiVector representative_root(const Signature& sig, int k) {
  const AlgebraClassification cls = classify(sig);
  if (sig.ring() == Ring::C) {
    if (k < -cls.d || k > cls.d) throw DomainError("k must lie in [-d, d] for " + sig.name());
    const auto family = annihilating_family(primitive_idempotent(sig));
    MultiVector eps(sig);
    for (int i = 0; i < cls.d + k; ++i) eps += family[i].element;
    MultiVector f = root_from_idempotent(eps);
    if (!is_root(f) || spec(f) != ratio(k, cls.d))
      throw InconsistencyError("representative of class " + std::to_string(k) + " is wrong");
    return f;
  }
  if (k != 0) throw DomainError(sig.name() + " has only the ordinary class k = 0");
  for (Blade b : canonical_blades(sig))
    if (blade_square(b, sig) == -1) return MultiVector::blade(sig, b);
  throw InconsistencyError("no blade squares to -1 in " + sig.name());
}

std::vector<MultiVector> centralizer(const MultiVector& f) {
  const Signature& sig = f.signature();
  const auto kernel = nullspace(intertwiner_matrix(f, f));
  if (kernel.empty()) return {};
  RationalMatrix rows(kernel.size(), sig.dim());
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t c = 0; c < sig.dim(); ++c) rows(r, c) = kernel[r][c];
  const auto ech = rref(std::move(rows));
  std::vector<MultiVector> basis;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    std::vector<Rational> coeffs(sig.dim());
    for (std::size_t c = 0; c < sig.dim(); ++c) coeffs[c] = ech.reduced(r, c);
    basis.push_back(MultiVector::from_dense(sig, coeffs));
  }
  return basis;
}

bool is_invertible(const MultiVector& v) {
  if (v.is_zero()) return false;
  return !is_zero(determinant(left_regular_matrix(clear_denominators(v))));
}

std::optional<MultiVector> find_conjugator(const MultiVector& f, const MultiVector& g,
                                           std::uint64_t seed) {
  if (!(f.signature() == g.signature()))
    throw SignatureMismatch(f.signature().name() + " vs " + g.signature().name());
  const Signature& sig = f.signature();
  require_root(f);
  require_root(g);
  auto accept = [&](const MultiVector& v) { return f * v == v * g && is_invertible(v); };

  if (f == g) return one(sig);
  if (sig.ring() == Ring::C && spec(f) != spec(g)) return std::nullopt;
  const MultiVector direct = one(sig) - f * g;
  if (accept(direct)) return direct;

  const auto kernel = nullspace(intertwiner_matrix(f, g));
  if (kernel.empty()) return std::nullopt;
  std::vector<MultiVector> basis;
  for (const auto& v : kernel) basis.push_back(MultiVector::from_dense(sig, v));
  for (const auto& v : basis)
    if (accept(v)) return v;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    MultiVector v(sig);
    for (const auto& b : basis) v += b * Rational(coeff(rng));
    if (accept(v)) return v;
  }
  return std::nullopt;
}

RootClassReport class_of(const MultiVector& f, const MatrixRep* rep) {
  const Signature& sig = f.signature();
  require_root(f);
  const AlgebraClassification cls = classify(sig);

  RootClassReport out{sig, 0, f, std::nullopt, scal(f), 0, 0, std::nullopt, std::nullopt, {},
                      std::nullopt, std::nullopt, true};
  if (sig.has_central_pseudoscalar()) out.spec = spec(f);
  if (!is_zero(out.scal)) throw InconsistencyError("root " + to_string(f) + " has nonzero Scal");

  if (sig.ring() == Ring::C) {
    const Rational kd = *out.spec * cls.d;
    if (kd.get_den() != 1)
      throw InconsistencyError("d * Spec(" + to_string(f) + ") = " + to_string(kd) + " is not an integer");
    out.k = static_cast<int>(kd.get_num().get_si());
  } else if (out.spec && !is_zero(*out.spec)) {
    throw InconsistencyError("root " + to_string(f) + " of " + sig.name() + " has nonzero Spec");
  }
  out.ordinary = out.k == 0;

  const ClassDescriptor desc = class_descriptor(cls, out.k);
  out.centralizer_basis = centralizer(f);
  out.centralizer_dim = out.centralizer_basis.size();
  if (out.centralizer_dim != desc.centralizer_dim)
    throw InconsistencyError("centralizer of " + to_string(f) + " has dimension " +
                             std::to_string(out.centralizer_dim) + ", expected " +
                             std::to_string(desc.centralizer_dim));
  out.class_dim = sig.dim() - out.centralizer_dim;
  if (out.class_dim != desc.class_dim) throw InconsistencyError("class dimension mismatch");
  out.class_cdim = desc.class_cdim;
  out.centralizer_cdim = desc.centralizer_cdim;

  if (sig.ring() == Ring::C) {
    std::optional<MatrixRep> own;
    if (!rep) rep = &own.emplace(sig);
    const CharMinPoly poly = char_min_poly(f, *rep);
    const PolynomialDescriptor expected = expected_char_poly(cls.d, out.k);
    if (!(poly.char_poly == expected.char_poly) || poly.min_poly != expected.min_poly)
      throw InconsistencyError("characteristic polynomial of " + to_string(f) + " disagrees with k");
    out.char_poly = poly.char_poly;
    out.min_poly = poly.min_poly;
  }
  return out;
}

std::vector<RootClassReport> root_classes(const Signature& sig) {
  std::vector<RootClassReport> out;
  if (sig.ring() != Ring::C) {
    out.push_back(class_of(representative_root(sig, 0)));
    return out;
  }
  const MatrixRep rep(sig);
  for (int k = sig.d(); k >= -sig.d(); --k) out.push_back(class_of(representative_root(sig, k), &rep));
  return out;
}

std::string to_string(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::BetaPositive: return "beta>=1";
    case ComponentLabel::BetaNegative: return "beta<=-1";
    case ComponentLabel::C1: return "c1";
    case ComponentLabel::C2: return "c2";
    case ComponentLabel::C3: return "c3";
    case ComponentLabel::C4: return "c4";
  }
  return "?";
}

RationalMatrix to_m2r(const MultiVector& a) {
  const Signature& sig = a.signature();
  const bool euclid = sig == Signature(2, 0);
  if (!euclid && !(sig == Signature(1, 1)))
    throw DomainError("no M(2,R) coordinates for " + sig.name());
  const Rational s = a.coefficient(Blade::scalar());
  const Rational x = a.coefficient(Blade::generator(1));
  const Rational y = a.coefficient(Blade::generator(2));
  const Rational z = a.coefficient(Blade(3));
  RationalMatrix m(2, 2);
  if (euclid) {
    // e12 -> [[0,-1],[1,0]]
    m(0, 0) = s + y;
    m(0, 1) = x - z;
    m(1, 0) = x + z;
    m(1, 1) = s - y;
  } else {
    // e12 -> diag(1,-1)
    m(0, 0) = s + z;
    m(0, 1) = x - y;
    m(1, 0) = x + y;
    m(1, 1) = s - z;
  }
  return m;
}

Rational det_m2r(const MultiVector& a) { return determinant(to_m2r(a)); }

MultiVector factor_plus(const MultiVector& a) {
  const Signature& sig = a.signature();
  if (!(sig == Signature(2, 1))) throw DomainError("factor projections are defined for Cl(2,1)");
  const Signature target(2, 0);
  const std::vector<MultiVector> images{MultiVector::generator(target, 1),
                                        MultiVector::generator(target, 2),
                                        MultiVector::blade(target, Blade(3), -1)};
  return map_generators(a, images);
}

MultiVector factor_minus(const MultiVector& a) {
  const Signature& sig = a.signature();
  if (!(sig == Signature(2, 1))) throw DomainError("factor projections are defined for Cl(2,1)");
  const Signature target(2, 0);
  const std::vector<MultiVector> images{MultiVector::generator(target, 1),
                                        MultiVector::generator(target, 2),
                                        MultiVector::blade(target, Blade(3), 1)};
  return map_generators(a, images);
}

MultiVector from_factors(const MultiVector& a, const MultiVector& b) {
  const Signature sig(2, 1);
  const std::vector<MultiVector> embed{MultiVector::generator(sig, 1), MultiVector::generator(sig, 2)};
  const DoubleSplit split = double_split(sig);
  return map_generators(a, embed) * split.eps_plus + map_generators(b, embed) * split.eps_minus;
}

ComponentLabel component_of_d1(const MultiVector& f) {
  const Signature& sig = f.signature();
  require_root(f);
  if (sig == Signature(2, 1)) {
    const bool p = component_of_d1(factor_plus(f)) == ComponentLabel::BetaPositive;
    const bool m = component_of_d1(factor_minus(f)) == ComponentLabel::BetaPositive;
    if (p) return m ? ComponentLabel::C1 : ComponentLabel::C2;
    return m ? ComponentLabel::C3 : ComponentLabel::C4;
  }
  const RationalMatrix m = to_m2r(f);
  const Rational gap = m(1, 0) - m(0, 1);
  if (gap >= 2) return ComponentLabel::BetaPositive;
  if (gap <= -2) return ComponentLabel::BetaNegative;
  throw InconsistencyError("root " + to_string(f) + " violates |c - b| >= 2");
}

DoubleSplit double_split(const Signature& sig) {
  if (sig.ring() != Ring::R2 && sig.ring() != Ring::H2)
    throw DomainError(sig.name() + " is not a double algebra");
  const MultiVector w = pseudoscalar(sig);
  return {(one(sig) + w) / Rational(2), (one(sig) - w) / Rational(2)};
}

MultiVector swap(const MultiVector& a, const DoubleSplit& split) {
  const Signature& sig = a.signature();
  if (!(split.eps_plus.signature() == sig)) throw SignatureMismatch("swap: split of another algebra");
  MultiVector out(sig);
  const std::uint32_t last = Blade::generator(sig.n()).mask;
  for (const auto& [mask, c] : a.terms()) out += MultiVector::blade(sig, Blade(mask), (mask & last) ? Rational(-c) : c);
  return out;
}

ComponentPermutation component_permutation_check(int det_sign_g, int det_sign_g2, bool inner) {
  const bool g_pos = det_sign_g > 0, g2_pos = det_sign_g2 > 0;
  if (inner) {
    if (g_pos && g2_pos) return {0, 1, 2, 3};
    if (g_pos) return {1, 0, 3, 2};
    if (g2_pos) return {2, 3, 0, 1};
    return {3, 2, 1, 0};
  }
  if (g_pos && g2_pos) return {0, 2, 1, 3};
  if (g_pos) return {1, 3, 0, 2};   // c1 -> c2 -> c4 -> c3 -> c1
  if (g2_pos) return {2, 0, 3, 1};  // c1 -> c3 -> c4 -> c2 -> c1
  return {3, 1, 2, 0};
}

std::string format_permutation(const ComponentPermutation& perm) {
  if (is_identity(perm)) return "identity";
  std::string out;
  std::array<bool, 4> seen{};
  for (int start = 0; start < 4; ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    int i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += " ";
      out += "c" + std::to_string(i + 1);
      first = false;
      i = perm[i];
    }
    out += ")";
  }
  return out;
}

MultiVector sample_component_root(const Signature& sig, ComponentLabel label, std::mt19937_64& rng) {
  if (sig == Signature(2, 1)) {
    const int idx = label_index(label);
    const Signature plane(2, 0);
    const MultiVector a = sample_m2r_root(plane, idx < 2, rng);
    const MultiVector b = sample_m2r_root(plane, idx % 2 == 0, rng);
    return from_factors(a, b);
  }
  if (!(sig == Signature(2, 0)) && !(sig == Signature(1, 1)))
    throw DomainError("no component sampler for " + sig.name());
  if (label != ComponentLabel::BetaPositive && label != ComponentLabel::BetaNegative)
    throw DomainError("not a two-component label");
  return sample_m2r_root(sig, label == ComponentLabel::BetaPositive, rng);
}

MultiVector sample_invertible_m2r(const Signature& sig, int det_sign, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (;;) {
    MultiVector g(sig);
    for (std::uint32_t mask = 0; mask < 4; ++mask) g += MultiVector::blade(sig, Blade(mask), coeff(rng));
    const Rational det = det_m2r(g);
    if (is_zero(det)) continue;
    if ((sgn(det) > 0) != (det_sign > 0)) g = g * MultiVector::generator(sig, 1);
    return g;
  }
}

PermutationObservation observe_component_permutation(int det_sign_g, int det_sign_g2, bool inner,
                                                     int samples_per_component, std::mt19937_64& rng) {
  const Signature sig(2, 1), plane(2, 0);
  const DoubleSplit split = double_split(sig);
  PermutationObservation out{component_permutation_check(det_sign_g, det_sign_g2, inner), {-1, -1, -1, -1},
                             0, true};
  for (int c = 0; c < 4; ++c) {
    for (int s = 0; s < samples_per_component; ++s) {
      const MultiVector f = sample_component_root(sig, kFourLabels[c], rng);
      if (component_of_d1(f) != kFourLabels[c]) throw InconsistencyError("sampled root in wrong component");
      const MultiVector g = sample_invertible_m2r(plane, det_sign_g, rng);
      const MultiVector g2 = sample_invertible_m2r(plane, det_sign_g2, rng);
      const MultiVector v = from_factors(g, g2);
      const auto v_inv = inverse(v);
      if (!v_inv) throw InconsistencyError("conjugating element is not invertible");
      const MultiVector moved = v * (inner ? f : swap(f, split)) * *v_inv;
      const int image = label_index(component_of_d1(moved));
      if (out.observed[c] < 0) out.observed[c] = image;
      if (image != out.observed[c] || image != out.expected[c]) out.consistent = false;
      ++out.samples;
    }
  }
  return out;
}

bool manifold_constraint(const MultiVector& f) {
  const Signature& sig = f.signature();
  if (sig.n() != 2) throw DomainError("root manifolds are parametrized for n = 2 only");
  const Rational beta = f.coefficient(Blade(3));
  return is_zero(f.coefficient(Blade::scalar())) &&
         beta * beta == manifold_rhs(sig, f.coefficient(Blade::generator(1)), f.coefficient(Blade::generator(2)));
}

Rational manifold_rhs(const Signature& sig, const Rational& b1, const Rational& b2) {
  if (sig.n() != 2) throw DomainError("root manifolds are parametrized for n = 2 only");
  const int s1 = sig.generator_square(1), s2 = sig.generator_square(2);
  return b1 * b1 * s2 + b2 * b2 * s1 + s1 * s2;
}

std::vector<ManifoldPoint> sample_manifold(const Signature& sig, int grid) {
  if (sig.n() != 2) throw DomainError("root manifolds are parametrized for n = 2 only");
  if (grid < 2) throw DomainError("grid needs at least 2 points per axis");
  std::vector<ManifoldPoint> out;
  for (int i = 0; i < grid; ++i) {
    const Rational b1 = Rational(-2) + ratio(4 * i, grid - 1);
    for (int j = 0; j < grid; ++j) {
      const Rational b2 = Rational(-2) + ratio(4 * j, grid - 1);
      const Rational rhs = manifold_rhs(sig, b1, b2);
      if (sgn(rhs) < 0) continue;
      if (is_zero(rhs)) {
        out.push_back({b1, b2, 0.0});
        continue;
      }
      const double r = std::sqrt(to_double(rhs));
      out.push_back({b1, b2, r});
      out.push_back({b1, b2, -r});
    }
  }
  return out;
}

std::string manifold_csv(const std::vector<ManifoldPoint>& points) {
  std::ostringstream os;
  os.precision(12);
  os << "b1,b2,beta\n";
  for (const auto& p : points) os << to_double(p.b1) << ',' << to_double(p.b2) << ',' << p.beta << '\n';
  return os.str();
}

}  // namespace cliffroots
