#include "cliffroots/multivector.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cliffroots/errors.hpp"

namespace cliffroots {

namespace {

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw SignatureMismatch("operands belong to " + a.name() + " and " + b.name());
}

// Position of every mask in canonical blade order.
std::vector<std::size_t> canonical_positions(const Signature& sig) {
  const auto blades = canonical_blades(sig);
  std::vector<std::size_t> pos(sig.dim());
  for (std::size_t i = 0; i < blades.size(); ++i) pos[blades[i].mask] = i;
  return pos;
}

}  // namespace

MultiVector::MultiVector(Signature sig, Terms terms) : sig_(sig) {
  for (auto& [mask, c] : terms) {
    if (mask >= sig.dim()) throw DomainError("blade outside " + sig.name());
    if (!cliffroots::is_zero(c)) terms_.emplace(mask, std::move(c));
  }
}

MultiVector MultiVector::scalar(Signature sig, const Rational& value) {
  return blade(sig, Blade::scalar(), value);
}

MultiVector MultiVector::blade(Signature sig, Blade b, const Rational& coeff) {
  if (b.mask >= sig.dim()) throw DomainError("blade " + b.name() + " outside " + sig.name());
  MultiVector mv(sig);
  mv.add_term(b.mask, coeff);
  return mv;
}

MultiVector MultiVector::generator(Signature sig, int index) {
  if (index < 1 || index > sig.n()) throw DomainError("generator index out of range");
  return blade(sig, Blade::generator(index));
}

Rational MultiVector::coefficient(Blade b) const {
  auto it = terms_.find(b.mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> MultiVector::dense() const {
  const auto pos = canonical_positions(sig_);
  std::vector<Rational> out(sig_.dim(), Rational(0));
  for (const auto& [mask, c] : terms_) out[pos[mask]] = c;
  return out;
}

MultiVector MultiVector::from_dense(Signature sig, std::span<const Rational> coeffs) {
  if (coeffs.size() != sig.dim()) throw DomainError("dense coefficient vector has wrong length");
  const auto blades = canonical_blades(sig);
  MultiVector mv(sig);
  for (std::size_t i = 0; i < blades.size(); ++i) mv.add_term(blades[i].mask, coeffs[i]);
  return mv;
}

void MultiVector::add_term(std::uint32_t mask, const Rational& c) {
  if (cliffroots::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (inserted) return;
  it->second += c;
  if (cliffroots::is_zero(it->second)) terms_.erase(it);
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  require_same(sig_, o.sig_);
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
  require_same(sig_, o.sig_);
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const Rational& s) {
  if (cliffroots::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= s;
  return *this;
}

MultiVector& MultiVector::operator/=(const Rational& s) {
  if (cliffroots::is_zero(s)) throw DomainError("division of a multivector by zero");
  for (auto& [mask, c] : terms_) c /= s;
  return *this;
}

MultiVector operator*(const MultiVector& a, const MultiVector& b) {
  require_same(a.sig_, b.sig_);
  MultiVector out(a.sig_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const auto [blade, sign] = blade_product(Blade{ma}, Blade{mb}, a.sig_);
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(blade.mask, c);
    }
  }
  return out;
}

MultiVector geometric_product(const MultiVector& a, const MultiVector& b) { return a * b; }

MultiVector commutator(const MultiVector& a, const MultiVector& b) { return a * b - b * a; }

MultiVector grade_project(const MultiVector& a, int grade) {
  MultiVector::Terms kept;
  for (const auto& [mask, c] : a.terms())
    if (Blade{mask}.grade() == grade) kept.emplace(mask, c);
  return MultiVector(a.signature(), std::move(kept));
}

namespace {

template <typename SignOfGrade>
MultiVector apply_grade_signs(const MultiVector& a, SignOfGrade sign_of) {
  MultiVector::Terms out;
  for (const auto& [mask, c] : a.terms())
    out.emplace(mask, sign_of(Blade{mask}.grade()) < 0 ? Rational(-c) : c);
  return MultiVector(a.signature(), std::move(out));
}

}  // namespace

MultiVector grade_involution(const MultiVector& a) {
  return apply_grade_signs(a, [](int r) { return r % 2 == 0 ? 1 : -1; });
}

MultiVector reversion(const MultiVector& a) {
  return apply_grade_signs(a, [](int r) { return (r * (r - 1) / 2) % 2 == 0 ? 1 : -1; });
}

MultiVector clifford_conjugation(const MultiVector& a) {
  return apply_grade_signs(a, [](int r) { return (r * (r + 1) / 2) % 2 == 0 ? 1 : -1; });
}

Rational scal(const MultiVector& a) { return a.coefficient(Blade::scalar()); }

Rational spec(const MultiVector& a) {
  const Signature& sig = a.signature();
  if (!sig.has_central_pseudoscalar())
    throw DomainError("Spec needs a two-dimensional center; " + sig.name() + " has even n");
  return a.coefficient(Blade::pseudoscalar(sig));
}

MultiVector pseudoscalar(const Signature& sig) {
  return MultiVector::blade(sig, Blade::pseudoscalar(sig));
}

int pseudoscalar_square(const Signature& sig) { return blade_square(Blade::pseudoscalar(sig), sig); }

CommutingSplit split_commuting(const MultiVector& a, const MultiVector& r) {
  const MultiVector minus_one = MultiVector::scalar(r.signature(), -1);
  if (!(r * r == minus_one)) throw DomainError("split_commuting: r is not a square root of -1");
  const MultiVector conj = -(r * a * r);  // r^-1 a r with r^-1 = -r
  const Rational half(1, 2);
  return {(a + conj) * half, (a - conj) * half};
}

Matrix<Rational> left_regular_matrix(const MultiVector& a) {
  const Signature& sig = a.signature();
  const auto blades = canonical_blades(sig);
  const auto pos = canonical_positions(sig);
  Matrix<Rational> m(sig.dim(), sig.dim());
  for (std::size_t col = 0; col < blades.size(); ++col) {
    for (const auto& [mask, c] : a.terms()) {
      const auto [blade, sign] = blade_product(Blade{mask}, blades[col], sig);
      m(pos[blade.mask], col) += sign < 0 ? Rational(-c) : c;
    }
  }
  return m;
}

std::optional<MultiVector> inverse(const MultiVector& a) {
  const Signature& sig = a.signature();
  std::vector<Rational> unit(sig.dim(), Rational(0));
  unit[0] = 1;
  const auto x = solve(left_regular_matrix(a), unit);
  if (!x) return std::nullopt;
  MultiVector inv = MultiVector::from_dense(sig, *x);
  if (!(inv * a == MultiVector::scalar(sig, 1))) return std::nullopt;
  return inv;
}

MultiVector map_generators(const MultiVector& a, std::span<const MultiVector> images) {
  const Signature& src = a.signature();
  if (images.size() != static_cast<std::size_t>(src.n()))
    throw DomainError("map_generators needs one image per generator");
  const Signature& dst = images.front().signature();
  MultiVector out(dst);
  for (const auto& [mask, c] : a.terms()) {
    MultiVector term = MultiVector::scalar(dst, c);
    for (int i : Blade{mask}.indices()) term = term * images[i - 1];
    out += term;
  }
  return out;
}

std::string to_string(const MultiVector& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Blade, Rational>> sorted;
  for (const auto& [mask, c] : a.terms()) sorted.emplace_back(Blade{mask}, c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  std::string out;
  bool first = true;
  for (const auto& [blade, c] : sorted) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (blade.mask == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += blade.name();
    } else {
      out += to_string(mag) + "*" + blade.name();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiVector& a) { return os << to_string(a); }

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  MultiVector parse() {
    MultiVector v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("multivector literal '" + std::string(text_) + "' at column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiVector expr() {
    MultiVector acc(sig_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiVector t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiVector term() {
    MultiVector acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        MultiVector divisor = factor();
        if (!(divisor == MultiVector::scalar(sig_, scal(divisor))) || divisor.is_zero()) {
          pos_ = at;
          fail("divisor must be a nonzero scalar");
        }
        acc /= scal(divisor);
      } else {
        break;
      }
    }
    return acc;
  }

  MultiVector factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiVector inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {  // unary minus inside a product, e.g. 2*-e1
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiVector::scalar(sig_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (text_.substr(pos_, 2) == "Id") {
      pos_ += 2;
      return MultiVector::scalar(sig_, 1);
    }
    if (c == 'e') {
      ++pos_;
      return blade_literal();
    }
    fail("expected a number, blade or '('");
  }

  MultiVector blade_literal() {
    std::vector<int> idx;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      while (true) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected generator index");
        idx.push_back(std::stoi(std::string(text_.substr(start, pos_ - start))));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == '}') {
          ++pos_;
          break;
        }
        fail("expected ',' or '}'");
      }
    } else {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        idx.push_back(text_[pos_++] - '0');
      if (idx.empty()) fail("blade needs at least one index");
    }
    MultiVector v = MultiVector::scalar(sig_, 1);
    for (int i : idx) {
      if (i < 1 || i > sig_.n()) fail("generator e" + std::to_string(i) + " not in " + sig_.name());
      v = v * MultiVector::generator(sig_, i);
    }
    return v;
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiVector parse_multivector(std::string_view text, const Signature& sig) {
  return Parser(text, sig).parse();
}

}  // namespace cliffroots
