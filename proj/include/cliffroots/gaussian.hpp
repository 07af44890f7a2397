#pragma once

#include <string>

#include "cliffroots/linalg.hpp"
#include "cliffroots/rational.hpp"

namespace cliffroots {

// Element re + im*i of Q(i).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(int r) : re(r), im(0) {}  // NOLINT: integer literals act as scalars
  GaussRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    const Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const GaussRational& z) { return is_zero(z.re) && is_zero(z.im); }

using GaussMatrix = Matrix<GaussRational>;
using RationalMatrix = Matrix<Rational>;

// "a", "b*i", "a+b*i" with canonical rationals.
std::string to_string(const GaussRational& z);

}  // namespace cliffroots
