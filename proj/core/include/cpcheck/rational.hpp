#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cpcheck {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds the canonical rational num/den (lowest terms, positive denominator).
Rat rat(long num, long den = 1);

/// Parses "p/q" or "p" (arbitrary precision, optional sign).
Rat rat_from_string(const std::string& s);

/// Canonical rendering "p/q", denominator always present and positive.
std::string rat_to_string(const Rat& r);

/// Exact square root of a nonnegative rational, if it is again rational.
std::optional<Rat> rat_sqrt(const Rat& r);

/// Complex scalar a + b*i with exact rational parts. All arithmetic is exact;
/// results stay in lowest terms because mpq_class canonicalizes on the fly.
struct GaussianRational {
  Rat re;
  Rat im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rat r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// Squared modulus re^2 + im^2, an exact nonnegative rational.
  Rat abs2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return cmp(a.re, b.re) == 0 && cmp(a.im, b.im) == 0;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// The imaginary unit.
GaussianRational gauss_i();

/// Builds (a/b) + (c/d)i.
GaussianRational gauss(long a, long b = 1, long c = 0, long d = 1);

/// Exact square root in Q(i), if one exists.
std::optional<GaussianRational> gauss_sqrt(const GaussianRational& z);

/// Canonical text form: "a/b", "c/di", "-c/di", "a/b+c/di" or "a/b-c/di".
std::string entry_to_string(const GaussianRational& z);

/// Parses the forms produced by entry_to_string (also tolerates
/// non-canonical rationals such as "2/4", which are reduced).
GaussianRational entry_from_string(const std::string& s);

double to_double(const Rat& r);

}  // namespace cpcheck
