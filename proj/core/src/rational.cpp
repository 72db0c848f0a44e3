#include "cpcheck/rational.hpp"

#include <stdexcept>

namespace cpcheck {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty token");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Int& num = r.get_num();
  const Int& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rat root(sn, sd);
  root.canonicalize();
  return root;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rat nre = re * o.re - im * o.im;
  Rat nim = re * o.im + im * o.re;
  re = std::move(nre);
  im = std::move(nim);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rat d = o.abs2();
  if (sgn(d) == 0) throw std::domain_error("GaussianRational: division by zero");
  Rat nre = (re * o.re + im * o.im) / d;
  Rat nim = (im * o.re - re * o.im) / d;
  re = std::move(nre);
  im = std::move(nim);
  return *this;
}

GaussianRational gauss_i() { return {Rat(0), Rat(1)}; }

GaussianRational gauss(long a, long b, long c, long d) { return {rat(a, b), rat(c, d)}; }

std::optional<GaussianRational> gauss_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational{};
  if (z.is_real()) {
    if (auto r = rat_sqrt(z.re)) return GaussianRational{*r, Rat(0)};
    if (auto r = rat_sqrt(Rat(-z.re))) return GaussianRational{Rat(0), *r};
    return std::nullopt;
  }
  // w = c + di with c^2 - d^2 = re, 2cd = im requires |z| rational.
  auto norm = rat_sqrt(z.abs2());
  if (!norm) return std::nullopt;
  auto c2 = rat_sqrt(Rat((z.re + *norm) / 2));
  if (!c2) return std::nullopt;
  if (sgn(*c2) == 0) return std::nullopt;  // z real was handled above
  Rat d = Rat(z.im / (2 * *c2));
  GaussianRational w{*c2, d};
  if (w * w == z) return w;
  return std::nullopt;
}

std::string entry_to_string(const GaussianRational& z) {
  if (z.is_real()) return rat_to_string(z.re);
  std::string imag = rat_to_string(z.im) + "i";
  if (sgn(z.re) == 0) return imag;
  if (sgn(z.im) > 0) return rat_to_string(z.re) + "+" + imag;
  return rat_to_string(z.re) + imag;  // imag already carries the minus sign
}

namespace {

// Splits "a/b+c/d" style composites at the sign that separates the two
// rationals: a '+' or '-' which directly follows a digit.
size_t find_split(const std::string& s) {
  for (size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && std::isdigit(static_cast<unsigned char>(s[k - 1]))) return k;
  }
  return std::string::npos;
}

}  // namespace

GaussianRational entry_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("entry_from_string: empty token");
  if (s.back() != 'i') return {rat_from_string(s), Rat(0)};
  std::string body = s.substr(0, s.size() - 1);
  if (body.empty()) throw std::invalid_argument("entry_from_string: bare 'i' not allowed, write 1/1i");
  size_t split = find_split(body);
  if (split == std::string::npos) return {Rat(0), rat_from_string(body)};
  std::string re_part = body.substr(0, split);
  std::string im_part = body.substr(split);
  if (im_part[0] == '+') im_part.erase(0, 1);
  return {rat_from_string(re_part), rat_from_string(im_part)};
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace cpcheck
