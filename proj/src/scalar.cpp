#include "tolpoly/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace tolpoly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  const std::string original(text);
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      mpz_class num = parse_integer(text.substr(0, slash));
      mpz_class den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = text.substr(e + 1);
      mpz_class ez = parse_integer(exp_part);
      if (!ez.fits_slong_p() || abs(ez) > 4096) throw std::invalid_argument("exponent out of range");
      exponent = ez.get_si();
      text = text.substr(0, e);
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("no digits");
    if (!int_part.empty() && !all_digits(int_part)) throw std::invalid_argument("bad digits");
    if (!frac_part.empty() && !all_digits(frac_part)) throw std::invalid_argument("bad digits");

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    long scale10 = exponent - static_cast<long>(frac_part.size());
    Scalar q;
    if (scale10 >= 0) {
      q = Scalar(mantissa * pow10(static_cast<unsigned long>(scale10)));
    } else {
      q = Scalar(mantissa, pow10(static_cast<unsigned long>(-scale10)));
      q.canonicalize();
    }
    return negative ? Scalar(-q) : q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid rational literal '" + original + "'");
  }
}

std::string to_string(const Scalar& input) {
  Scalar value = input;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Scalar& value, int digits) {
  if (digits < 0) digits = 0;
  const mpz_class factor = pow10(static_cast<unsigned long>(digits));
  const Scalar scaled = abs(value) * factor;
  // round half away from zero: floor(scaled + 1/2)
  Scalar shifted = scaled + Scalar(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());

  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (value < 0 && rounded != 0) s.insert(0, "-");
  return s;
}

std::string to_display(const Scalar& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value.get_d());
  return buf;
}

Vec zeros(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit(std::size_t n, std::size_t axis) {
  Vec v = zeros(n);
  v.at(axis) = 1;
  return v;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(std::span<const Scalar> a, const Scalar& factor) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * factor;
  return r;
}

Vec negate(std::span<const Scalar> a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(std::span<const Scalar> a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Scalar primitive_factor(std::span<const Scalar> a) {
  mpz_class lcm_den = 1;
  for (const auto& x : a)
    if (sgn(x) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class gcd_num = 0;
  for (const auto& x : a) {
    if (sgn(x) == 0) continue;
    mpz_class scaled = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  if (gcd_num == 0) throw std::invalid_argument("primitive_factor of zero vector");
  Scalar f(lcm_den, gcd_num);
  f.canonicalize();
  return f;
}

Vec primitive(std::span<const Scalar> a) { return scale(a, primitive_factor(a)); }

std::string to_string(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tolpoly
