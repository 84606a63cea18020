#include "hgreg/precision.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>

namespace hgreg {

// Scientific notation "[-]d.dddd...e[+-]k" with exactly `digits` mantissa
// digits, independent of locale.  Deterministic for a given (value, digits).
std::string to_string(const XReal& x, long digits) {
  if (digits < 2) digits = 2;
  if (mpfr_nan_p(x.raw())) return "nan";
  if (mpfr_inf_p(x.raw())) return mpfr_sgn(x.raw()) < 0 ? "-inf" : "inf";
  if (x.is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.raw(),
                         MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m = m.substr(1);
  }
  // m holds `digits` digits with implied decimal point before the first:
  // value = 0.m * 10^e.  Convert to d.ddd e(e-1).
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  long ee = static_cast<long>(e) - 1;
  out += "e";
  if (ee >= 0) out += "+";
  out += std::to_string(ee);
  return out;
}

std::string to_string(const XComplex& z, long digits) {
  if (z.im.is_zero()) return to_string(z.re, digits);
  std::string im = to_string(z.im, digits);
  if (!im.empty() && im[0] == '-')
    return to_string(z.re, digits) + " - " + im.substr(1) + "i";
  return to_string(z.re, digits) + " + " + im + "i";
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw domain_error("empty rational literal");
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  // Accept [-]digits or [-]digits/[-]digits only.
  auto is_int = [](const std::string& u) {
    if (u.empty()) return false;
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  size_t slash = t.find('/');
  if (slash == std::string::npos) {
    if (!is_int(t))
      throw domain_error("rational literal must be an integer or p/q: " + s);
    return Rational(t);
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw domain_error("rational literal must be an integer or p/q: " + s);
  Rational q(num + "/" + den);
  if (q.get_den() == 0) throw domain_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace hgreg
