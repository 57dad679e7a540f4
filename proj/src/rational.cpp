#include "rational.hpp"

#include <cctype>
#include <cstdio>

#include "errors.hpp"

namespace fliptop {

Rat rat_pow(const Rat& q, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  if (sgn(r.get_den()) < 0) {
    r.get_num() = -r.get_num();
    r.get_den() = -r.get_den();
  }
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty rational literal");
  auto digits_with_sign = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!digits_with_sign(num) || !digits_with_sign(den))
      throw InvalidArgument("malformed rational '" + text + "'");
    Int num_i(num), den_i(den);
    if (sgn(den_i) == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    Rat r(num_i, den_i);
    r.canonicalize();
    return r;
  }

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!digits_with_sign(head) || tail.empty() || !digits_with_sign(tail) ||
        tail[0] == '-' || tail[0] == '+')
      throw InvalidArgument("malformed decimal '" + text + "'");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
    Int whole(head);
    Int frac(tail);
    bool neg = text[0] == '-';
    Int total = abs(whole) * scale + frac;
    Rat r(neg ? Int(-total) : total, scale);
    r.canonicalize();
    return r;
  }

  if (!digits_with_sign(text)) throw InvalidArgument("malformed rational '" + text + "'");
  return Rat(Int(text));
}

std::string rat_str(const Rat& q) { return q.get_str(); }

double rat_d(const Rat& q) { return q.get_d(); }

std::string dec_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace fliptop
