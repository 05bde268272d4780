#include "epslab/rational.hpp"

#include <cctype>
#include <cstdio>

#include "epslab/errors.hpp"

namespace epslab {

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class int_pow(const mpz_class& base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

mpq_class exact_ratio(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num);
  q /= mpq_class(den);
  return q;
}

mpq_class abs_q(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string to_string(const mpz_class& z) { return z.get_str(); }

std::string to_decimal_string(const mpq_class& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", q.get_d());
  return buf;
}

mpq_class parse_rational(const std::string& text) {
  const auto bad = [&](std::size_t col) {
    return ParseError("invalid rational '" + text + "'", 1, col + 1);
  };
  std::size_t i = 0;
  const auto digits = [&]() {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) throw bad(i);
  };
  if (i < text.size() && text[i] == '-') ++i;
  digits();
  const std::size_t num_end = i;
  std::string den_text = "1";
  if (i < text.size()) {
    if (text[i] != '/') throw bad(i);
    const std::size_t den_start = ++i;
    digits();
    if (i != text.size()) throw bad(i);
    den_text = text.substr(den_start);
  }
  const mpz_class num(text.substr(0, num_end));
  const mpz_class den(den_text);
  if (den == 0) throw bad(num_end + 1);
  return exact_ratio(num, den);
}

}  // namespace epslab
