#pragma once

#include <gmpxx.h>

#include <string>

namespace epslab {

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
/// n^d as an exact integer.
mpz_class int_pow(const mpz_class& base, unsigned long exp);

/// num/den as a canonical rational; den must be nonzero.
mpq_class exact_ratio(const mpz_class& num, const mpz_class& den);
mpq_class abs_q(const mpq_class& q);

/// Canonical "p/q" (just "p" when the denominator is 1).
std::string to_string(const mpq_class& q);
std::string to_string(const mpz_class& z);
/// Decimal approximation for human-facing reports.
std::string to_decimal_string(const mpq_class& q);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
mpq_class parse_rational(const std::string& text);

}  // namespace epslab
