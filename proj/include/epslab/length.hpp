#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "epslab/ring.hpp"

namespace epslab {

enum class StopCertificate {
  /// The level walk reached a degree at or past the largest generator degree
  /// of the outer ideal that contributed nothing; every later level is empty.
  LevelEmptyPastMaxGenDegree,
  /// Both ideals are the unit ideal.
  BothUnit,
  /// The ideals are equal.
  EqualIdeals,
};

/// Exact length of a finite quotient together with its stopping certificate.
struct LengthResult {
  mpz_class value;
  std::int64_t degree_cutoff = -1;  // last degree examined; -1 for trivia
  StopCertificate certificate = StopCertificate::EqualIdeals;
};

/// True iff l(A/B) is finite, i.e. A is contained in the saturation of B.
/// Requires B ⊆ A (ContainmentError otherwise).
bool is_finite_colength_pair(const RingIdeal& inner, const RingIdeal& outer);

/// l(A/B): the number of monomials lying in rep(A) but not rep(B), counted
/// degree level by degree level with a certified stopping rule. Throws
/// ContainmentError when B ⊄ A and InfiniteLengthError when the quotient is
/// not of finite length.
LengthResult length_quotient(const RingIdeal& inner, const RingIdeal& outer);

/// Number of degree-e monomials NOT in the ideal (ambient count). The
/// independent oracle for length_quotient:
///   l(A/B) = sum_e [HF(B, e) - HF(A, e)].
mpz_class hilbert_function(const MonomialIdeal& ideal, std::uint64_t degree);

/// All monomials of the given degree in `arity` variables, canonical order.
std::vector<Monomial> monomials_of_degree(std::uint32_t arity,
                                          std::uint64_t degree);

}  // namespace epslab
