#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "epslab/errors.hpp"
#include "epslab/kernels.hpp"

namespace epslab {

/// Largest supported number of ambient variables (one exponent block).
inline constexpr std::uint32_t kMaxArity =
    static_cast<std::uint32_t>(simd::kBlockLanes);

/// A monomial of the polynomial ring k[x_1..x_r]: an exponent vector of
/// fixed arity with a cached total degree. Immutable value type.
class Monomial {
public:
  static Monomial one(std::uint32_t arity);
  static Monomial variable(std::uint32_t arity, std::uint32_t index);
  static Monomial from_exponents(std::span<const std::uint32_t> exponents);

  std::uint32_t arity() const { return arity_; }
  std::uint64_t degree() const { return degree_; }
  std::uint32_t exponent(std::uint32_t i) const;
  bool is_one() const { return degree_ == 0; }

  /// this | other, i.e. exponentwise <=
  bool divides(const Monomial& other) const;
  /// product; throws OverflowError when an exponent leaves machine width
  Monomial times(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// exponentwise max(a - b, 0); generator of the colon by `other`
  Monomial quotient(const Monomial& other) const;
  Monomial with_exponent_zeroed(std::uint32_t index) const;
  /// squarefree part (every positive exponent clamped to 1)
  Monomial support() const;
  /// bit i set iff exponent(i) > 0
  std::uint32_t support_mask() const;

  const simd::ExpBlock& block() const { return exps_; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

private:
  Monomial(std::uint32_t arity, const simd::ExpBlock& exps);

  std::uint32_t arity_;
  std::uint64_t degree_;
  simd::ExpBlock exps_;
};

/// Canonical (graded lexicographic) generator order: lower degree first,
/// ties broken with the lexicographically larger exponent vector first, so
/// x^2 precedes x*y precedes y^2.
bool canonical_less(const Monomial& a, const Monomial& b);

void require_same_arity(const Monomial& a, const Monomial& b);

/// Canonical text form, e.g. "x^2*y"; the identity prints as "1".
std::string to_string(const Monomial& m, std::span<const std::string> names);

}  // namespace epslab
