#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epslab/monomial.hpp"

namespace epslab {

/// Largest arity accepted by dimension() (exhaustive vertex-cover search).
inline constexpr std::uint32_t kDimensionArityLimit = 12;

/// A monomial ideal of S = k[x_1..x_r] in canonical form: the unique minimal
/// generating antichain under divisibility, sorted canonically. Two equal
/// ideals always have identical representations. Immutable value type.
class MonomialIdeal {
public:
  static MonomialIdeal zero(std::uint32_t arity);
  static MonomialIdeal unit(std::uint32_t arity);
  /// Minimalizes: drops generators divisible by another, dedups, sorts.
  static MonomialIdeal make(std::uint32_t arity, std::vector<Monomial> gens);

  std::uint32_t arity() const { return arity_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }
  std::uint64_t min_generator_degree() const;  // 0 for the zero ideal
  std::uint64_t max_generator_degree() const;  // 0 for the zero ideal

  /// u is a member iff some generator divides it.
  bool member(const Monomial& u) const;
  /// other ⊆ this
  bool contains(const MonomialIdeal& other) const;

  /// Generator exponent blocks in one contiguous buffer (kernel view).
  std::span<const simd::ExpBlock> packed_generators() const {
    return packed_;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.arity_ == b.arity_ && a.gens_ == b.gens_;
  }

private:
  MonomialIdeal(std::uint32_t arity, std::vector<Monomial> canonical_gens);

  std::uint32_t arity_;
  std::vector<Monomial> gens_;
  std::vector<simd::ExpBlock> packed_;
};

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
/// power(I, 0) is the unit ideal; computed by repeated multiplication.
MonomialIdeal power(const MonomialIdeal& a, std::uint32_t n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// a : b. Colon by the zero ideal is the unit ideal (vacuous condition).
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
/// a : x_i^inf, computed by zeroing the i-th exponent of every generator.
MonomialIdeal saturate_var(const MonomialIdeal& a, std::uint32_t index);

/// Saturation I : m^inf together with the least t such that I : m^t is
/// already saturated.
struct Saturation {
  MonomialIdeal ideal;
  std::uint32_t steps;
};

/// Fixpoint iteration J <- J : m. Cross-checked against the independent
/// variable-wise route on every call; a disagreement is an engine bug.
Saturation saturate_max(const MonomialIdeal& a);

/// Independent saturation route: intersection of the single-variable
/// saturations a : x_i^inf over all i.
MonomialIdeal saturate_vars_oracle(const MonomialIdeal& a);

MonomialIdeal radical(const MonomialIdeal& a);

/// Krull dimension of S/I for proper I, via exhaustive minimum vertex cover
/// of the generator supports. Throws ZeroRingError for the unit ideal and
/// DomainError above kDimensionArityLimit variables.
int dimension(const MonomialIdeal& a);

void require_same_arity(const MonomialIdeal& a, const MonomialIdeal& b);

/// "(x^2, x*y)"; the zero ideal prints as "(0)".
std::string to_string(const MonomialIdeal& a,
                      std::span<const std::string> names);

}  // namespace epslab
