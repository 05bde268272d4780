#include "epslab/length.hpp"

#include <algorithm>
#include <limits>

namespace epslab {

namespace {

// Degree-e monomials of the outer ideal for the next level: every one is
// either x_i * (a degree-(e-1) member) or a generator of degree e.
std::vector<simd::ExpBlock> next_level(const std::vector<simd::ExpBlock>& level,
                                       std::uint32_t arity,
                                       const MonomialIdeal& outer,
                                       std::uint64_t next_degree) {
  std::vector<simd::ExpBlock> next;
  next.reserve(level.size() * arity);
  for (const simd::ExpBlock& row : level) {
    for (std::uint32_t i = 0; i < arity; ++i) {
      simd::ExpBlock child = row;
      if (child[i] == std::numeric_limits<std::uint32_t>::max()) {
        throw OverflowError("exponent overflow in level enumeration");
      }
      ++child[i];
      next.push_back(child);
    }
  }
  for (const Monomial& g : outer.generators()) {
    if (g.degree() == next_degree) next.push_back(g.block());
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

std::size_t count_outside(const std::vector<simd::ExpBlock>& rows,
                          const MonomialIdeal& ideal,
                          std::vector<std::uint8_t>& mask) {
  if (rows.empty()) return 0;
  mask.assign(rows.size(), 0);
  const auto gens = ideal.packed_generators();
  simd::active_kernels().member_mask(
      rows.front().data(), rows.size(),
      gens.empty() ? nullptr : gens.front().data(), gens.size(), mask.data());
  std::size_t outside = 0;
  for (const std::uint8_t m : mask) outside += (m == 0);
  return outside;
}

}  // namespace

bool is_finite_colength_pair(const RingIdeal& inner, const RingIdeal& outer) {
  require_same_ring(inner, outer);
  if (!outer.rep().contains(inner.rep())) {
    throw ContainmentError("inner ideal is not contained in the outer ideal");
  }
  const Saturation sat = saturate_max(inner.rep());
  return sat.ideal.contains(outer.rep());
}

LengthResult length_quotient(const RingIdeal& inner, const RingIdeal& outer) {
  require_same_ring(inner, outer);
  const MonomialIdeal& b = inner.rep();
  const MonomialIdeal& a = outer.rep();
  if (!a.contains(b)) {
    throw ContainmentError("inner ideal is not contained in the outer ideal");
  }
  if (b.is_unit() && a.is_unit()) {
    return LengthResult{0, -1, StopCertificate::BothUnit};
  }
  if (a == b) {
    return LengthResult{0, -1, StopCertificate::EqualIdeals};
  }
  if (!is_finite_colength_pair(inner, outer)) {
    throw InfiniteLengthError("quotient does not have finite length");
  }

  // A is strictly larger than B here, so A is nonzero.
  const std::uint32_t arity = a.arity();
  const std::uint64_t min_degree = a.min_generator_degree();
  const std::uint64_t max_degree = a.max_generator_degree();

  std::vector<simd::ExpBlock> level;
  for (const Monomial& g : a.generators()) {
    if (g.degree() == min_degree) level.push_back(g.block());
  }
  std::sort(level.begin(), level.end());

  mpz_class total = 0;
  std::vector<std::uint8_t> mask;
  std::uint64_t degree = min_degree;
  for (;;) {
    const std::size_t outside = count_outside(level, b, mask);
    total += static_cast<unsigned long>(outside);
    if (degree >= max_degree && outside == 0) break;
    level = next_level(level, arity, a, degree + 1);
    ++degree;
    if (degree > min_degree + 1000000) {
      throw Error("level walk failed to terminate; engine bug");
    }
  }
  return LengthResult{std::move(total), static_cast<std::int64_t>(degree),
                      StopCertificate::LevelEmptyPastMaxGenDegree};
}

std::vector<Monomial> monomials_of_degree(std::uint32_t arity,
                                          std::uint64_t degree) {
  if (arity == 0 || arity > kMaxArity) {
    throw DomainError("arity out of range");
  }
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(arity, 0);
  // Lexicographic composition enumeration.
  const auto recurse = [&](auto&& self, std::uint32_t index,
                           std::uint64_t remaining) -> void {
    if (index + 1 == arity) {
      if (remaining > std::numeric_limits<std::uint32_t>::max()) {
        throw OverflowError("degree too large for machine-width exponents");
      }
      exps[index] = static_cast<std::uint32_t>(remaining);
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (std::uint64_t e = remaining + 1; e-- > 0;) {
      if (e > std::numeric_limits<std::uint32_t>::max()) continue;
      exps[index] = static_cast<std::uint32_t>(e);
      self(self, index + 1, remaining - e);
    }
    exps[index] = 0;
  };
  recurse(recurse, 0, degree);
  return out;
}

mpz_class hilbert_function(const MonomialIdeal& ideal, std::uint64_t degree) {
  const std::vector<Monomial> all = monomials_of_degree(ideal.arity(), degree);
  std::vector<simd::ExpBlock> rows;
  rows.reserve(all.size());
  for (const Monomial& m : all) rows.push_back(m.block());
  std::vector<std::uint8_t> mask;
  const std::size_t outside = count_outside(rows, ideal, mask);
  return mpz_class(static_cast<unsigned long>(outside));
}

}  // namespace epslab
