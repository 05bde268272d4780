#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "epslab/length.hpp"
#include "epslab/ring.hpp"

namespace epslab::testutil {

inline Monomial mono(std::initializer_list<std::uint32_t> exps) {
  return Monomial::from_exponents(std::vector<std::uint32_t>(exps));
}

inline MonomialIdeal ideal_of(
    std::uint32_t arity,
    std::initializer_list<std::initializer_list<std::uint32_t>> gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    ms.push_back(Monomial::from_exponents(std::vector<std::uint32_t>(g)));
  }
  return MonomialIdeal::make(arity, std::move(ms));
}

/// All monomials of degree <= max_degree, for brute-force oracles.
inline std::vector<Monomial> monomials_up_to(std::uint32_t arity,
                                             std::uint64_t max_degree) {
  std::vector<Monomial> out;
  for (std::uint64_t e = 0; e <= max_degree; ++e) {
    const auto level = monomials_of_degree(arity, e);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline Ring poly_ring(std::vector<std::string> names) {
  const auto arity = static_cast<std::uint32_t>(names.size());
  return QuotientRing::make(std::move(names), MonomialIdeal::zero(arity));
}

/// k[x,y]
inline Ring ring_xy() { return poly_ring({"x", "y"}); }

/// k[x,y,z]/(z^2, z*y): dim 2, N = (z), dim N = 1
inline Ring ring_nilpotent() {
  return QuotientRing::make(
      {"x", "y", "z"},
      MonomialIdeal::make(3, {Monomial::from_exponents(
                                  std::vector<std::uint32_t>{0, 0, 2}),
                              Monomial::from_exponents(
                                  std::vector<std::uint32_t>{0, 1, 1})}));
}

/// (x^2, x*y) as a RingIdeal of the given 2- or 3-variable ring.
inline RingIdeal ideal_x2_xy(const Ring& ring) {
  std::vector<std::uint32_t> a(ring->arity(), 0), b(ring->arity(), 0);
  a[0] = 2;
  b[0] = 1;
  b[1] = 1;
  return RingIdeal(ring, {Monomial::from_exponents(a),
                          Monomial::from_exponents(b)});
}

}  // namespace epslab::testutil
