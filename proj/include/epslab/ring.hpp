#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "epslab/ideal.hpp"

namespace epslab {

class QuotientRing;
using Ring = std::shared_ptr<const QuotientRing>;

/// R = S/Q for a proper monomial ideal Q of S = k[x_1..x_r]. Construction
/// caches the nilradical N = rad(Q)/Q, its annihilator, and the Krull
/// dimensions that normalize every limit. The graded ring stands in for the
/// local ring at the irrelevant maximal ideal; all the finite lengths the
/// workbench computes agree between the two.
class QuotientRing {
public:
  static Ring make(std::vector<std::string> names, MonomialIdeal q);

  std::uint32_t arity() const { return arity_; }
  std::span<const std::string> names() const { return names_; }
  const MonomialIdeal& defining_ideal() const { return q_; }
  /// rad(Q); the ambient representative of the nilradical
  const MonomialIdeal& nilradical_ambient() const { return nilrad_; }
  /// Q : rad(Q); ambient annihilator of the nilradical
  const MonomialIdeal& nilradical_annihilator() const { return ann_nilrad_; }
  /// ambient ideal (x_1..x_r); representative of the maximal ideal of R
  const MonomialIdeal& variable_ideal_ambient() const { return var_ideal_; }

  int dim() const { return dim_ring_; }
  /// dim of N as an R-module; -1 when N = 0
  int dim_nilradical() const { return dim_nilradical_; }
  bool nilradical_is_zero() const { return dim_nilradical_ < 0; }
  bool analytically_unramified() const { return nilradical_is_zero(); }
  /// dim N < dim R (trivially true when N = 0)
  bool hypothesis_holds() const { return dim_nilradical_ < dim_ring_; }

  /// Stable content hash (arity, names, Q); used for sequence-cache keys.
  std::uint64_t content_hash() const { return hash_; }

  friend bool same_ring(const QuotientRing& a, const QuotientRing& b);

private:
  QuotientRing(std::vector<std::string> names, MonomialIdeal q,
               MonomialIdeal nilrad, MonomialIdeal ann, MonomialIdeal vars,
               int dim_ring, int dim_nilradical);

  std::uint32_t arity_;
  std::vector<std::string> names_;
  MonomialIdeal q_;
  MonomialIdeal nilrad_;
  MonomialIdeal ann_nilrad_;
  MonomialIdeal var_ideal_;
  int dim_ring_;
  int dim_nilradical_;
  std::uint64_t hash_;
};

/// R/N = S/rad(Q); returns `ring` itself when N = 0.
Ring reduced_ring(const Ring& ring);

/// An ideal of a quotient ring, held as its ambient representative, which
/// always contains Q and is canonical. Equality over one ring is equality
/// of representatives.
class RingIdeal {
public:
  RingIdeal(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const { return ring_; }
  const MonomialIdeal& rep() const { return rep_; }
  bool is_zero_in_ring() const { return rep_ == ring_->defining_ideal(); }
  bool is_unit() const { return rep_.is_unit(); }
  std::uint64_t content_hash() const;

  friend bool operator==(const RingIdeal& a, const RingIdeal& b);

private:
  Ring ring_;
  MonomialIdeal rep_;
};

RingIdeal zero_ideal(const Ring& ring);
RingIdeal unit_ideal(const Ring& ring);
/// The maximal ideal (all variables) of R.
RingIdeal maximal_ideal(const Ring& ring);
/// N as an ideal of R.
RingIdeal nilradical_ideal(const Ring& ring);
/// Ideal with the given ambient representative (Q is added automatically).
RingIdeal ideal_from_rep(const Ring& ring, const MonomialIdeal& rep);

RingIdeal r_add(const RingIdeal& a, const RingIdeal& b);
RingIdeal r_multiply(const RingIdeal& a, const RingIdeal& b);
RingIdeal r_power(const RingIdeal& a, std::uint32_t n);
RingIdeal r_intersect(const RingIdeal& a, const RingIdeal& b);
RingIdeal r_colon(const RingIdeal& a, const RingIdeal& b);

struct RingSaturation {
  RingIdeal ideal;
  std::uint32_t steps;
};

/// Saturation at the maximal ideal, computed on the ambient representative.
RingSaturation r_saturate(const RingIdeal& a);

/// (I + N)/N as an ideal of the reduced ring R/N.
RingIdeal image_mod_n(const RingIdeal& a);

/// powers[j] = I^j for j = 0..max_exp (powers[0] is the unit ideal).
std::vector<RingIdeal> ideal_powers(const RingIdeal& a, int max_exp);

void require_same_ring(const RingIdeal& a, const RingIdeal& b);

std::string to_string(const RingIdeal& a);

}  // namespace epslab
