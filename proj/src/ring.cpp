#include "epslab/ring.hpp"

#include <algorithm>
#include <set>

namespace epslab {

namespace {

std::uint64_t fnv1a_init() { return 1469598103934665603ull; }

void fnv1a_mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
}

void fnv1a_mix_str(std::uint64_t& h, const std::string& s) {
  for (const char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ull;
  }
  fnv1a_mix(h, 0x1f);  // separator
}

void fnv1a_mix_ideal(std::uint64_t& h, const MonomialIdeal& ideal) {
  fnv1a_mix(h, ideal.generator_count());
  for (const Monomial& g : ideal.generators()) {
    for (std::uint32_t i = 0; i < ideal.arity(); ++i) {
      fnv1a_mix(h, g.exponent(i));
    }
  }
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  const auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

MonomialIdeal all_variables_ideal(std::uint32_t arity) {
  std::vector<Monomial> gens;
  gens.reserve(arity);
  for (std::uint32_t i = 0; i < arity; ++i) {
    gens.push_back(Monomial::variable(arity, i));
  }
  return MonomialIdeal::make(arity, std::move(gens));
}

}  // namespace

QuotientRing::QuotientRing(std::vector<std::string> names, MonomialIdeal q,
                           MonomialIdeal nilrad, MonomialIdeal ann,
                           MonomialIdeal vars, int dim_ring,
                           int dim_nilradical)
    : arity_(static_cast<std::uint32_t>(names.size())),
      names_(std::move(names)),
      q_(std::move(q)),
      nilrad_(std::move(nilrad)),
      ann_nilrad_(std::move(ann)),
      var_ideal_(std::move(vars)),
      dim_ring_(dim_ring),
      dim_nilradical_(dim_nilradical) {
  std::uint64_t h = fnv1a_init();
  fnv1a_mix(h, arity_);
  for (const std::string& n : names_) fnv1a_mix_str(h, n);
  fnv1a_mix_ideal(h, q_);
  hash_ = h;
}

Ring QuotientRing::make(std::vector<std::string> names, MonomialIdeal q) {
  if (names.empty() || names.size() > kDimensionArityLimit) {
    throw DomainError("ring needs between 1 and " +
                      std::to_string(kDimensionArityLimit) + " variables");
  }
  std::set<std::string> unique_names;
  for (const std::string& n : names) {
    if (!valid_identifier(n)) {
      throw DomainError("invalid variable name '" + n + "'");
    }
    if (!unique_names.insert(n).second) {
      throw DomainError("duplicate variable name '" + n + "'");
    }
  }
  if (q.arity() != names.size()) {
    throw ArityMismatchError("quotient ideal arity does not match variables");
  }
  if (q.is_unit()) {
    throw DomainError("quotient by the unit ideal is the zero ring");
  }

  MonomialIdeal nilrad = radical(q);
  const int dim_ring = dimension(q);
  const bool reduced = (nilrad == q);
  // Q : rad(Q); annihilator of N. Equals the unit ideal exactly when N = 0.
  MonomialIdeal ann = colon(q, nilrad);
  const int dim_nil = reduced ? -1 : dimension(ann);
  MonomialIdeal vars = all_variables_ideal(q.arity());
  return Ring(new QuotientRing(std::move(names), std::move(q),
                               std::move(nilrad), std::move(ann),
                               std::move(vars), dim_ring, dim_nil));
}

bool same_ring(const QuotientRing& a, const QuotientRing& b) {
  if (&a == &b) return true;
  return a.arity_ == b.arity_ && a.names_ == b.names_ && a.q_ == b.q_;
}

Ring reduced_ring(const Ring& ring) {
  if (ring->nilradical_is_zero()) return ring;
  std::vector<std::string> names(ring->names().begin(), ring->names().end());
  return QuotientRing::make(std::move(names), ring->nilradical_ambient());
}

RingIdeal::RingIdeal(Ring ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)),
      rep_(MonomialIdeal::zero(1)) {
  for (const Monomial& g : gens) {
    if (g.arity() != ring_->arity()) {
      throw ArityMismatchError("generator arity does not match the ring");
    }
  }
  const auto& q_gens = ring_->defining_ideal().generators();
  gens.insert(gens.end(), q_gens.begin(), q_gens.end());
  rep_ = MonomialIdeal::make(ring_->arity(), std::move(gens));
}

std::uint64_t RingIdeal::content_hash() const {
  std::uint64_t h = ring_->content_hash();
  fnv1a_mix(h, 0x9e3779b97f4a7c15ull);
  fnv1a_mix_ideal(h, rep_);
  return h;
}

bool operator==(const RingIdeal& a, const RingIdeal& b) {
  return same_ring(*a.ring(), *b.ring()) && a.rep() == b.rep();
}

RingIdeal zero_ideal(const Ring& ring) { return RingIdeal(ring, {}); }

RingIdeal unit_ideal(const Ring& ring) {
  return RingIdeal(ring, {Monomial::one(ring->arity())});
}

RingIdeal maximal_ideal(const Ring& ring) {
  return ideal_from_rep(ring, ring->variable_ideal_ambient());
}

RingIdeal nilradical_ideal(const Ring& ring) {
  return ideal_from_rep(ring, ring->nilradical_ambient());
}

RingIdeal ideal_from_rep(const Ring& ring, const MonomialIdeal& rep) {
  if (rep.arity() != ring->arity()) {
    throw ArityMismatchError("representative arity does not match the ring");
  }
  return RingIdeal(ring, rep.generators());
}

void require_same_ring(const RingIdeal& a, const RingIdeal& b) {
  if (!same_ring(*a.ring(), *b.ring())) {
    throw RingMismatchError("operands belong to different quotient rings");
  }
}

RingIdeal r_add(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  return ideal_from_rep(a.ring(), add(a.rep(), b.rep()));
}

RingIdeal r_multiply(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  return ideal_from_rep(a.ring(), multiply(a.rep(), b.rep()));
}

RingIdeal r_power(const RingIdeal& a, std::uint32_t n) {
  return ideal_from_rep(a.ring(), power(a.rep(), n));
}

RingIdeal r_intersect(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  return ideal_from_rep(a.ring(), intersect(a.rep(), b.rep()));
}

RingIdeal r_colon(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  return ideal_from_rep(a.ring(), colon(a.rep(), b.rep()));
}

RingSaturation r_saturate(const RingIdeal& a) {
  Saturation s = saturate_max(a.rep());
  return RingSaturation{ideal_from_rep(a.ring(), s.ideal), s.steps};
}

RingIdeal image_mod_n(const RingIdeal& a) {
  const Ring reduced = reduced_ring(a.ring());
  return ideal_from_rep(reduced,
                        add(a.rep(), a.ring()->nilradical_ambient()));
}

std::vector<RingIdeal> ideal_powers(const RingIdeal& a, int max_exp) {
  if (max_exp < 0) throw DomainError("max_exp must be non-negative");
  std::vector<RingIdeal> powers;
  powers.reserve(static_cast<std::size_t>(max_exp) + 1);
  powers.push_back(unit_ideal(a.ring()));
  if (max_exp >= 1) powers.push_back(a);
  for (int j = 2; j <= max_exp; ++j) {
    powers.push_back(r_multiply(powers.back(), a));
  }
  return powers;
}

std::string to_string(const RingIdeal& a) {
  return to_string(a.rep(), a.ring()->names());
}

}  // namespace epslab
