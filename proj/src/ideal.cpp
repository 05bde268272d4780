#include "epslab/ideal.hpp"

#include <algorithm>
#include <bit>

namespace epslab {

namespace {

void require_valid_arity(std::uint32_t arity) {
  if (arity == 0 || arity > kMaxArity) {
    throw DomainError("ideal arity must be between 1 and " +
                      std::to_string(kMaxArity) + ", got " +
                      std::to_string(arity));
  }
}

MonomialIdeal variable_ideal(std::uint32_t arity) {
  std::vector<Monomial> gens;
  gens.reserve(arity);
  for (std::uint32_t i = 0; i < arity; ++i) {
    gens.push_back(Monomial::variable(arity, i));
  }
  return MonomialIdeal::make(arity, std::move(gens));
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::uint32_t arity,
                             std::vector<Monomial> canonical_gens)
    : arity_(arity), gens_(std::move(canonical_gens)) {
  packed_.reserve(gens_.size());
  for (const Monomial& g : gens_) packed_.push_back(g.block());
}

MonomialIdeal MonomialIdeal::zero(std::uint32_t arity) {
  require_valid_arity(arity);
  return MonomialIdeal(arity, {});
}

MonomialIdeal MonomialIdeal::unit(std::uint32_t arity) {
  require_valid_arity(arity);
  return MonomialIdeal(arity, {Monomial::one(arity)});
}

MonomialIdeal MonomialIdeal::make(std::uint32_t arity,
                                  std::vector<Monomial> gens) {
  require_valid_arity(arity);
  for (const Monomial& g : gens) {
    if (g.arity() != arity) {
      throw ArityMismatchError(
          "generator arity " + std::to_string(g.arity()) +
          " does not match ideal arity " + std::to_string(arity));
    }
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!gens.empty() && gens.front().is_one()) return unit(arity);

  // Antichain scan: generators are sorted by degree, so any divisor of a
  // candidate has already been kept.
  const auto& kernels = simd::active_kernels();
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& h : kept) {
      if (h.degree() >= g.degree()) break;  // kept is degree-sorted
      if (kernels.divides(h.block().data(), g.block().data())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return MonomialIdeal(arity, std::move(kept));
}

std::uint64_t MonomialIdeal::min_generator_degree() const {
  return gens_.empty() ? 0 : gens_.front().degree();
}

std::uint64_t MonomialIdeal::max_generator_degree() const {
  return gens_.empty() ? 0 : gens_.back().degree();
}

bool MonomialIdeal::member(const Monomial& u) const {
  if (u.arity() != arity_) {
    throw ArityMismatchError("membership test across arities");
  }
  const auto& kernels = simd::active_kernels();
  for (const simd::ExpBlock& g : packed_) {
    if (kernels.divides(g.data(), u.block().data())) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_arity(*this, other);
  for (const Monomial& g : other.gens_) {
    if (!member(g)) return false;
  }
  return true;
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::make(a.arity(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) {
      gens.push_back(u.times(v));
    }
  }
  return MonomialIdeal::make(a.arity(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::uint32_t n) {
  if (n == 0) return MonomialIdeal::unit(a.arity());
  MonomialIdeal result = a;
  for (std::uint32_t i = 1; i < n; ++i) result = multiply(result, a);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) {
      gens.push_back(u.lcm(v));
    }
  }
  return MonomialIdeal::make(a.arity(), std::move(gens));
}

namespace {

MonomialIdeal colon_single(const MonomialIdeal& a, const Monomial& g) {
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count());
  for (const Monomial& u : a.generators()) gens.push_back(u.quotient(g));
  return MonomialIdeal::make(a.arity(), std::move(gens));
}

}  // namespace

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a, b);
  if (b.is_zero()) return MonomialIdeal::unit(a.arity());
  const auto& gens = b.generators();
  MonomialIdeal result = colon_single(a, gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) {
    result = intersect(result, colon_single(a, gens[i]));
  }
  return result;
}

MonomialIdeal saturate_var(const MonomialIdeal& a, std::uint32_t index) {
  if (index >= a.arity()) {
    throw DomainError("saturate_var index " + std::to_string(index) +
                      " out of range for arity " + std::to_string(a.arity()));
  }
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count());
  for (const Monomial& u : a.generators()) {
    gens.push_back(u.with_exponent_zeroed(index));
  }
  return MonomialIdeal::make(a.arity(), std::move(gens));
}

MonomialIdeal saturate_vars_oracle(const MonomialIdeal& a) {
  MonomialIdeal result = saturate_var(a, 0);
  for (std::uint32_t i = 1; i < a.arity(); ++i) {
    result = intersect(result, saturate_var(a, i));
  }
  return result;
}

Saturation saturate_max(const MonomialIdeal& a) {
  const MonomialIdeal m = variable_ideal(a.arity());
  MonomialIdeal current = a;
  std::uint32_t steps = 0;
  for (;;) {
    MonomialIdeal next = colon(current, m);
    if (next == current) break;
    current = std::move(next);
    ++steps;
  }
  // Certify against the independent variable-wise route.
  if (!(saturate_vars_oracle(a) == current)) {
    throw Error("saturation routes disagree; engine bug");
  }
  return Saturation{std::move(current), steps};
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count());
  for (const Monomial& u : a.generators()) gens.push_back(u.support());
  return MonomialIdeal::make(a.arity(), std::move(gens));
}

int dimension(const MonomialIdeal& a) {
  if (a.is_unit()) {
    throw ZeroRingError("dimension of the zero ring is undefined");
  }
  const std::uint32_t r = a.arity();
  if (r > kDimensionArityLimit) {
    throw DomainError("dimension supports at most " +
                      std::to_string(kDimensionArityLimit) + " variables");
  }
  if (a.is_zero()) return static_cast<int>(r);

  std::vector<std::uint32_t> supports;
  supports.reserve(a.generator_count());
  for (const Monomial& g : a.generators()) supports.push_back(g.support_mask());

  // Minimum vertex cover of the generator supports over all 2^r subsets.
  std::uint32_t best = r;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    const std::uint32_t size = std::popcount(mask);
    if (size >= best) continue;
    bool covers = true;
    for (const std::uint32_t s : supports) {
      if ((s & mask) == 0) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return static_cast<int>(r - best);
}

void require_same_arity(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatchError("ideal arities differ: " +
                             std::to_string(a.arity()) + " vs " +
                             std::to_string(b.arity()));
  }
}

std::string to_string(const MonomialIdeal& a,
                      std::span<const std::string> names) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const Monomial& g : a.generators()) {
    if (!first) out += ", ";
    out += to_string(g, names);
    first = false;
  }
  out += ')';
  return out;
}

}  // namespace epslab
