#include "epslab/monomial.hpp"

#include <limits>

namespace epslab {

namespace {

void require_arity_in_range(std::size_t arity) {
  if (arity == 0 || arity > kMaxArity) {
    throw DomainError("arity must be between 1 and " +
                      std::to_string(kMaxArity) + ", got " +
                      std::to_string(arity));
  }
}

}  // namespace

Monomial::Monomial(std::uint32_t arity, const simd::ExpBlock& exps)
    : arity_(arity), degree_(0), exps_(exps) {
  for (std::uint32_t i = 0; i < arity_; ++i) degree_ += exps_[i];
}

Monomial Monomial::one(std::uint32_t arity) {
  require_arity_in_range(arity);
  return Monomial(arity, simd::ExpBlock{});
}

Monomial Monomial::variable(std::uint32_t arity, std::uint32_t index) {
  require_arity_in_range(arity);
  if (index >= arity) {
    throw DomainError("variable index " + std::to_string(index) +
                      " out of range for arity " + std::to_string(arity));
  }
  simd::ExpBlock exps{};
  exps[index] = 1;
  return Monomial(arity, exps);
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents) {
  require_arity_in_range(exponents.size());
  simd::ExpBlock exps{};
  for (std::size_t i = 0; i < exponents.size(); ++i) exps[i] = exponents[i];
  return Monomial(static_cast<std::uint32_t>(exponents.size()), exps);
}

std::uint32_t Monomial::exponent(std::uint32_t i) const {
  if (i >= arity_) {
    throw DomainError("exponent index " + std::to_string(i) +
                      " out of range for arity " + std::to_string(arity_));
  }
  return exps_[i];
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(*this, other);
  return simd::active_kernels().divides(exps_.data(), other.exps_.data());
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_arity(*this, other);
  simd::ExpBlock out{};
  constexpr std::uint64_t limit = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t i = 0; i < arity_; ++i) {
    const std::uint64_t sum =
        std::uint64_t(exps_[i]) + std::uint64_t(other.exps_[i]);
    if (sum > limit) {
      throw OverflowError("exponent overflow in monomial product");
    }
    out[i] = static_cast<std::uint32_t>(sum);
  }
  return Monomial(arity_, out);
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_arity(*this, other);
  simd::ExpBlock out{};
  simd::active_kernels().lcm(exps_.data(), other.exps_.data(), out.data());
  return Monomial(arity_, out);
}

Monomial Monomial::quotient(const Monomial& other) const {
  require_same_arity(*this, other);
  simd::ExpBlock out{};
  simd::active_kernels().quotient(exps_.data(), other.exps_.data(),
                                  out.data());
  return Monomial(arity_, out);
}

Monomial Monomial::with_exponent_zeroed(std::uint32_t index) const {
  if (index >= arity_) {
    throw DomainError("variable index " + std::to_string(index) +
                      " out of range for arity " + std::to_string(arity_));
  }
  simd::ExpBlock exps = exps_;
  exps[index] = 0;
  return Monomial(arity_, exps);
}

Monomial Monomial::support() const {
  simd::ExpBlock exps{};
  for (std::uint32_t i = 0; i < arity_; ++i) exps[i] = exps_[i] > 0 ? 1 : 0;
  return Monomial(arity_, exps);
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::uint32_t i = 0; i < arity_; ++i) {
    if (exps_[i] > 0) mask |= (1u << i);
  }
  return mask;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return b.block() < a.block();
}

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatchError("monomial arities differ: " +
                             std::to_string(a.arity()) + " vs " +
                             std::to_string(b.arity()));
  }
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  if (names.size() != m.arity()) {
    throw ArityMismatchError("name list does not match monomial arity");
  }
  if (m.is_one()) return "1";
  std::string out;
  for (std::uint32_t i = 0; i < m.arity(); ++i) {
    const std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

}  // namespace epslab
