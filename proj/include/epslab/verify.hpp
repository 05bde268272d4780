#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "epslab/sequences.hpp"

namespace epslab {

enum class CheckStatus { Pass, Fail, Skip };

/// Counterexample payload. When a monomial is present it lies in exactly one
/// of the two ideals, so the failure replays through membership tests alone.
struct CheckWitness {
  std::string description;
  std::optional<MonomialIdeal> lhs;
  std::optional<MonomialIdeal> rhs;
  std::optional<Monomial> monomial;
};

struct CheckReport {
  std::string check;
  std::string instance;
  CheckStatus status = CheckStatus::Pass;
  std::optional<CheckWitness> witness;
  std::string notes;

  bool passed() const { return status != CheckStatus::Fail; }
};

/// nullopt when the ideals are equal; otherwise a witness whose monomial is a
/// generator of one side that is not a member of the other.
std::optional<CheckWitness> witness_for_mismatch(
    const MonomialIdeal& lhs, const MonomialIdeal& rhs,
    std::span<const std::string> names);

/// I ∩ (J+K) = (I∩J) + (I∩K) whenever J ⊆ I or K ⊆ I. Reports Skip when the
/// precondition fails.
CheckReport check_modular_law(const MonomialIdeal& i_ideal,
                              const MonomialIdeal& j_ideal,
                              const MonomialIdeal& k_ideal);

/// The three quotient-ring identities for S/G at the representative level:
/// powering before or after passing to the quotient agrees, saturating in the
/// quotient agrees with the ambient saturation, and intersection commutes
/// with adding G.
CheckReport check_remark21(const MonomialIdeal& j_ideal,
                           const MonomialIdeal& g_ideal, int n);

/// l(P*/P) = l((P*+N)/(P+N)) + l((P*∩N)/(P∩N)) with P = I^n, exactly.
CheckReport check_additivity_rmk2(const RingIdeal& ideal, int n);

/// l((P*+N)/(P+N)) = l((P+N)*/(P+N)) - l((P+N)*/(P*+N)) with P = I^n,
/// exactly, plus the containment P*+N ⊆ (P+N)*.
CheckReport check_additivity_eq2(const RingIdeal& ideal, int n);

/// The families (I^i)^sat + N and (I^i + N)^sat are graded: the product of
/// the i-th and j-th members lands in the (i+j)-th, for all i+j <= bound.
CheckReport check_graded_family(const RingIdeal& ideal, int bound);

/// Per-k exact additivity of the Amao inner sequence against its mod-N
/// counterpart, and agreement of the two limit estimates within tolerance.
CheckReport check_lem7_consistency(const RingIdeal& ideal, int m, int kmax,
                                   const mpq_class& tolerance);

/// Volume = multiplicity: the epsilon estimate from the core sequence agrees
/// with the Amao outer trend within tolerance. Throws
/// HypothesisViolationError when dim N = dim R.
CheckReport check_vm_theorem(const RingIdeal& ideal, int nmax, int mmax,
                             int kmax, const mpq_class& tolerance);

struct GeneratorOptions {
  std::uint32_t min_arity = 2;
  std::uint32_t max_arity = 4;
  std::uint32_t max_degree = 5;
  std::uint32_t max_gens = 5;
};

/// Deterministic instance generator (fixed seed => fixed stream). Ideals are
/// biased so that at least one generator is divisible by the first variable,
/// keeping saturation checks non-vacuous.
class InstanceGen {
public:
  explicit InstanceGen(std::uint64_t seed, GeneratorOptions options = {});

  std::uint64_t pick(std::uint64_t lo, std::uint64_t hi);  // inclusive
  Monomial random_monomial(std::uint32_t arity, std::uint32_t max_degree,
                           std::uint32_t min_degree = 0);
  MonomialIdeal random_ideal(std::uint32_t arity);
  /// A random ideal contained in `ideal` (random multiples of generators).
  MonomialIdeal random_subideal(const MonomialIdeal& ideal);
  /// Quotient ring with nonradical Q and dim N < dim R, guaranteed.
  Ring random_nilpotent_ring();
  RingIdeal random_ring_ideal(const Ring& ring);

private:
  std::mt19937_64 rng_;
  GeneratorOptions options_;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  int modular_trials = 200;
  int remark_trials = 100;
  int graded_instances = 20;
  int graded_bound = 6;
  int oracle_trials = 50;
  int additivity_nmax = 8;
  int lem7_kmax = 6;
  int vm_nmax = 8;
  int vm_mmax = 3;
  int vm_kmax = 6;
  mpq_class tolerance = kDefaultTolerance;
};

/// The full randomized battery plus the named instances. Checks run in
/// parallel; the report order is canonical (suite construction order).
std::vector<CheckReport> run_verify_suite(const SuiteOptions& options);

}  // namespace epslab
