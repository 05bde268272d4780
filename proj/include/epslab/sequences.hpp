#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epslab/length.hpp"
#include "epslab/rational.hpp"
#include "epslab/ring.hpp"

namespace epslab {

/// The length families the workbench tracks. With I^n abbreviated P and its
/// saturation P*, the quotients are:
///   EpsilonCore  P*/P
///   ModNOuter    (P*+N)/(P+N)
///   ModNSat      (P+N)*/(P+N)
///   Correction   (P+N)*/(P*+N)
///   NilPart      (P* ∩ N)/(P ∩ N)
///   AmaoInner    [(I^m)*]^k / I^{mk}              (indexed by k for fixed m)
///   FiltI        ([(I^m)*]^k + N)/(I^{mk} + N)
///   FiltJ        ([(I^m+N)*]^k + N)/(I^{mk} + N)
enum class FamilyKind {
  EpsilonCore,
  ModNOuter,
  ModNSat,
  Correction,
  NilPart,
  AmaoInner,
  FiltI,
  FiltJ,
};

std::string_view family_name(FamilyKind kind);

/// One computed cell of a length sequence. `normalized` is always on the
/// multiplicity scale d! * length / idx^d with idx the running index (n or k)
/// and d the ring dimension.
struct SequenceRecord {
  FamilyKind family = FamilyKind::EpsilonCore;
  int n = -1;
  int m = -1;
  int k = -1;
  mpz_class length;
  mpq_class normalized;
};

struct EstimateDiagnostics {
  /// |fd_last - fd_prev| relative to max(|fd_last|, 1)
  mpq_class tail_spread;
  bool naive_nonincreasing = false;
  bool naive_nondecreasing = false;
  bool converged = false;
};

/// Three estimators for lim d! * l_n / n^d, all exact rationals:
///  - naive_last:  d! * l_N / N^d at the last index
///  - finite_diff: d-th forward difference of l at the tail (exact once the
///    sequence is a degree-d polynomial over the window)
///  - richardson:  one-step extrapolation of naive under a c + a/n model
struct LimitEstimate {
  mpq_class naive_last;
  mpq_class finite_diff;
  mpq_class richardson;
  EstimateDiagnostics diagnostics;
};

inline const mpq_class kDefaultTolerance(1, 20);

/// Requires at least dim+2 entries with consecutive indices starting at >= 1.
LimitEstimate estimate_limit(
    std::span<const std::pair<long, mpz_class>> sequence, unsigned dim,
    const mpq_class& tolerance = kDefaultTolerance);

/// l((I^n)^sat / I^n) for n = 1..nmax.
std::vector<SequenceRecord> epsilon_sequence(const RingIdeal& ideal, int nmax);

/// All five n-indexed family lengths at one n.
struct DecompositionCell {
  mpz_class epsilon_core;
  mpz_class modn_outer;
  mpz_class modn_sat;
  mpz_class correction;
  mpz_class nil_part;
};

DecompositionCell decomposition_cell(const RingIdeal& ideal, int n);

/// EpsilonCore, ModNOuter, ModNSat, Correction and NilPart for n = 1..nmax,
/// family-major.
std::vector<SequenceRecord> decomposition_sequences(const RingIdeal& ideal,
                                                    int nmax);

struct AmaoGrid {
  int mmax = 0;
  int kmax = 0;
  std::vector<SequenceRecord> inner;           // m-major, k minor
  std::vector<LimitEstimate> inner_estimates;  // index m-1: estimate of a(I^m, (I^m)^sat)
  std::vector<mpq_class> outer_values;         // index m-1: finite_diff / m^d
};

/// Inner sequences l([(I^m)^sat]^k / I^{mk}) over k for each m <= mmax,
/// the per-m Amao estimate, and the outer values whose trend recovers the
/// epsilon multiplicity. Requires kmax >= dim+2.
AmaoGrid amao_grid(const RingIdeal& ideal, int mmax, int kmax,
                   const mpq_class& tolerance = kDefaultTolerance);

/// FiltI then FiltJ records for fixed m and k = 1..kmax.
std::vector<SequenceRecord> filtration_sequences(const RingIdeal& ideal, int m,
                                                 int kmax);

/// A uniform linear constant with the verified range; found=false is a
/// result, not an error.
struct SwansonResult {
  int constant = 0;
  int verified_range = 0;
  bool found = false;
};

/// Least b <= bmax with (I^n)^sat ∩ m^{bn} = I^n ∩ m^{bn} for all n <= nmax.
SwansonResult swanson_search(const RingIdeal& ideal, int nmax, int bmax);

/// Least c <= cmax with (I^n+N)^sat ∩ m^{cn} = ((I^n)^sat+N) ∩ m^{cn}
/// for all n <= nmax.
SwansonResult swanson_c_search(const RingIdeal& ideal, int nmax, int cmax);

/// Append-only table of computed lengths keyed by family, ideal content hash
/// and indices, so grids can be extended without recomputation. Thread-safe;
/// contents are deterministic regardless of schedule.
class SequenceCache {
public:
  struct Key {
    int family;
    std::uint64_t ideal_hash;
    int n;
    int m;
    int k;
    auto operator<=>(const Key&) const = default;
  };

  mpz_class get_or_compute(const Key& key,
                           const std::function<mpz_class()>& compute);
  std::size_t size() const;
  void clear();
  /// JSON round-trip for persisting a table between runs.
  std::string serialize() const;
  std::size_t load(const std::string& json_text);

  static SequenceCache& global();

private:
  mutable std::mutex mutex_;
  std::map<Key, mpz_class> entries_;
};

}  // namespace epslab
