#include "epslab/sequences.hpp"

#include <json.hpp>

#include "epslab/parallel.hpp"

namespace epslab {

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) {
    throw DomainError(std::string(name) + " must be at least 1");
  }
}

mpq_class normalized_value(const mpz_class& length, unsigned dim, long idx) {
  return exact_ratio(factorial(dim) * length, int_pow(mpz_class(idx), dim));
}

mpz_class cached_length(FamilyKind family, const RingIdeal& base, int n, int m,
                        int k, const RingIdeal& inner, const RingIdeal& outer) {
  const SequenceCache::Key key{static_cast<int>(family), base.content_hash(),
                               n, m, k};
  return SequenceCache::global().get_or_compute(
      key, [&] { return length_quotient(inner, outer).value; });
}

std::vector<std::pair<long, mpz_class>> index_series(
    std::span<const SequenceRecord> records, bool use_k) {
  std::vector<std::pair<long, mpz_class>> series;
  series.reserve(records.size());
  for (const SequenceRecord& r : records) {
    series.emplace_back(use_k ? r.k : r.n, r.length);
  }
  return series;
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::EpsilonCore: return "epsilon_core";
    case FamilyKind::ModNOuter: return "modn_outer";
    case FamilyKind::ModNSat: return "modn_sat";
    case FamilyKind::Correction: return "correction";
    case FamilyKind::NilPart: return "nil_part";
    case FamilyKind::AmaoInner: return "amao_inner";
    case FamilyKind::FiltI: return "filt_i";
    case FamilyKind::FiltJ: return "filt_j";
  }
  return "unknown";
}

LimitEstimate estimate_limit(
    std::span<const std::pair<long, mpz_class>> sequence, unsigned dim,
    const mpq_class& tolerance) {
  if (sequence.size() < dim + 2) {
    throw DomainError("estimate_limit needs at least dim+2 entries");
  }
  if (sequence.front().first < 1) {
    throw DomainError("sequence indices must start at 1 or later");
  }
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    if (sequence[i].first != sequence[i - 1].first + 1) {
      throw DomainError("sequence indices must be consecutive");
    }
  }

  const auto naive_at = [&](std::size_t i) {
    return normalized_value(sequence[i].second, dim, sequence[i].first);
  };
  // d-th forward difference of the window ending at position `last`.
  const auto fd_at = [&](std::size_t last) {
    std::vector<mpz_class> w;
    w.reserve(dim + 1);
    for (std::size_t i = last - dim; i <= last; ++i) {
      w.push_back(sequence[i].second);
    }
    for (unsigned round = 0; round < dim; ++round) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) w[i] = w[i + 1] - w[i];
      w.pop_back();
    }
    return mpq_class(w.front());
  };

  const std::size_t last = sequence.size() - 1;
  LimitEstimate est;
  est.naive_last = naive_at(last);
  est.finite_diff = fd_at(last);
  const mpq_class fd_prev = fd_at(last - 1);
  const mpq_class naive_prev = naive_at(last - 1);
  const mpq_class index_last(static_cast<long>(sequence[last].first));
  est.richardson =
      index_last * est.naive_last - (index_last - 1) * naive_prev;

  mpq_class scale = abs_q(est.finite_diff);
  if (scale < 1) scale = 1;
  est.diagnostics.tail_spread = abs_q(est.finite_diff - fd_prev) / scale;
  est.diagnostics.converged = est.diagnostics.tail_spread <= tolerance;

  bool noninc = true, nondec = true;
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    const mpq_class prev = naive_at(i - 1);
    const mpq_class cur = naive_at(i);
    if (cur > prev) noninc = false;
    if (cur < prev) nondec = false;
  }
  est.diagnostics.naive_nonincreasing = noninc;
  est.diagnostics.naive_nondecreasing = nondec;
  return est;
}

std::vector<SequenceRecord> epsilon_sequence(const RingIdeal& ideal,
                                             int nmax) {
  require_positive(nmax, "nmax");
  const unsigned dim = static_cast<unsigned>(ideal.ring()->dim());
  const std::vector<RingIdeal> powers = ideal_powers(ideal, nmax);
  std::vector<SequenceRecord> records(static_cast<std::size_t>(nmax));
  parallel_for(static_cast<std::size_t>(nmax), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const RingIdeal sat = r_saturate(powers[n]).ideal;
    mpz_class len =
        cached_length(FamilyKind::EpsilonCore, ideal, n, -1, -1, powers[n],
                      sat);
    records[i] = SequenceRecord{FamilyKind::EpsilonCore, n, -1, -1, len,
                                normalized_value(len, dim, n)};
  });
  return records;
}

DecompositionCell decomposition_cell(const RingIdeal& ideal, int n) {
  require_positive(n, "n");
  const Ring& ring = ideal.ring();
  const RingIdeal nil = nilradical_ideal(ring);
  const RingIdeal pn = r_power(ideal, static_cast<std::uint32_t>(n));
  const RingIdeal sat = r_saturate(pn).ideal;
  const RingIdeal pn_nil = r_add(pn, nil);
  const RingIdeal sat_plus_nil = r_add(sat, nil);
  const RingIdeal sat_of_pn_nil = r_saturate(pn_nil).ideal;
  const RingIdeal nil_hi = r_intersect(sat, nil);
  const RingIdeal nil_lo = r_intersect(pn, nil);

  DecompositionCell cell;
  cell.epsilon_core =
      cached_length(FamilyKind::EpsilonCore, ideal, n, -1, -1, pn, sat);
  cell.modn_outer = cached_length(FamilyKind::ModNOuter, ideal, n, -1, -1,
                                  pn_nil, sat_plus_nil);
  cell.modn_sat = cached_length(FamilyKind::ModNSat, ideal, n, -1, -1, pn_nil,
                                sat_of_pn_nil);
  cell.correction = cached_length(FamilyKind::Correction, ideal, n, -1, -1,
                                  sat_plus_nil, sat_of_pn_nil);
  cell.nil_part =
      cached_length(FamilyKind::NilPart, ideal, n, -1, -1, nil_lo, nil_hi);
  return cell;
}

std::vector<SequenceRecord> decomposition_sequences(const RingIdeal& ideal,
                                                    int nmax) {
  require_positive(nmax, "nmax");
  const unsigned dim = static_cast<unsigned>(ideal.ring()->dim());
  std::vector<DecompositionCell> cells(static_cast<std::size_t>(nmax));
  parallel_for(static_cast<std::size_t>(nmax), [&](std::size_t i) {
    cells[i] = decomposition_cell(ideal, static_cast<int>(i) + 1);
  });

  std::vector<SequenceRecord> records;
  records.reserve(cells.size() * 5);
  const auto emit = [&](FamilyKind fam, mpz_class DecompositionCell::*field) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      const mpz_class& len = cells[i].*field;
      records.push_back(SequenceRecord{fam, n, -1, -1, len,
                                       normalized_value(len, dim, n)});
    }
  };
  emit(FamilyKind::EpsilonCore, &DecompositionCell::epsilon_core);
  emit(FamilyKind::ModNOuter, &DecompositionCell::modn_outer);
  emit(FamilyKind::ModNSat, &DecompositionCell::modn_sat);
  emit(FamilyKind::Correction, &DecompositionCell::correction);
  emit(FamilyKind::NilPart, &DecompositionCell::nil_part);
  return records;
}

AmaoGrid amao_grid(const RingIdeal& ideal, int mmax, int kmax,
                   const mpq_class& tolerance) {
  require_positive(mmax, "mmax");
  require_positive(kmax, "kmax");
  const unsigned dim = static_cast<unsigned>(ideal.ring()->dim());
  if (kmax < static_cast<int>(dim) + 2) {
    throw DomainError("amao_grid needs kmax >= dim+2 for limit estimation");
  }

  const std::vector<RingIdeal> powers = ideal_powers(ideal, mmax * kmax);
  // sat powers: sat_powers[m-1][k] = [(I^m)^sat]^k
  std::vector<std::vector<RingIdeal>> sat_powers;
  sat_powers.reserve(static_cast<std::size_t>(mmax));
  for (int m = 1; m <= mmax; ++m) {
    const RingIdeal sat = r_saturate(powers[m]).ideal;
    sat_powers.push_back(ideal_powers(sat, kmax));
  }

  AmaoGrid grid;
  grid.mmax = mmax;
  grid.kmax = kmax;
  grid.inner.resize(static_cast<std::size_t>(mmax) * kmax);
  parallel_for(grid.inner.size(), [&](std::size_t cell) {
    const int m = static_cast<int>(cell) / kmax + 1;
    const int k = static_cast<int>(cell) % kmax + 1;
    mpz_class len = cached_length(FamilyKind::AmaoInner, ideal, -1, m, k,
                                  powers[m * k], sat_powers[m - 1][k]);
    grid.inner[cell] = SequenceRecord{FamilyKind::AmaoInner, -1, m, k, len,
                                      normalized_value(len, dim, k)};
  });

  for (int m = 1; m <= mmax; ++m) {
    const std::span<const SequenceRecord> row(
        grid.inner.data() + static_cast<std::size_t>(m - 1) * kmax,
        static_cast<std::size_t>(kmax));
    const auto series = index_series(row, /*use_k=*/true);
    LimitEstimate est = estimate_limit(series, dim, tolerance);
    grid.outer_values.push_back(est.finite_diff /
                                mpq_class(int_pow(mpz_class(m), dim)));
    grid.inner_estimates.push_back(std::move(est));
  }
  return grid;
}

std::vector<SequenceRecord> filtration_sequences(const RingIdeal& ideal, int m,
                                                 int kmax) {
  require_positive(m, "m");
  require_positive(kmax, "kmax");
  const Ring& ring = ideal.ring();
  const unsigned dim = static_cast<unsigned>(ring->dim());
  const RingIdeal nil = nilradical_ideal(ring);

  const std::vector<RingIdeal> powers = ideal_powers(ideal, m * kmax);
  const RingIdeal sat_m = r_saturate(powers[m]).ideal;
  const RingIdeal sat_m_nil = r_saturate(r_add(powers[m], nil)).ideal;
  const std::vector<RingIdeal> sat_pow = ideal_powers(sat_m, kmax);
  const std::vector<RingIdeal> satn_pow = ideal_powers(sat_m_nil, kmax);

  std::vector<SequenceRecord> records(2 * static_cast<std::size_t>(kmax));
  parallel_for(static_cast<std::size_t>(kmax), [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    const RingIdeal inner = r_add(powers[m * k], nil);
    const RingIdeal outer_i = r_add(sat_pow[k], nil);
    const RingIdeal outer_j = r_add(satn_pow[k], nil);
    mpz_class len_i = cached_length(FamilyKind::FiltI, ideal, -1, m, k, inner,
                                    outer_i);
    mpz_class len_j = cached_length(FamilyKind::FiltJ, ideal, -1, m, k, inner,
                                    outer_j);
    records[i] = SequenceRecord{FamilyKind::FiltI, -1, m, k, len_i,
                                normalized_value(len_i, dim, k)};
    records[static_cast<std::size_t>(kmax) + i] =
        SequenceRecord{FamilyKind::FiltJ, -1, m, k, len_j,
                       normalized_value(len_j, dim, k)};
  });
  return records;
}

namespace {

SwansonResult swanson_generic(
    const RingIdeal& ideal, int nmax, int cmax,
    const std::function<std::pair<RingIdeal, RingIdeal>(int)>& sides) {
  require_positive(nmax, "nmax");
  require_positive(cmax, "bound");
  const Ring& ring = ideal.ring();

  // Precompute both sides per n and ambient powers of the variable ideal.
  std::vector<std::pair<RingIdeal, RingIdeal>> pairs;
  pairs.reserve(static_cast<std::size_t>(nmax));
  for (int n = 1; n <= nmax; ++n) pairs.push_back(sides(n));

  std::vector<MonomialIdeal> var_powers;
  var_powers.reserve(static_cast<std::size_t>(cmax) * nmax + 1);
  var_powers.push_back(MonomialIdeal::unit(ring->arity()));
  for (int j = 1; j <= cmax * nmax; ++j) {
    var_powers.push_back(
        multiply(var_powers.back(), ring->variable_ideal_ambient()));
  }

  for (int c = 1; c <= cmax; ++c) {
    bool ok = true;
    for (int n = 1; n <= nmax && ok; ++n) {
      const RingIdeal cutoff = ideal_from_rep(ring, var_powers[c * n]);
      ok = r_intersect(pairs[n - 1].first, cutoff) ==
           r_intersect(pairs[n - 1].second, cutoff);
    }
    if (ok) return SwansonResult{c, nmax, true};
  }
  return SwansonResult{0, nmax, false};
}

}  // namespace

SwansonResult swanson_search(const RingIdeal& ideal, int nmax, int bmax) {
  const std::vector<RingIdeal> powers = ideal_powers(ideal, nmax);
  return swanson_generic(ideal, nmax, bmax, [&](int n) {
    return std::make_pair(r_saturate(powers[n]).ideal, powers[n]);
  });
}

SwansonResult swanson_c_search(const RingIdeal& ideal, int nmax, int cmax) {
  const RingIdeal nil = nilradical_ideal(ideal.ring());
  const std::vector<RingIdeal> powers = ideal_powers(ideal, nmax);
  return swanson_generic(ideal, nmax, cmax, [&](int n) {
    const RingIdeal sat = r_saturate(powers[n]).ideal;
    return std::make_pair(r_saturate(r_add(powers[n], nil)).ideal,
                          r_add(sat, nil));
  });
}

mpz_class SequenceCache::get_or_compute(
    const Key& key, const std::function<mpz_class()>& compute) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  mpz_class value = compute();
  std::lock_guard<std::mutex> lock(mutex_);
  entries_.emplace(key, value);
  return value;
}

std::size_t SequenceCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

void SequenceCache::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_.clear();
}

std::string SequenceCache::serialize() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& [key, value] : entries_) {
    entries.push_back({{"family", key.family},
                       {"ideal", key.ideal_hash},
                       {"n", key.n},
                       {"m", key.m},
                       {"k", key.k},
                       {"length", value.get_str()}});
  }
  nlohmann::ordered_json doc;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::size_t SequenceCache::load(const std::string& json_text) {
  const nlohmann::json doc = nlohmann::json::parse(json_text);
  std::size_t added = 0;
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& entry : doc.at("entries")) {
    const Key key{entry.at("family").get<int>(),
                  entry.at("ideal").get<std::uint64_t>(),
                  entry.at("n").get<int>(), entry.at("m").get<int>(),
                  entry.at("k").get<int>()};
    const mpz_class value(entry.at("length").get<std::string>());
    added += entries_.insert_or_assign(key, value).second ? 1 : 0;
  }
  return added;
}

SequenceCache& SequenceCache::global() {
  static SequenceCache cache;
  return cache;
}

}  // namespace epslab
