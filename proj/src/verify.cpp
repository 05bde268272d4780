#include "epslab/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "epslab/parallel.hpp"

namespace epslab {

namespace {

std::vector<std::string> default_names(std::uint32_t arity) {
  static const std::vector<std::string> short_names = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  names.reserve(arity);
  if (arity <= short_names.size()) {
    names.assign(short_names.begin(), short_names.begin() + arity);
  } else {
    for (std::uint32_t i = 0; i < arity; ++i) {
      names.push_back("x" + std::to_string(i + 1));
    }
  }
  return names;
}

std::string render(const MonomialIdeal& ideal) {
  const auto names = default_names(ideal.arity());
  return to_string(ideal, names);
}

mpq_class scaled_gap(const mpq_class& a, const mpq_class& b) {
  mpq_class scale = abs_q(a);
  if (abs_q(b) > scale) scale = abs_q(b);
  if (scale < 1) scale = 1;
  return abs_q(a - b) / scale;
}

std::vector<std::pair<long, mpz_class>> series_of(
    std::span<const SequenceRecord> records, bool use_k) {
  std::vector<std::pair<long, mpz_class>> series;
  series.reserve(records.size());
  for (const SequenceRecord& r : records) {
    series.emplace_back(use_k ? r.k : r.n, r.length);
  }
  return series;
}

}  // namespace

std::optional<CheckWitness> witness_for_mismatch(
    const MonomialIdeal& lhs, const MonomialIdeal& rhs,
    std::span<const std::string> names) {
  if (lhs == rhs) return std::nullopt;
  CheckWitness w;
  w.lhs = lhs;
  w.rhs = rhs;
  for (const Monomial& g : lhs.generators()) {
    if (!rhs.member(g)) {
      w.monomial = g;
      w.description = to_string(g, names) + " lies in " + to_string(lhs, names) +
                      " but not in " + to_string(rhs, names);
      return w;
    }
  }
  for (const Monomial& g : rhs.generators()) {
    if (!lhs.member(g)) {
      w.monomial = g;
      w.description = to_string(g, names) + " lies in " + to_string(rhs, names) +
                      " but not in " + to_string(lhs, names);
      return w;
    }
  }
  w.description = "ideals differ";  // unreachable for canonical forms
  return w;
}

CheckReport check_modular_law(const MonomialIdeal& i_ideal,
                              const MonomialIdeal& j_ideal,
                              const MonomialIdeal& k_ideal) {
  CheckReport report;
  report.check = "modular_law";
  report.instance = "I=" + render(i_ideal) + ", J=" + render(j_ideal) +
                    ", K=" + render(k_ideal);
  if (!i_ideal.contains(j_ideal) && !i_ideal.contains(k_ideal)) {
    report.status = CheckStatus::Skip;
    report.notes = "precondition J ⊆ I or K ⊆ I does not hold";
    return report;
  }
  const MonomialIdeal lhs = intersect(i_ideal, add(j_ideal, k_ideal));
  const MonomialIdeal rhs =
      add(intersect(i_ideal, j_ideal), intersect(i_ideal, k_ideal));
  const auto names = default_names(i_ideal.arity());
  if (auto w = witness_for_mismatch(lhs, rhs, names)) {
    report.status = CheckStatus::Fail;
    report.witness = std::move(*w);
  }
  return report;
}

CheckReport check_remark21(const MonomialIdeal& j_ideal,
                           const MonomialIdeal& g_ideal, int n) {
  require_same_arity(j_ideal, g_ideal);
  if (n < 1 || n > 4) throw DomainError("check_remark21 needs 1 <= n <= 4");
  CheckReport report;
  report.check = "remark21";
  report.instance = "J=" + render(j_ideal) + ", G=" + render(g_ideal) +
                    ", n=" + std::to_string(n);
  if (g_ideal.is_unit()) {
    report.status = CheckStatus::Skip;
    report.notes = "G is the unit ideal (zero quotient ring)";
    return report;
  }
  const auto names = default_names(j_ideal.arity());
  const Ring ring = QuotientRing::make(names, g_ideal);
  const RingIdeal in_quotient(ring, j_ideal.generators());
  const RingIdeal quotient_power = r_power(in_quotient, n);

  // (ii): powers computed in the quotient match J^n + G computed upstairs.
  const MonomialIdeal ambient_power = add(power(j_ideal, n), g_ideal);
  if (auto w =
          witness_for_mismatch(quotient_power.rep(), ambient_power, names)) {
    report.status = CheckStatus::Fail;
    report.witness = std::move(*w);
    report.notes = "power identity failed";
    return report;
  }

  // (i): saturation in the quotient matches the ambient saturation.
  const MonomialIdeal quotient_sat = r_saturate(quotient_power).ideal.rep();
  const MonomialIdeal ambient_sat = saturate_max(ambient_power).ideal;
  if (auto w = witness_for_mismatch(quotient_sat, ambient_sat, names)) {
    report.status = CheckStatus::Fail;
    report.witness = std::move(*w);
    report.notes = "saturation identity failed";
    return report;
  }

  // (iii): intersecting ideals containing G commutes with adding G.
  const MonomialIdeal jn = power(j_ideal, n);
  const MonomialIdeal lhs = intersect(add(j_ideal, g_ideal), add(jn, g_ideal));
  const MonomialIdeal rhs = add(intersect(j_ideal, jn), g_ideal);
  if (auto w = witness_for_mismatch(lhs, rhs, names)) {
    report.status = CheckStatus::Fail;
    report.witness = std::move(*w);
    report.notes = "intersection identity failed";
    return report;
  }
  return report;
}

CheckReport check_additivity_rmk2(const RingIdeal& ideal, int n) {
  if (n < 1) throw DomainError("check_additivity_rmk2 needs n >= 1");
  CheckReport report;
  report.check = "additivity_rmk2";
  report.instance = "I=" + to_string(ideal) + ", n=" + std::to_string(n);
  const DecompositionCell cell = decomposition_cell(ideal, n);
  report.notes = "core=" + to_string(cell.epsilon_core) +
                 " outer=" + to_string(cell.modn_outer) +
                 " nil=" + to_string(cell.nil_part);
  if (cell.epsilon_core != cell.modn_outer + cell.nil_part) {
    report.status = CheckStatus::Fail;
    CheckWitness w;
    w.description = "l(P*/P) != l((P*+N)/(P+N)) + l((P*∩N)/(P∩N)): " +
                    report.notes;
    report.witness = std::move(w);
  }
  return report;
}

CheckReport check_additivity_eq2(const RingIdeal& ideal, int n) {
  if (n < 1) throw DomainError("check_additivity_eq2 needs n >= 1");
  CheckReport report;
  report.check = "additivity_eq2";
  report.instance = "I=" + to_string(ideal) + ", n=" + std::to_string(n);

  const Ring& ring = ideal.ring();
  const RingIdeal nil = nilradical_ideal(ring);
  const RingIdeal pn = r_power(ideal, static_cast<std::uint32_t>(n));
  const RingIdeal sat = r_saturate(pn).ideal;
  const RingIdeal sat_plus_nil = r_add(sat, nil);
  const RingIdeal sat_of_pn_nil = r_saturate(r_add(pn, nil)).ideal;
  if (!sat_of_pn_nil.rep().contains(sat_plus_nil.rep())) {
    report.status = CheckStatus::Fail;
    CheckWitness w;
    w.description = "containment P*+N ⊆ (P+N)* failed";
    w.lhs = sat_plus_nil.rep();
    w.rhs = sat_of_pn_nil.rep();
    report.witness = std::move(w);
    return report;
  }

  const DecompositionCell cell = decomposition_cell(ideal, n);
  report.notes = "outer=" + to_string(cell.modn_outer) +
                 " sat=" + to_string(cell.modn_sat) +
                 " correction=" + to_string(cell.correction);
  if (cell.modn_outer != cell.modn_sat - cell.correction) {
    report.status = CheckStatus::Fail;
    CheckWitness w;
    w.description =
        "l((P*+N)/(P+N)) != l((P+N)*/(P+N)) - l((P+N)*/(P*+N)): " +
        report.notes;
    report.witness = std::move(w);
  }
  return report;
}

CheckReport check_graded_family(const RingIdeal& ideal, int bound) {
  if (bound < 1 || bound > 8) {
    throw DomainError("check_graded_family needs 1 <= bound <= 8");
  }
  CheckReport report;
  report.check = "graded_family";
  report.instance =
      "I=" + to_string(ideal) + ", bound=" + std::to_string(bound);

  const Ring& ring = ideal.ring();
  const RingIdeal nil = nilradical_ideal(ring);
  const std::vector<RingIdeal> powers = ideal_powers(ideal, bound);
  std::vector<RingIdeal> family_i;  // (I^i)^sat + N
  std::vector<RingIdeal> family_j;  // (I^i + N)^sat
  for (int i = 0; i <= bound; ++i) {
    family_i.push_back(r_add(r_saturate(powers[i]).ideal, nil));
    family_j.push_back(r_saturate(r_add(powers[i], nil)).ideal);
  }
  const auto names = ring->names();
  for (int i = 0; i <= bound; ++i) {
    for (int j = 0; i + j <= bound; ++j) {
      const RingIdeal prod_i = r_multiply(family_i[i], family_i[j]);
      if (!family_i[i + j].rep().contains(prod_i.rep())) {
        report.status = CheckStatus::Fail;
        CheckWitness w;
        w.description = "I'_" + std::to_string(i) + " * I'_" +
                        std::to_string(j) + " ⊄ I'_" + std::to_string(i + j);
        w.lhs = prod_i.rep();
        w.rhs = family_i[i + j].rep();
        report.witness = std::move(w);
        return report;
      }
      const RingIdeal prod_j = r_multiply(family_j[i], family_j[j]);
      if (!family_j[i + j].rep().contains(prod_j.rep())) {
        report.status = CheckStatus::Fail;
        CheckWitness w;
        w.description = "J'_" + std::to_string(i) + " * J'_" +
                        std::to_string(j) + " ⊄ J'_" + std::to_string(i + j);
        w.lhs = prod_j.rep();
        w.rhs = family_j[i + j].rep();
        report.witness = std::move(w);
        return report;
      }
    }
  }
  return report;
}

CheckReport check_lem7_consistency(const RingIdeal& ideal, int m, int kmax,
                                   const mpq_class& tolerance) {
  if (m < 1) throw DomainError("check_lem7_consistency needs m >= 1");
  const Ring& ring = ideal.ring();
  const unsigned dim = static_cast<unsigned>(ring->dim());
  if (kmax < static_cast<int>(dim) + 2) {
    throw DomainError("check_lem7_consistency needs kmax >= dim+2");
  }
  CheckReport report;
  report.check = "lem7_consistency";
  report.instance = "I=" + to_string(ideal) + ", m=" + std::to_string(m) +
                    ", kmax=" + std::to_string(kmax);

  const RingIdeal nil = nilradical_ideal(ring);
  const std::vector<RingIdeal> powers = ideal_powers(ideal, m * kmax);
  const RingIdeal sat_m = r_saturate(powers[m]).ideal;
  const std::vector<RingIdeal> sat_pow = ideal_powers(sat_m, kmax);

  std::vector<std::pair<long, mpz_class>> amao_series, filt_series;
  for (int k = 1; k <= kmax; ++k) {
    const RingIdeal& inner = powers[m * k];
    const mpz_class amao_len = length_quotient(inner, sat_pow[k]).value;
    const mpz_class nil_len =
        length_quotient(r_intersect(inner, nil), r_intersect(sat_pow[k], nil))
            .value;
    const mpz_class filt_len =
        length_quotient(r_add(inner, nil), r_add(sat_pow[k], nil)).value;
    if (amao_len != nil_len + filt_len) {
      report.status = CheckStatus::Fail;
      CheckWitness w;
      w.description = "k=" + std::to_string(k) +
                      ": l(S^k/P) != l((S^k∩N)/(P∩N)) + l((S^k+N)/(P+N)) "
                      "with S=(I^m)^sat, P=I^{mk}: " +
                      to_string(amao_len) + " vs " + to_string(nil_len) +
                      " + " + to_string(filt_len);
      report.witness = std::move(w);
      return report;
    }
    amao_series.emplace_back(k, amao_len);
    filt_series.emplace_back(k, filt_len);
  }

  const LimitEstimate amao_est = estimate_limit(amao_series, dim, tolerance);
  const LimitEstimate filt_est = estimate_limit(filt_series, dim, tolerance);
  report.notes = "amao_fd=" + to_string(amao_est.finite_diff) +
                 " filt_fd=" + to_string(filt_est.finite_diff);
  if (scaled_gap(amao_est.finite_diff, filt_est.finite_diff) > tolerance) {
    report.status = CheckStatus::Fail;
    CheckWitness w;
    w.description = "limit estimates disagree beyond tolerance: " +
                    report.notes;
    report.witness = std::move(w);
  }
  return report;
}

CheckReport check_vm_theorem(const RingIdeal& ideal, int nmax, int mmax,
                             int kmax, const mpq_class& tolerance) {
  const Ring& ring = ideal.ring();
  if (!ring->hypothesis_holds()) {
    throw HypothesisViolationError(
        "dim N = " + std::to_string(ring->dim_nilradical()) +
        " is not less than dim R = " + std::to_string(ring->dim()));
  }
  const unsigned dim = static_cast<unsigned>(ring->dim());
  if (nmax < static_cast<int>(dim) + 2) {
    throw DomainError("check_vm_theorem needs nmax >= dim+2");
  }
  CheckReport report;
  report.check = "vm_theorem";
  report.instance = "I=" + to_string(ideal) + ", nmax=" + std::to_string(nmax) +
                    ", mmax=" + std::to_string(mmax) +
                    ", kmax=" + std::to_string(kmax);

  const std::vector<SequenceRecord> eps = epsilon_sequence(ideal, nmax);
  const LimitEstimate eps_est =
      estimate_limit(series_of(eps, /*use_k=*/false), dim, tolerance);
  const AmaoGrid grid = amao_grid(ideal, mmax, kmax, tolerance);
  const mpq_class& outer = grid.outer_values.back();

  report.notes = "epsilon_fd=" + to_string(eps_est.finite_diff) +
                 " amao_outer(m=" + std::to_string(mmax) +
                 ")=" + to_string(outer);
  if (scaled_gap(eps_est.finite_diff, outer) > tolerance) {
    report.status = CheckStatus::Fail;
    CheckWitness w;
    w.description =
        "epsilon and Amao trends disagree beyond tolerance: " + report.notes;
    report.witness = std::move(w);
  }
  return report;
}

InstanceGen::InstanceGen(std::uint64_t seed, GeneratorOptions options)
    : rng_(seed), options_(options) {}

std::uint64_t InstanceGen::pick(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw DomainError("pick: empty range");
  return lo + rng_() % (hi - lo + 1);
}

Monomial InstanceGen::random_monomial(std::uint32_t arity,
                                      std::uint32_t max_degree,
                                      std::uint32_t min_degree) {
  const std::uint64_t degree = pick(min_degree, max_degree);
  std::vector<std::uint32_t> exps(arity, 0);
  for (std::uint64_t i = 0; i < degree; ++i) {
    ++exps[pick(0, arity - 1)];
  }
  return Monomial::from_exponents(exps);
}

MonomialIdeal InstanceGen::random_ideal(std::uint32_t arity) {
  const std::uint64_t count = pick(1, options_.max_gens);
  std::vector<Monomial> gens;
  gens.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    gens.push_back(random_monomial(arity, options_.max_degree, 1));
  }
  // Saturation bias: make sure some generator is divisible by x_0.
  const bool has_x0 = std::any_of(gens.begin(), gens.end(), [](const Monomial& g) {
    return g.exponent(0) > 0;
  });
  if (!has_x0) gens[0] = gens[0].times(Monomial::variable(arity, 0));
  return MonomialIdeal::make(arity, std::move(gens));
}

MonomialIdeal InstanceGen::random_subideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  const auto& gens = ideal.generators();
  const std::uint64_t count = pick(1, gens.size());
  std::vector<Monomial> sub;
  sub.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Monomial& base = gens[pick(0, gens.size() - 1)];
    sub.push_back(base.times(random_monomial(ideal.arity(), 2)));
  }
  return MonomialIdeal::make(ideal.arity(), std::move(sub));
}

Ring InstanceGen::random_nilpotent_ring() {
  const std::uint32_t arity = static_cast<std::uint32_t>(
      pick(3, std::max<std::uint64_t>(3, options_.max_arity)));
  const std::uint32_t victim = arity - 1;
  std::vector<Monomial> q_gens;
  {
    std::vector<std::uint32_t> exps(arity, 0);
    exps[victim] = 2;
    q_gens.push_back(Monomial::from_exponents(exps));
  }
  const std::uint64_t mixed = pick(1, 2);
  for (std::uint64_t i = 0; i < mixed; ++i) {
    std::vector<std::uint32_t> exps(arity, 0);
    exps[victim] = 1;
    const std::uint64_t degree = pick(1, 2);
    for (std::uint64_t d = 0; d < degree; ++d) ++exps[pick(0, victim - 1)];
    q_gens.push_back(Monomial::from_exponents(exps));
  }
  return QuotientRing::make(default_names(arity),
                            MonomialIdeal::make(arity, std::move(q_gens)));
}

RingIdeal InstanceGen::random_ring_ideal(const Ring& ring) {
  return RingIdeal(ring, random_ideal(ring->arity()).generators());
}

std::vector<CheckReport> run_verify_suite(const SuiteOptions& options) {
  std::vector<std::function<CheckReport()>> jobs;
  InstanceGen gen(options.seed);

  const auto tagged = [](CheckReport r, const std::string& tag) {
    r.instance = tag + ": " + r.instance;
    return r;
  };

  for (int t = 0; t < options.modular_trials; ++t) {
    const std::uint32_t arity = static_cast<std::uint32_t>(gen.pick(2, 4));
    const MonomialIdeal i_ideal = gen.random_ideal(arity);
    const MonomialIdeal j_ideal = gen.random_subideal(i_ideal);
    const MonomialIdeal k_ideal = gen.random_ideal(arity);
    const std::string tag = "trial " + std::to_string(t);
    jobs.push_back([=] {
      return tagged(check_modular_law(i_ideal, j_ideal, k_ideal), tag);
    });
  }

  for (int t = 0; t < options.remark_trials; ++t) {
    const std::uint32_t arity = static_cast<std::uint32_t>(gen.pick(2, 3));
    const MonomialIdeal j_ideal = gen.random_ideal(arity);
    const MonomialIdeal g_ideal = gen.random_ideal(arity);
    const int n = static_cast<int>(gen.pick(1, 3));
    const std::string tag = "trial " + std::to_string(t);
    jobs.push_back(
        [=] { return tagged(check_remark21(j_ideal, g_ideal, n), tag); });
  }

  for (int t = 0; t < options.graded_instances; ++t) {
    const Ring ring = gen.random_nilpotent_ring();
    const RingIdeal ideal = gen.random_ring_ideal(ring);
    const int bound = options.graded_bound;
    const std::string tag = "instance " + std::to_string(t);
    jobs.push_back([=] { return tagged(check_graded_family(ideal, bound), tag); });
  }

  // Saturation route agreement and the Hilbert-function length oracle.
  {
    InstanceGen oracle_gen(options.seed ^ 0x5eedULL,
                           GeneratorOptions{2, 3, 4, 4});
    for (int t = 0; t < options.oracle_trials; ++t) {
      const std::uint32_t arity =
          static_cast<std::uint32_t>(oracle_gen.pick(2, 3));
      const MonomialIdeal ideal = oracle_gen.random_ideal(arity);
      const std::string tag = "trial " + std::to_string(t);
      jobs.push_back([=] {
        CheckReport report;
        report.check = "saturation_oracle";
        report.instance = tag + ": I=" + render(ideal);
        const Saturation sat = saturate_max(ideal);
        const MonomialIdeal oracle = saturate_vars_oracle(ideal);
        if (auto w = witness_for_mismatch(sat.ideal, oracle,
                                          default_names(ideal.arity()))) {
          report.status = CheckStatus::Fail;
          report.witness = std::move(*w);
        }
        return report;
      });
      jobs.push_back([=] {
        CheckReport report;
        report.check = "length_oracle";
        report.instance = tag + ": I=" + render(ideal);
        const Ring ring =
            QuotientRing::make(default_names(ideal.arity()),
                               MonomialIdeal::zero(ideal.arity()));
        const RingIdeal inner(ring, ideal.generators());
        const RingIdeal outer = r_saturate(inner).ideal;
        const LengthResult direct = length_quotient(inner, outer);
        mpz_class via_hilbert = 0;
        for (std::int64_t e = 0; e <= direct.degree_cutoff; ++e) {
          via_hilbert +=
              hilbert_function(inner.rep(), static_cast<std::uint64_t>(e)) -
              hilbert_function(outer.rep(), static_cast<std::uint64_t>(e));
        }
        report.notes = "direct=" + to_string(direct.value) +
                       " hilbert=" + to_string(via_hilbert);
        if (direct.value != via_hilbert) {
          report.status = CheckStatus::Fail;
          CheckWitness w;
          w.description = "level count and Hilbert-function sum disagree: " +
                          report.notes;
          report.witness = std::move(w);
        }
        return report;
      });
    }
  }

  // Named instances: the nilpotent demonstration ring and k[x,y].
  const Ring nilring = QuotientRing::make(
      {"x", "y", "z"},
      MonomialIdeal::make(
          3, {Monomial::from_exponents(std::vector<std::uint32_t>{0, 0, 2}),
              Monomial::from_exponents(std::vector<std::uint32_t>{0, 1, 1})}));
  const RingIdeal nil_ideal(
      nilring, {Monomial::from_exponents(std::vector<std::uint32_t>{2, 0, 0}),
                Monomial::from_exponents(std::vector<std::uint32_t>{1, 1, 0})});
  const Ring polyring =
      QuotientRing::make({"x", "y"}, MonomialIdeal::zero(2));
  const RingIdeal poly_ideal(
      polyring, {Monomial::from_exponents(std::vector<std::uint32_t>{2, 0}),
                 Monomial::from_exponents(std::vector<std::uint32_t>{1, 1})});
  const RingIdeal mprimary_ideal(
      polyring, {Monomial::variable(2, 0), Monomial::variable(2, 1)});

  for (int n = 1; n <= options.additivity_nmax; ++n) {
    jobs.push_back([=] { return check_additivity_rmk2(nil_ideal, n); });
    jobs.push_back([=] { return check_additivity_eq2(nil_ideal, n); });
  }
  {
    InstanceGen add_gen(options.seed ^ 0xadd5ULL);
    for (int t = 0; t < 3; ++t) {
      const Ring ring = add_gen.random_nilpotent_ring();
      const RingIdeal ideal = add_gen.random_ring_ideal(ring);
      for (int n = 1; n <= 3; ++n) {
        jobs.push_back([=] { return check_additivity_rmk2(ideal, n); });
        jobs.push_back([=] { return check_additivity_eq2(ideal, n); });
      }
    }
  }

  const mpq_class tol = options.tolerance;
  for (int m = 1; m <= 2; ++m) {
    jobs.push_back(
        [=] { return check_lem7_consistency(nil_ideal, m, options.lem7_kmax, tol); });
  }
  jobs.push_back([=] {
    return check_vm_theorem(poly_ideal, options.vm_nmax, options.vm_mmax,
                            options.vm_kmax, tol);
  });
  jobs.push_back([=] {
    return check_vm_theorem(mprimary_ideal, options.vm_nmax, options.vm_mmax,
                            options.vm_kmax, tol);
  });

  std::vector<CheckReport> reports(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { reports[i] = jobs[i](); });
  return reports;
}

}  // namespace epslab
