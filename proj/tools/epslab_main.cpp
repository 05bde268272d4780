// epslab: exact workbench for epsilon and Amao multiplicities of monomial
// ideals in monomial quotient rings.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "epslab/parse.hpp"
#include "epslab/report.hpp"
#include "epslab/sequences.hpp"
#include "epslab/verify.hpp"

namespace {

using namespace epslab;

struct CommandOptions {
  std::string instance_path;
  std::optional<int> nmax, mmax, kmax, bmax;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> tolerance;
  std::string output = "csv";
  std::string out_path;
  bool require_hypothesis = false;
};

void attach_common(CLI::App* cmd, CommandOptions& opts, bool needs_instance) {
  if (needs_instance) {
    cmd->add_option("instance", opts.instance_path, "instance JSON file")
        ->required();
  } else {
    cmd->add_option("instance", opts.instance_path,
                    "instance JSON file (optional; supplies seed/tolerance)");
  }
  cmd->add_option("--nmax", opts.nmax, "largest power index n");
  cmd->add_option("--mmax", opts.mmax, "largest outer index m");
  cmd->add_option("--kmax", opts.kmax, "largest inner index k");
  cmd->add_option("--bmax", opts.bmax, "largest constant searched");
  cmd->add_option("--seed", opts.seed, "randomized-check seed");
  cmd->add_option("--tolerance", opts.tolerance,
                  "estimator tolerance as a rational, e.g. 1/20");
  cmd->add_option("--output", opts.output, "output format: csv|md|json")
      ->check(CLI::IsMember({"csv", "md", "json"}));
  cmd->add_option("--out", opts.out_path, "write output to this file");
  cmd->add_flag("--require-hypothesis", opts.require_hypothesis,
                "fail (exit 3) when dim N = dim R");
}

JobParams merged_params(const JobParams& from_file,
                        const CommandOptions& opts) {
  JobParams params = from_file;
  if (opts.nmax) params.nmax = *opts.nmax;
  if (opts.mmax) params.mmax = *opts.mmax;
  if (opts.kmax) params.kmax = *opts.kmax;
  if (opts.bmax) params.bmax = *opts.bmax;
  if (opts.seed) params.seed = *opts.seed;
  if (opts.tolerance) {
    mpq_class tol = parse_rational(*opts.tolerance);
    if (tol <= 0) throw DomainError("tolerance must be positive");
    params.tolerance = tol;
  }
  if (params.nmax < 1 || params.mmax < 1 || params.kmax < 1 || params.bmax < 1) {
    throw DomainError("all bounds must be at least 1");
  }
  return params;
}

void emit(const CommandOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + opts.out_path + "'");
  out << text;
}

TableRow amao_outer_row(const AmaoGrid& grid, unsigned dim, int m) {
  const LimitEstimate& est = grid.inner_estimates[m - 1];
  const mpq_class md(int_pow(mpz_class(m), dim));
  TableRow row;
  row.family = "amao_outer";
  row.m = m;
  row.naive = est.naive_last / md;
  row.finite_diff = est.finite_diff / md;
  row.richardson = est.richardson / md;
  return row;
}

int run_info(const Instance& instance, const CommandOptions& opts) {
  const Ring& ring = instance.ring;
  const auto names = ring->names();
  std::string text;
  const auto line = [&](const std::string& key, const std::string& value) {
    text += key + ": " + value + "\n";
  };
  std::string vars;
  for (const auto& n : names) vars += (vars.empty() ? "" : ", ") + n;
  line("vars", vars);
  line("quotient", to_string(ring->defining_ideal(), names));
  line("ideal", to_string(instance.ideal));
  line("dim_ring", std::to_string(ring->dim()));
  line("nilradical", ring->nilradical_is_zero()
                         ? "(0)"
                         : to_string(ring->nilradical_ambient(), names));
  line("dim_nilradical", std::to_string(ring->dim_nilradical()));
  line("hypothesis_dimN_lt_dimR", ring->hypothesis_holds() ? "true" : "false");
  line("analytically_unramified",
       ring->analytically_unramified() ? "true" : "false");

  if (opts.output == "json") {
    nlohmann::ordered_json obj;
    obj["vars"] = std::vector<std::string>(names.begin(), names.end());
    obj["quotient"] = to_string(ring->defining_ideal(), names);
    obj["ideal"] = to_string(instance.ideal);
    obj["dim_ring"] = ring->dim();
    obj["nilradical"] = ring->nilradical_is_zero()
                            ? "(0)"
                            : to_string(ring->nilradical_ambient(), names);
    obj["dim_nilradical"] = ring->dim_nilradical();
    obj["hypothesis_dimN_lt_dimR"] = ring->hypothesis_holds();
    obj["analytically_unramified"] = ring->analytically_unramified();
    emit(opts, obj.dump(2) + "\n");
  } else {
    emit(opts, text);
  }
  if (opts.require_hypothesis && !ring->hypothesis_holds()) {
    std::cerr << "hypothesis violated: dim N = " << ring->dim_nilradical()
              << " is not less than dim R = " << ring->dim() << "\n";
    return 3;
  }
  return 0;
}

int run_epsilon(const Instance& instance, const CommandOptions& opts) {
  const JobParams params = merged_params(instance.params, opts);
  const unsigned dim = static_cast<unsigned>(instance.ring->dim());
  const auto records = epsilon_sequence(instance.ideal, params.nmax);
  const auto rows = rows_for_sequence(records, dim, params.tolerance);
  emit(opts, render_table(rows, parse_output_format(opts.output)));
  return 0;
}

int run_amao(const Instance& instance, const CommandOptions& opts) {
  const JobParams params = merged_params(instance.params, opts);
  const unsigned dim = static_cast<unsigned>(instance.ring->dim());
  const AmaoGrid grid =
      amao_grid(instance.ideal, params.mmax, params.kmax, params.tolerance);
  std::vector<TableRow> rows;
  for (int m = 1; m <= params.mmax; ++m) {
    const std::span<const SequenceRecord> row(
        grid.inner.data() + static_cast<std::size_t>(m - 1) * params.kmax,
        static_cast<std::size_t>(params.kmax));
    const auto inner_rows = rows_for_sequence(row, dim, params.tolerance);
    rows.insert(rows.end(), inner_rows.begin(), inner_rows.end());
    rows.push_back(amao_outer_row(grid, dim, m));
  }
  emit(opts, render_table(rows, parse_output_format(opts.output)));
  return 0;
}

int run_decompose(const Instance& instance, const CommandOptions& opts) {
  const JobParams params = merged_params(instance.params, opts);
  const unsigned dim = static_cast<unsigned>(instance.ring->dim());
  const auto records = decomposition_sequences(instance.ideal, params.nmax);
  std::vector<TableRow> rows;
  const std::size_t nmax = static_cast<std::size_t>(params.nmax);
  for (std::size_t family = 0; family * nmax < records.size(); ++family) {
    const std::span<const SequenceRecord> block(
        records.data() + family * nmax, nmax);
    const auto family_rows = rows_for_sequence(block, dim, params.tolerance);
    rows.insert(rows.end(), family_rows.begin(), family_rows.end());
  }
  emit(opts, render_table(rows, parse_output_format(opts.output)));
  return 0;
}

int run_swanson(const Instance& instance, const CommandOptions& opts) {
  const JobParams params = merged_params(instance.params, opts);
  const SwansonResult b =
      swanson_search(instance.ideal, params.nmax, params.bmax);
  const SwansonResult c =
      swanson_c_search(instance.ideal, params.nmax, params.bmax);
  std::vector<TableRow> rows;
  const auto push = [&](const char* family, const SwansonResult& result) {
    TableRow row;
    row.family = family;
    row.n = result.verified_range;
    if (result.found) row.length = mpz_class(result.constant);
    rows.push_back(std::move(row));
  };
  push("swanson_b", b);
  push("swanson_c", c);
  emit(opts, render_table(rows, parse_output_format(opts.output)));
  return 0;
}

int run_vm_check(const Instance& instance, const CommandOptions& opts) {
  const JobParams params = merged_params(instance.params, opts);
  const unsigned dim = static_cast<unsigned>(instance.ring->dim());
  // Raises HypothesisViolationError before any table is emitted.
  const CheckReport verdict =
      check_vm_theorem(instance.ideal, params.nmax, params.mmax, params.kmax,
                       params.tolerance);

  const auto eps = epsilon_sequence(instance.ideal, params.nmax);
  const AmaoGrid grid =
      amao_grid(instance.ideal, params.mmax, params.kmax, params.tolerance);
  std::vector<TableRow> rows = rows_for_sequence(eps, dim, params.tolerance);
  for (int m = 1; m <= params.mmax; ++m) {
    const std::span<const SequenceRecord> row(
        grid.inner.data() + static_cast<std::size_t>(m - 1) * params.kmax,
        static_cast<std::size_t>(params.kmax));
    const auto inner_rows = rows_for_sequence(row, dim, params.tolerance);
    rows.insert(rows.end(), inner_rows.begin(), inner_rows.end());
    rows.push_back(amao_outer_row(grid, dim, m));
  }
  {
    const auto eps_series = [&] {
      std::vector<std::pair<long, mpz_class>> s;
      for (const auto& r : eps) s.emplace_back(r.n, r.length);
      return s;
    }();
    const LimitEstimate eps_est =
        estimate_limit(eps_series, dim, params.tolerance);
    TableRow summary;
    summary.family = "vm_check";
    summary.n = params.nmax;
    summary.m = params.mmax;
    summary.naive = eps_est.finite_diff;
    summary.finite_diff = grid.outer_values.back();
    rows.push_back(std::move(summary));
  }
  emit(opts, render_table(rows, parse_output_format(opts.output)));
  if (!verdict.passed()) {
    std::cerr << "vm-check failed: "
              << (verdict.witness ? verdict.witness->description
                                  : verdict.notes)
              << "\n";
    return 4;
  }
  return 0;
}

int run_verify(const CommandOptions& opts) {
  JobParams params;
  if (!opts.instance_path.empty()) {
    params = parse_instance_file(opts.instance_path).params;
  }
  params = merged_params(params, opts);
  SuiteOptions suite;
  suite.seed = params.seed;
  suite.tolerance = params.tolerance;
  const auto reports = run_verify_suite(suite);
  emit(opts, render_reports(reports, parse_output_format(opts.output)));
  for (const CheckReport& r : reports) {
    if (!r.passed()) return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "epslab: exact epsilon/Amao multiplicity workbench for monomial ideals "
      "in monomial quotient rings"};
  app.require_subcommand(1);

  CommandOptions info_opts, eps_opts, amao_opts, vm_opts, swanson_opts,
      decompose_opts, verify_opts;
  CLI::App* cmd_info =
      app.add_subcommand("info", "ring and nilradical diagnostics");
  attach_common(cmd_info, info_opts, true);
  CLI::App* cmd_eps = app.add_subcommand(
      "epsilon", "lengths of saturated powers over powers, with estimates");
  attach_common(cmd_eps, eps_opts, true);
  CLI::App* cmd_amao =
      app.add_subcommand("amao", "Amao inner/outer multiplicity grid");
  attach_common(cmd_amao, amao_opts, true);
  CLI::App* cmd_vm = app.add_subcommand(
      "vm-check", "compare the epsilon estimate with the Amao outer trend");
  attach_common(cmd_vm, vm_opts, true);
  CLI::App* cmd_swanson = app.add_subcommand(
      "swanson", "search for uniform linear intersection constants");
  attach_common(cmd_swanson, swanson_opts, true);
  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "nilradical decomposition length families");
  attach_common(cmd_decompose, decompose_opts, true);
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the identity/property check suite");
  attach_common(cmd_verify, verify_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  bool require_hypothesis = false;
  try {
    if (cmd_info->parsed()) {
      require_hypothesis = info_opts.require_hypothesis;
      return run_info(parse_instance_file(info_opts.instance_path), info_opts);
    }
    if (cmd_eps->parsed()) {
      require_hypothesis = eps_opts.require_hypothesis;
      return run_epsilon(parse_instance_file(eps_opts.instance_path),
                         eps_opts);
    }
    if (cmd_amao->parsed()) {
      require_hypothesis = amao_opts.require_hypothesis;
      return run_amao(parse_instance_file(amao_opts.instance_path), amao_opts);
    }
    if (cmd_vm->parsed()) {
      require_hypothesis = vm_opts.require_hypothesis;
      return run_vm_check(parse_instance_file(vm_opts.instance_path), vm_opts);
    }
    if (cmd_swanson->parsed()) {
      require_hypothesis = swanson_opts.require_hypothesis;
      return run_swanson(parse_instance_file(swanson_opts.instance_path),
                         swanson_opts);
    }
    if (cmd_decompose->parsed()) {
      require_hypothesis = decompose_opts.require_hypothesis;
      return run_decompose(parse_instance_file(decompose_opts.instance_path),
                           decompose_opts);
    }
    if (cmd_verify->parsed()) {
      require_hypothesis = verify_opts.require_hypothesis;
      return run_verify(verify_opts);
    }
    std::cerr << "no command selected\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return require_hypothesis ? 3 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
