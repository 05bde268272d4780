#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epslab/sequences.hpp"
#include "epslab/verify.hpp"

namespace epslab {

enum class OutputFormat { Csv, Markdown, Json };

OutputFormat parse_output_format(const std::string& text);

/// One emitted table row. The CSV schema is fixed:
///   family,n,m,k,length,naive,finite_diff,richardson
/// with empty cells for inapplicable columns and rationals printed as p/q.
struct TableRow {
  std::string family;
  std::optional<long> n;
  std::optional<long> m;
  std::optional<long> k;
  std::optional<mpz_class> length;
  std::optional<mpq_class> naive;
  std::optional<mpq_class> finite_diff;
  std::optional<mpq_class> richardson;
};

std::string render_table(std::span<const TableRow> rows, OutputFormat format);

std::string render_reports(std::span<const CheckReport> reports,
                           OutputFormat format);

/// Expands a single sequence family into rows: per index, the length plus the
/// estimators computed from the prefix ending there (blank until the window
/// is wide enough). Records must be one family with consecutive indices.
std::vector<TableRow> rows_for_sequence(std::span<const SequenceRecord> records,
                                        unsigned dim,
                                        const mpq_class& tolerance);

}  // namespace epslab
