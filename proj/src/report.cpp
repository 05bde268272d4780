#include "epslab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace epslab {

namespace {

std::string cell(const std::optional<long>& v) {
  return v ? std::to_string(*v) : std::string();
}
std::string cell(const std::optional<mpz_class>& v) {
  return v ? to_string(*v) : std::string();
}
std::string cell(const std::optional<mpq_class>& v) {
  return v ? to_string(*v) : std::string();
}

std::vector<std::string> row_cells(const TableRow& row) {
  return {row.family,          cell(row.n),     cell(row.m),
          cell(row.k),         cell(row.length), cell(row.naive),
          cell(row.finite_diff), cell(row.richardson)};
}

const char* const kHeader[] = {"family", "n",     "m",           "k",
                               "length", "naive", "finite_diff", "richardson"};

std::string render_csv(std::span<const TableRow> rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < 8; ++i) out << (i ? "," : "") << kHeader[i];
  out << '\n';
  for (const TableRow& row : rows) {
    const auto cells = row_cells(row);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << cells[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_markdown(std::span<const TableRow> rows) {
  std::ostringstream out;
  out << "|";
  for (const char* h : kHeader) out << ' ' << h << " |";
  out << " approx |\n|";
  for (std::size_t i = 0; i < 9; ++i) out << " --- |";
  out << '\n';
  for (const TableRow& row : rows) {
    out << "|";
    for (const std::string& c : row_cells(row)) {
      out << ' ' << (c.empty() ? "-" : c) << " |";
    }
    // Decimal approximation of the most converged estimator present.
    std::string approx = "-";
    if (row.finite_diff) {
      approx = to_decimal_string(*row.finite_diff);
    } else if (row.naive) {
      approx = to_decimal_string(*row.naive);
    }
    out << ' ' << approx << " |\n";
  }
  return out.str();
}

std::string render_json(std::span<const TableRow> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["family"] = row.family;
    if (row.n) obj["n"] = *row.n;
    if (row.m) obj["m"] = *row.m;
    if (row.k) obj["k"] = *row.k;
    if (row.length) obj["length"] = to_string(*row.length);
    if (row.naive) obj["naive"] = to_string(*row.naive);
    if (row.finite_diff) obj["finite_diff"] = to_string(*row.finite_diff);
    if (row.richardson) obj["richardson"] = to_string(*row.richardson);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

const char* status_text(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "md") return OutputFormat::Markdown;
  if (text == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + text + "' (csv|md|json)");
}

std::string render_table(std::span<const TableRow> rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return render_csv(rows);
    case OutputFormat::Markdown: return render_markdown(rows);
    case OutputFormat::Json: return render_json(rows);
  }
  throw DomainError("unhandled output format");
}

std::string render_reports(std::span<const CheckReport> reports,
                           OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
      nlohmann::ordered_json obj;
      obj["check"] = r.check;
      obj["instance"] = r.instance;
      obj["status"] = status_text(r.status);
      if (!r.notes.empty()) obj["notes"] = r.notes;
      if (r.witness) {
        nlohmann::ordered_json w;
        w["description"] = r.witness->description;
        arr.push_back(std::move(obj));
        arr.back()["witness"] = std::move(w);
        continue;
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

  // csv falls back to the text listing; check reports are not tabular.
  std::ostringstream out;
  std::size_t failed = 0, skipped = 0;
  for (const CheckReport& r : reports) {
    out << status_text(r.status) << "  " << r.check << "  [" << r.instance
        << "]";
    if (!r.notes.empty()) out << "  (" << r.notes << ")";
    out << '\n';
    if (r.witness) out << "      witness: " << r.witness->description << '\n';
    if (r.status == CheckStatus::Fail) ++failed;
    if (r.status == CheckStatus::Skip) ++skipped;
  }
  out << reports.size() << " checks, " << failed << " failed, " << skipped
      << " skipped\n";
  return out.str();
}

std::vector<TableRow> rows_for_sequence(std::span<const SequenceRecord> records,
                                        unsigned dim,
                                        const mpq_class& tolerance) {
  std::vector<TableRow> rows;
  rows.reserve(records.size());
  std::vector<std::pair<long, mpz_class>> prefix;
  prefix.reserve(records.size());
  for (const SequenceRecord& record : records) {
    const bool grid = record.k >= 1;
    const long idx = grid ? record.k : record.n;
    prefix.emplace_back(idx, record.length);

    TableRow row;
    row.family = std::string(family_name(record.family));
    if (record.n >= 0) row.n = record.n;
    if (record.m >= 0) row.m = record.m;
    if (record.k >= 0) row.k = record.k;
    row.length = record.length;
    row.naive = record.normalized;
    if (prefix.size() >= dim + 2) {
      const LimitEstimate est = estimate_limit(prefix, dim, tolerance);
      row.finite_diff = est.finite_diff;
      row.richardson = est.richardson;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace epslab
