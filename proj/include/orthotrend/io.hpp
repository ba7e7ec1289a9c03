#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orthotrend/dataset.hpp"
#include "orthotrend/iota.hpp"

namespace orthotrend {

struct CsvOptions {
  bool has_header = true;
  /// Optional selection, applied in the order given. Each entry is a header
  /// label (or S1..SN without a header), or else a 1-based column number.
  std::vector<std::string> columns;
  char delimiter = ',';
};

/// RFC 4180 style CSV: quoted fields, doubled quotes, CRLF or LF records.
/// Blank records are skipped, every other cell must be a finite number in
/// dot-decimal notation. Throws ParseError (with 1-based record and field
/// coordinates), DimensionError, or ValidationError.
Dataset parse_csv(std::string_view text, const CsvOptions& options = {});

enum class ReportFormat { table, json, csv };

struct TableStyle {
  double alpha = 0.05;
  /// ANSI bold on significant rows.
  bool color = false;
};

inline constexpr int kReportSchemaVersion = 1;

std::string serialize_report(const TrendReport& report, ReportFormat format,
                             const TableStyle& style = {});

/// Inverse of the JSON format. Throws Error on schema mismatch.
TrendReport parse_report_json(std::string_view json);

/// Fixed 4-decimal rendering (round-half-even on the binary value); "-0.0000" becomes "0.0000".
std::string format_fixed4(double value);

/// "<0.0001" below 1e-4, otherwise format_fixed4.
std::string format_p(double p);

}  // namespace orthotrend
