#include <charconv>
#include <cmath>
#include <optional>

#include "orthotrend/errors.hpp"
#include "orthotrend/io.hpp"
#include "orthotrend/sign_pattern.hpp"

namespace orthotrend {

namespace {

using Kind = ParseError::Kind;

struct Record {
  std::size_t line;  // 1-based physical record number
  std::vector<std::string> fields;
};

bool valid_utf8(std::string_view s, std::size_t& bad_offset) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c >> 5) == 0x6) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c >> 4) == 0xE) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c >> 3) == 0x1E) {
      len = 4;
      cp = c & 0x07;
    } else {
      bad_offset = i;
      return false;
    }
    if (i + len > s.size()) {
      bad_offset = i;
      return false;
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2) {
        bad_offset = i;
        return false;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      bad_offset = i;
      return false;
    }
    i += len;
  }
  return true;
}

std::vector<Record> split_records(std::string_view text, char delim) {
  std::vector<Record> records;
  std::vector<std::string> fields;
  std::string field;
  std::size_t line = 1;
  std::size_t record_start = 1;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = !record_has_content && fields.size() == 1 && fields[0].empty();
    if (!blank) records.push_back({record_start, std::move(fields)});
    fields.clear();
    record_has_content = false;
    record_start = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      if (!field.empty() || field_was_quoted) {
        throw ParseError(Kind::syntax,
                         "unexpected quote inside unquoted field at record " + std::to_string(line) +
                             ", field " + std::to_string(fields.size() + 1),
                         line, fields.size() + 1);
      }
      in_quotes = true;
      field_was_quoted = true;
      record_has_content = true;
    } else if (c == delim) {
      end_field();
      record_has_content = true;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      // CRLF: the '\n' ends the record.
    } else if (c == '\n') {
      ++line;
      end_record();
    } else {
      if (field_was_quoted && c != ' ' && c != '\t') {
        throw ParseError(Kind::syntax,
                         "text after closing quote at record " + std::to_string(record_start) +
                             ", field " + std::to_string(fields.size() + 1),
                         record_start, fields.size() + 1);
      }
      field.push_back(c);
      if (c != ' ' && c != '\t' && c != '\r') record_has_content = true;
    }
  }
  if (in_quotes) {
    throw ParseError(Kind::syntax, "unterminated quoted field starting in record " +
                                       std::to_string(record_start),
                     record_start, fields.size() + 1);
  }
  if (!field.empty() || !fields.empty() || field_was_quoted) end_record();
  return records;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_cell(std::string_view raw, std::size_t line, std::size_t field) {
  const auto cell = trim(raw);
  const auto where = " at record " + std::to_string(line) + ", field " + std::to_string(field);
  if (cell.empty()) throw ParseError(Kind::missing_value, "missing value" + where, line, field);

  std::string_view digits = cell;
  if (digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value,
                                         std::chars_format::general);
  // from_chars accepts "inf"/"nan"; both are rejected as non-numeric here.
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
    throw ParseError(Kind::non_numeric,
                     "non-numeric value '" + std::string(cell) + "'" + where, line, field);
  }
  return value;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Dataset parse_csv(std::string_view text, const CsvOptions& options) {
  if (options.delimiter == '"' || options.delimiter == '\n' || options.delimiter == '\r') {
    throw std::invalid_argument("invalid CSV delimiter");
  }
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::size_t bad = 0;
  if (!valid_utf8(text, bad)) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < bad; ++i) line += text[i] == '\n';
    throw ParseError(Kind::encoding, "input is not valid UTF-8 (record " + std::to_string(line) + ")",
                     line, 0);
  }

  auto records = split_records(text, options.delimiter);
  if (records.empty()) throw ValidationError("need at least 2 observations, got 0");

  const std::size_t width = records.front().fields.size();
  std::vector<std::string> header;
  std::size_t first_data = 0;
  if (options.has_header) {
    for (const auto& f : records.front().fields) header.emplace_back(trim(f));
    first_data = 1;
  } else {
    for (std::size_t k = 1; k <= width; ++k) header.push_back("S" + std::to_string(k));
  }

  for (const auto& rec : records) {
    if (rec.fields.size() != width) {
      throw ParseError(Kind::ragged_row,
                       "record " + std::to_string(rec.line) + " has " +
                           std::to_string(rec.fields.size()) + " fields, expected " +
                           std::to_string(width),
                       rec.line, 0);
    }
  }

  std::vector<std::size_t> selected;
  if (options.columns.empty()) {
    for (std::size_t k = 0; k < width; ++k) selected.push_back(k);
  } else {
    for (const auto& want : options.columns) {
      std::optional<std::size_t> pick;
      for (std::size_t k = 0; k < width && !pick; ++k) {
        if (header[k] == want) pick = k;
      }
      if (!pick) {
        if (auto idx = parse_index(want); idx && *idx >= 1 && *idx <= width) pick = *idx - 1;
      }
      if (!pick) {
        throw ParseError(Kind::unknown_column, "unknown column '" + want + "'",
                         options.has_header ? 1 : 0, 0);
      }
      selected.push_back(*pick);
    }
  }
  check_dimension(static_cast<int>(selected.size()));

  std::vector<std::string> labels;
  for (std::size_t k : selected) labels.push_back(header[k]);

  const std::size_t rows = records.size() - first_data;
  if (rows < 2) {
    throw ValidationError("need at least 2 observations, got " + std::to_string(rows));
  }

  std::vector<double> values;
  values.reserve(rows * selected.size());
  for (std::size_t r = first_data; r < records.size(); ++r) {
    const auto& rec = records[r];
    for (std::size_t k : selected) values.push_back(parse_cell(rec.fields[k], rec.line, k + 1));
  }
  return Dataset(std::move(labels), std::move(values));
}

}  // namespace orthotrend
