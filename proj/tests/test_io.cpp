#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "orthotrend/errors.hpp"
#include "orthotrend/io.hpp"

using namespace orthotrend;

namespace {

std::string to_csv_text(const std::vector<std::vector<double>>& cols, bool header) {
  std::ostringstream os;
  if (header) {
    for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << "S" << k + 1;
    os << "\n";
  }
  for (std::size_t r = 0; r < cols[0].size(); ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k][r];
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

ParseError::Kind parse_error_kind(std::string_view text, const CsvOptions& opt = {}) {
  try {
    parse_csv(text, opt);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError::Kind::syntax;
}

}  // namespace

TEST(ParseCsv, HeaderlessSeriesGetDefaultLabels) {
  const auto cols = fixtures::bivariate_series()[0].columns;
  CsvOptions opt;
  opt.has_header = false;
  const auto data = parse_csv(to_csv_text(cols, false), opt);
  EXPECT_EQ(data.rows(), 12u);
  EXPECT_EQ(data.dimension(), 2);
  EXPECT_EQ(data.labels(), (std::vector<std::string>{"S1", "S2"}));
  EXPECT_EQ(data, Dataset::from_columns(cols));
}

TEST(ParseCsv, NonNumericCellNamesLocation) {
  try {
    parse_csv("a,b\n1,2\n3,abc\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::non_numeric);
    EXPECT_EQ(e.row(), 3u);
    EXPECT_EQ(e.column(), 2u);
    EXPECT_NE(std::string(e.what()).find("abc"), std::string::npos);
  }
}

TEST(ParseCsv, DimensionAndRowCountErrors) {
  EXPECT_THROW(parse_csv("x\n1\n2\n3\n"), DimensionError);
  try {
    parse_csv("a,b\n1,2\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("need at least 2 observations"), std::string::npos);
  }
  std::string wide;
  for (int k = 0; k < 17; ++k) wide += (k ? ",c" : "c") + std::to_string(k);
  wide += "\n";
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 17; ++k) wide += (k ? "," : "") + std::to_string(r * k);
    wide += "\n";
  }
  EXPECT_THROW(parse_csv(wide), DimensionError);
  CsvOptions pick;
  pick.columns = {"c1", "c2", "c3"};
  EXPECT_EQ(parse_csv(wide, pick).dimension(), 3);
}

TEST(ParseCsv, MalformedInputsCarryKinds) {
  EXPECT_EQ(parse_error_kind("a,b\n1,2\n3\n"), ParseError::Kind::ragged_row);
  EXPECT_EQ(parse_error_kind("a,b\n1,\n3,4\n"), ParseError::Kind::missing_value);
  EXPECT_EQ(parse_error_kind("a,b\n\"1,2\n3,4\n"), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("a,b\n1\"x\",2\n3,4\n"), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("a,b\n1,nan\n3,4\n"), ParseError::Kind::non_numeric);
  EXPECT_EQ(parse_error_kind("a,b\n1,inf\n3,4\n"), ParseError::Kind::non_numeric);
  EXPECT_EQ(parse_error_kind("a,b\n1,2\xff\n3,4\n"), ParseError::Kind::encoding);
  CsvOptions opt;
  opt.columns = {"zzz"};
  EXPECT_EQ(parse_error_kind("a,b\n1,2\n3,4\n", opt), ParseError::Kind::unknown_column);
}

TEST(ParseCsv, QuotingDelimitersAndLineEndings) {
  const auto data = parse_csv("\xEF\xBB\xBF\"x, \"\"first\"\"\";y\r\n1.5;2e1\r\n\r\n\"-3\";+4\r\n",
                              CsvOptions{true, {}, ';'});
  EXPECT_EQ(data.labels(), (std::vector<std::string>{"x, \"first\"", "y"}));
  EXPECT_EQ(data.rows(), 2u);
  EXPECT_EQ(data.at(0, 0), 1.5);
  EXPECT_EQ(data.at(0, 1), 20.0);
  EXPECT_EQ(data.at(1, 0), -3.0);
  EXPECT_EQ(data.at(1, 1), 4.0);
  // decimal commas are not numbers
  EXPECT_EQ(parse_error_kind("a;b\n1,5;2\n3;4\n", CsvOptions{true, {}, ';'}),
            ParseError::Kind::non_numeric);
}

TEST(ParseCsv, ColumnSelectionReorders) {
  CsvOptions opt;
  opt.columns = {"c", "1"};
  const auto data = parse_csv("a,b,c\n1,x,5\n2,y,6\n3,z,8\n", opt);
  EXPECT_EQ(data.labels(), (std::vector<std::string>{"c", "a"}));
  EXPECT_EQ(data.column(0), (std::vector<double>{5, 6, 8}));
  EXPECT_EQ(data.column(1), (std::vector<double>{1, 2, 3}));
}

TEST(SerializeReport, TableMatchesPublishedLayout) {
  const auto report = analyze(Dataset::from_columns(fixtures::bivariate_series()[0].columns));
  const auto text = serialize_report(report, ReportFormat::table);
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : lines(text)) {
    auto t = tokens(l);
    if (!t.empty() && (t[0] == "++/--" || t[0] == "+-/-+")) rows.push_back(t);
  }
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(std::vector<std::string>(rows[1].begin(), rows[1].begin() + 4),
            (std::vector<std::string>{"++/--", "1.0000", "1.0000", "<0.0001"}));
  EXPECT_EQ(std::vector<std::string>(rows[0].begin(), rows[0].begin() + 4),
            (std::vector<std::string>{"+-/-+", "0.0000", "-1.0000", "<0.0001"}));
  EXPECT_EQ(rows[1].back(), "*");
  EXPECT_EQ(text, serialize_report(report, ReportFormat::table));
  EXPECT_EQ(text.find('\x1b'), std::string::npos);
  EXPECT_NE(serialize_report(report, ReportFormat::table, {0.05, true}).find('\x1b'),
            std::string::npos);
}

TEST(SerializeReport, AlphaControlsMarker) {
  const auto report = analyze(Dataset::from_columns(fixtures::bivariate_series()[3].columns));
  const auto loose = serialize_report(report, ReportFormat::table, {0.99, false});
  const auto strict = serialize_report(report, ReportFormat::table, {0.05, false});
  EXPECT_NE(loose.find(" *"), std::string::npos);
  EXPECT_EQ(strict.find(" *"), std::string::npos);
}

TEST(SerializeReport, OneRowPerTrend) {
  for (int dim = 2; dim <= 6; ++dim) {
    std::mt19937_64 rng(static_cast<unsigned>(dim));
    const auto cols = gen::random_columns(rng, 20, dim, false);
    const auto report = analyze(Dataset::from_columns(cols));
    const auto csv = lines(serialize_report(report, ReportFormat::csv));
    EXPECT_EQ(csv.size(), trend_count(dim) + 1);
    EXPECT_EQ(csv[0], "index,trend,canonical,negation,count,delta,iota,z,p");
    const auto table = lines(serialize_report(report, ReportFormat::table));
    EXPECT_EQ(table.size(), trend_count(dim) + 3);
  }
}

TEST(SerializeReport, JsonRoundTripIsLossless) {
  std::mt19937_64 rng(77);
  for (int c = 0; c < 60; ++c) {
    const auto kase = gen::random_case(rng);
    std::optional<PermutationSettings> perm;
    if (c % 5 == 0) perm = PermutationSettings{99, rng()};
    const auto report = analyze(Dataset::from_columns(kase.columns), perm);
    const auto json = serialize_report(report, ReportFormat::json);
    ASSERT_EQ(parse_report_json(json), report) << json;
  }
}

TEST(SerializeReport, JsonSchemaFields) {
  const auto report = analyze(Dataset::from_columns(fixtures::bivariate_series()[3].columns),
                              PermutationSettings{99, 42});
  const auto json = serialize_report(report, ReportFormat::json);
  for (const char* key : {"\"schema_version\": 1", "\"effective_pairs\": 61", "\"tied_pairs\": 5",
                          "\"seed\": 42", "\"label\": \"++/--\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key;
  }
  EXPECT_THROW(parse_report_json("{\"schema_version\": 2}"), Error);
  EXPECT_THROW(parse_report_json("not json"), Error);
}

TEST(Formatting, FixedAndFloor) {
  EXPECT_EQ(format_fixed4(0.03125), "0.0312");
  EXPECT_EQ(format_fixed4(-0.00001), "0.0000");
  EXPECT_EQ(format_fixed4(-0.0164), "-0.0164");
  EXPECT_EQ(format_p(0.00009), "<0.0001");
  EXPECT_EQ(format_p(0.0001), "0.0001");
  EXPECT_EQ(format_p(1.0), "1.0000");
}
