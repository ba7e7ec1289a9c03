#include <array>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "orthotrend/errors.hpp"
#include "orthotrend/io.hpp"

namespace orthotrend {

using nlohmann::json;

std::string format_fixed4(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 4);
  std::string out(buf.data(), res.ptr);
  if (out == "-0.0000") out = "0.0000";
  return out;
}

std::string format_p(double p) { return p < 1e-4 ? "<0.0001" : format_fixed4(p); }

namespace {

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string to_table(const TrendReport& r, const TableStyle& style) {
  std::ostringstream os;
  os << "n = " << r.n << ", N = " << r.dimension << ", r_p = " << format_fixed4(r.reliable_point)
     << ", m = " << r.effective_pairs << " (tied " << r.tied_pairs << ")"
     << ", sigma = " << format_fixed4(r.sigma) << "\n";
  os << "columns:";
  for (const auto& c : r.columns) os << ' ' << c;
  os << "\n";
  if (r.permutation) {
    os << "permutation: K = " << r.permutation->replicates << ", seed = " << r.permutation->seed
       << "\n";
  }

  const std::size_t label_width =
      std::max<std::size_t>(5, 2 * static_cast<std::size_t>(r.dimension) + 1);
  const bool perm = r.permutation.has_value();
  os << pad_right("trend", label_width) << "  " << pad_left("delta", 7) << "  "
     << pad_left("iota", 7) << "  " << pad_left("p", 7);
  if (perm) os << "  " << pad_left("perm_p", 7);
  os << "\n";

  for (const auto& e : r.entries) {
    const bool significant = e.p < style.alpha;
    std::string line = pad_right(e.trend.label(), label_width) + "  " +
                       pad_left(format_fixed4(e.delta), 7) + "  " +
                       pad_left(format_fixed4(e.iota), 7) + "  " + pad_left(format_p(e.p), 7);
    if (perm) line += "  " + pad_left(e.permutation_p ? format_p(*e.permutation_p) : "-", 7);
    if (significant) line += " *";
    if (significant && style.color) line = "\x1b[1m" + line + "\x1b[0m";
    os << line << "\n";
  }
  return os.str();
}

std::string to_csv(const TrendReport& r) {
  std::ostringstream os;
  const bool perm = r.permutation.has_value();
  os << "index,trend,canonical,negation,count,delta,iota,z,p";
  if (perm) os << ",permutation_p";
  os << "\n";
  for (const auto& e : r.entries) {
    os << e.trend.index << ',' << e.trend.label() << ',' << e.trend.canonical.to_string() << ','
       << e.trend.negation().to_string() << ',' << e.count << ',' << shortest(e.delta) << ','
       << shortest(e.iota) << ',' << shortest(e.z) << ',' << shortest(e.p);
    if (perm) os << ',' << (e.permutation_p ? shortest(*e.permutation_p) : std::string());
    os << "\n";
  }
  return os.str();
}

json to_json(const TrendReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["dimension"] = r.dimension;
  j["columns"] = r.columns;
  j["reliable_point"] = r.reliable_point;
  j["effective_pairs"] = r.effective_pairs;
  j["tied_pairs"] = r.tied_pairs;
  j["sigma"] = r.sigma;
  if (r.permutation) {
    j["permutation"] = {{"replicates", r.permutation->replicates}, {"seed", r.permutation->seed}};
  } else {
    j["permutation"] = nullptr;
  }
  json trends = json::array();
  for (const auto& e : r.entries) {
    json t;
    t["index"] = e.trend.index;
    t["label"] = e.trend.label();
    t["count"] = e.count;
    t["delta"] = e.delta;
    t["iota"] = e.iota;
    t["z"] = e.z;
    t["p"] = e.p;
    t["permutation_p"] = e.permutation_p ? json(*e.permutation_p) : json(nullptr);
    trends.push_back(std::move(t));
  }
  j["trends"] = std::move(trends);
  return j;
}

}  // namespace

std::string serialize_report(const TrendReport& report, ReportFormat format,
                             const TableStyle& style) {
  switch (format) {
    case ReportFormat::table:
      return to_table(report, style);
    case ReportFormat::csv:
      return to_csv(report);
    case ReportFormat::json:
      return to_json(report).dump(2) + "\n";
  }
  return {};
}

TrendReport parse_report_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw Error("unsupported report schema_version " + j.at("schema_version").dump());
    }
    TrendReport r;
    r.n = j.at("n").get<std::size_t>();
    r.dimension = j.at("dimension").get<int>();
    check_dimension(r.dimension);
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.reliable_point = j.at("reliable_point").get<double>();
    r.effective_pairs = j.at("effective_pairs").get<std::uint64_t>();
    r.tied_pairs = j.at("tied_pairs").get<std::uint64_t>();
    r.sigma = j.at("sigma").get<double>();
    if (const auto& p = j.at("permutation"); !p.is_null()) {
      r.permutation = PermutationSettings{p.at("replicates").get<std::uint32_t>(),
                                          p.at("seed").get<std::uint64_t>()};
    }
    const auto& trends = j.at("trends");
    if (trends.size() != trend_count(r.dimension)) {
      throw Error("report lists " + std::to_string(trends.size()) + " trends, expected " +
                  std::to_string(trend_count(r.dimension)));
    }
    for (const auto& t : trends) {
      TrendEntry e{paired_orthant(r.dimension, t.at("index").get<std::uint32_t>())};
      if (t.at("label").get<std::string>() != e.trend.label()) {
        throw Error("trend label " + t.at("label").dump() + " does not match index");
      }
      e.count = t.at("count").get<std::uint64_t>();
      e.delta = t.at("delta").get<double>();
      e.iota = t.at("iota").get<double>();
      e.z = t.at("z").get<double>();
      e.p = t.at("p").get<double>();
      if (const auto& pp = t.at("permutation_p"); !pp.is_null()) e.permutation_p = pp.get<double>();
      r.entries.push_back(std::move(e));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace orthotrend
