#ifndef MOMCUT_IO_HPP
#define MOMCUT_IO_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "momcut/error.hpp"
#include "momcut/grid.hpp"
#include "momcut/model.hpp"
#include "momcut/pipeline.hpp"

namespace momcut {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  return out;
}

}  // namespace detail

/// One number per line. A non-numeric first line is taken as a header;
/// blank lines are skipped. Line numbers in errors are 1-based.
inline std::vector<double> parse_dataset(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = detail::trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    const bool first = !seen_content;
    seen_content = true;
    if (auto v = detail::parse_double(line)) {
      values.push_back(*v);
    } else if (!first) {
      throw LocatedError(ErrorCode::ParseError, line_no,
                         "line " + std::to_string(line_no) + ": not a number: '" + std::string(line) + "'");
    }
  }
  if (values.empty()) throw Error(ErrorCode::EmptyData, "dataset has no values");
  return values;
}

inline std::vector<double> load_dataset(const std::string& path) { return parse_dataset(detail::read_file(path)); }

/// Gap file: one real per non-blank line, M_0 ... M_{n-1} then R_n last.
inline MomentGap parse_gap_file(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = detail::trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    auto v = detail::parse_double(line);
    if (!v) throw LocatedError(ErrorCode::ParseError, line_no, "line " + std::to_string(line_no) + ": not a number");
    values.push_back(*v);
  }
  if (values.size() < 2) throw Error(ErrorCode::EmptyData, "gap file needs at least M_0 and R_n");
  const double remainder = values.back();
  values.pop_back();
  return MomentGap(std::move(values), remainder, StrategyKind::UserSupplied);
}

inline MomentGap load_gap_file(const std::string& path) { return parse_gap_file(detail::read_file(path)); }

struct RescaledData {
  std::vector<double> f;
  std::vector<double> g;
  DomainMap map;
};

/// Shared affine map onto [0,1]: the given domain, or the joint min/max.
inline RescaledData rescale_to_unit(const std::vector<double>& data_f, const std::vector<double>& data_g,
                                    std::optional<DomainMap> domain = std::nullopt) {
  DomainMap map;
  if (domain) {
    map = *domain;
    if (!(map.b > map.a) || !std::isfinite(map.a) || !std::isfinite(map.b)) {
      throw Error(ErrorCode::DegenerateDomain, "domain must satisfy a < b");
    }
    for (const auto* data : {&data_f, &data_g}) {
      for (std::size_t i = 0; i < data->size(); ++i) {
        const double v = (*data)[i];
        if (!(v >= map.a && v <= map.b)) {
          throw LocatedError(ErrorCode::DomainViolation, i,
                             "value " + format_double(v) + " outside the domain [" + format_double(map.a) + ", " +
                                 format_double(map.b) + "]");
        }
      }
    }
  } else {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto* data : {&data_f, &data_g}) {
      for (double v : *data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
      throw Error(ErrorCode::DegenerateDomain, "data span a single value");
    }
    map = DomainMap{lo, hi};
    // Data already inside [0,1] keep the identity map.
    if (lo >= 0.0 && hi <= 1.0) map = DomainMap{};
  }
  auto apply = [&](const std::vector<double>& data) {
    std::vector<double> out(data.size());
    std::transform(data.begin(), data.end(), out.begin(),
                   [&](double v) { return std::clamp(map(v), 0.0, 1.0); });
    return out;
  };
  return {apply(data_f), apply(data_g), map};
}

/// FNV-1a 64-bit hash, hex encoded; identifies a dataset in report metadata.
inline std::string fingerprint(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

inline nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

inline double number_from(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace detail

inline nlohmann::json to_json(const ComparisonReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["epsilon"] = r.epsilon;
  j["gaps"] = r.gaps;
  j["remainder"] = r.remainder;
  j["strategy"] = r.strategy;
  j["cutoff"] = r.cutoff.is_unbounded() ? nlohmann::json("unbounded") : nlohmann::json(r.cutoff.value());
  j["distance_original"] = detail::number_or_null(r.distance_original);
  j["distance_smoothed"] = detail::number_or_null(r.distance_smoothed);
  j["bound_at_K"] = r.bound_at_K;
  j["domain_map"] = {{"a", r.domain_map.a}, {"b", r.domain_map.b}};
  j["metadata"] = r.metadata;
  return j;
}

inline ComparisonReport report_from_json(const nlohmann::json& j) {
  try {
    ComparisonReport r;
    r.n = j.at("n").get<std::size_t>();
    r.epsilon = j.at("epsilon").get<double>();
    r.gaps = j.at("gaps").get<std::vector<double>>();
    r.remainder = j.at("remainder").get<double>();
    r.strategy = j.at("strategy").get<std::string>();
    const auto& c = j.at("cutoff");
    if (c.is_string()) {
      if (c.get<std::string>() != "unbounded") throw Error(ErrorCode::ParseError, "cutoff string must be 'unbounded'");
      r.cutoff = Cutoff::unbounded();
    } else {
      r.cutoff = Cutoff::finite(c.get<double>());
    }
    r.distance_original = detail::number_from(j.at("distance_original"));
    r.distance_smoothed = detail::number_from(j.at("distance_smoothed"));
    r.bound_at_K = j.at("bound_at_K").get<double>();
    r.domain_map = DomainMap{j.at("domain_map").at("a").get<double>(), j.at("domain_map").at("b").get<double>()};
    r.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

inline std::string report_to_string(const ComparisonReport& r) { return to_json(r).dump(2) + "\n"; }

inline ComparisonReport parse_report(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return report_from_json(j);
}

inline void emit_report(const ComparisonReport& r, const std::string& path) {
  auto out = detail::open_output(path);
  out << report_to_string(r);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

inline ComparisonReport load_report(const std::string& path) { return parse_report(detail::read_file(path)); }

/// CSV with header "x,f,g,f_smoothed,g_smoothed", one row per node.
inline void write_curves(std::ostream& out, const GridFunction1D& f, const GridFunction1D& g,
                         const GridFunction1D& f_lo, const GridFunction1D& g_lo) {
  const std::size_t n = f.num_points();
  if (g.num_points() != n || f_lo.num_points() != n || g_lo.num_points() != n) {
    throw Error(ErrorCode::GridMismatch, "curves must share one grid");
  }
  out << "x,f,g,f_smoothed,g_smoothed\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << format_double(f.node(i)) << ',' << format_double(f[i]) << ',' << format_double(g[i]) << ','
        << format_double(f_lo[i]) << ',' << format_double(g_lo[i]) << '\n';
  }
}

inline void emit_curves(const GridFunction1D& f, const GridFunction1D& g, const GridFunction1D& f_lo,
                        const GridFunction1D& g_lo, const std::string& path) {
  auto out = detail::open_output(path);
  write_curves(out, f, g, f_lo, g_lo);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

/// CSV with header "x1,x2,f,g,f_smoothed,g_smoothed", x2 varying fastest.
inline void emit_curves_2d(const GridFunction2D& f, const GridFunction2D& g, const GridFunction2D& f_lo,
                           const GridFunction2D& g_lo, const std::string& path) {
  const std::size_t n = f.num_points();
  if (g.num_points() != n || f_lo.num_points() != n || g_lo.num_points() != n) {
    throw Error(ErrorCode::GridMismatch, "curves must share one grid");
  }
  auto out = detail::open_output(path);
  const std::vector<double> x = f.nodes();
  out << "x1,x2,f,g,f_smoothed,g_smoothed\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out << format_double(x[i]) << ',' << format_double(x[j]) << ',' << format_double(f.at(i, j)) << ','
          << format_double(g.at(i, j)) << ',' << format_double(f_lo.at(i, j)) << ','
          << format_double(g_lo.at(i, j)) << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace momcut

#endif  // MOMCUT_IO_HPP
