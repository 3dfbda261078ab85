#include "qqd/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "parallel.hpp"
#include "qqd/errors.hpp"
#include "qqd/measures.hpp"

namespace qqd {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 5> kMeasureNames{"negativity", "discord", "geometric", "classical",
                                                        "mutual"};

// CSV column name and SweepRow member for every optional column, in order.
struct Column {
  std::string_view csv;
  std::string_view json;
  std::optional<double> SweepRow::*field;
};
constexpr std::array<Column, 7> kColumns{{
    {"negativity", "negativity", &SweepRow::negativity},
    {"discord", "discord", &SweepRow::discord},
    {"geometric_x2", "geometric_x2", &SweepRow::geometric_x2},
    {"classical", "classical", &SweepRow::classical},
    {"mutual", "mutual", &SweepRow::mutual},
    {"theta_opt", "optimal_theta", &SweepRow::optimal_theta},
    {"phi_opt", "optimal_phi", &SweepRow::optimal_phi},
}};

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw IoFailure("malformed number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view name, const std::array<std::string_view, N>& names, const char* what) {
  for (std::size_t k = 0; k < N; ++k) {
    if (names[k] == name) return static_cast<Enum>(k);
  }
  throw InvalidConfig(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

constexpr std::array<std::string_view, 2> kFamilyNames{"entangled", "separable"};
constexpr std::array<std::string_view, 3> kModeNames{"multilocal", "collective", "combined"};
constexpr std::array<std::string_view, 2> kFormatNames{"csv", "json"};

bool column_present(const SweepConfig& cfg, const Column& c) {
  const auto& f = c.field;
  if (f == &SweepRow::negativity) return cfg.wants(Measure::Negativity);
  if (f == &SweepRow::discord) return cfg.wants(Measure::Discord);
  if (f == &SweepRow::geometric_x2) return cfg.wants(Measure::Geometric);
  if (f == &SweepRow::classical) return cfg.wants(Measure::Classical);
  if (f == &SweepRow::mutual) return cfg.wants(Measure::Mutual);
  return cfg.wants_direction();
}

SweepRow evaluate_row(const SweepConfig& cfg, const DensityMatrix& rho0, double t_gamma) {
  const NoiseConfig noise(cfg.gamma_rate, cfg.mode);
  const DensityMatrix rho = apply_channel(rho0, t_gamma / cfg.gamma_rate, noise);
  SweepRow row;
  row.t_gamma = t_gamma;
  if (cfg.wants(Measure::Negativity)) row.negativity = negativity(rho);
  if (cfg.wants(Measure::Geometric)) row.geometric_x2 = 2.0 * geometric_discord(rho);
  const bool need_mutual = cfg.wants(Measure::Mutual) || cfg.wants(Measure::Discord);
  const double mutual = need_mutual ? mutual_information(rho) : 0.0;
  if (cfg.wants(Measure::Mutual)) row.mutual = mutual;
  if (cfg.wants_direction()) {
    const auto cc = classical_correlation(rho, cfg.search);
    if (cfg.wants(Measure::Classical)) row.classical = cc.value;
    if (cfg.wants(Measure::Discord)) row.discord = std::max(0.0, mutual - cc.value);
    row.optimal_theta = cc.direction.theta;
    row.optimal_phi = cc.direction.phi;
  }
  return row;
}

json config_to_json(const SweepConfig& cfg) {
  json measures = json::array();
  for (auto m : cfg.measures) measures.push_back(std::string(to_string(m)));
  return json{{"family", to_string(cfg.family)},
              {"param", cfg.param},
              {"mode", to_string(cfg.mode)},
              {"gamma_rate", cfg.gamma_rate},
              {"t_gamma_max", cfg.t_gamma_max},
              {"n_points", cfg.n_points},
              {"measures", measures},
              {"output_format", to_string(cfg.output_format)},
              {"output_path", cfg.output_path}};
}

}  // namespace

void SweepConfig::validate() const {
  (void)StateParameter{family, param};
  if (!(gamma_rate > 0.0) || !std::isfinite(gamma_rate)) throw InvalidConfig("gamma_rate must be positive");
  if (!(t_gamma_max > 0.0) || !std::isfinite(t_gamma_max)) throw InvalidConfig("t_gamma_max must be positive");
  if (n_points < 2) throw InvalidConfig("n_points must be at least 2");
  if (measures.empty()) throw InvalidConfig("at least one measure must be requested");
}

bool SweepConfig::wants(Measure m) const { return std::find(measures.begin(), measures.end(), m) != measures.end(); }

bool SweepConfig::wants_direction() const { return wants(Measure::Discord) || wants(Measure::Classical); }

std::vector<double> sweep_grid(const SweepConfig& cfg) {
  std::vector<double> grid(cfg.n_points);
  const double step = cfg.t_gamma_max / static_cast<double>(cfg.n_points - 1);
  for (std::size_t k = 0; k < cfg.n_points; ++k) grid[k] = step * static_cast<double>(k);
  grid.back() = cfg.t_gamma_max;
  return grid;
}

std::vector<SweepRow> compute_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const DensityMatrix rho0 = family_state(StateParameter{cfg.family, cfg.param});
  const auto grid = sweep_grid(cfg);
  std::vector<SweepRow> rows(grid.size());
  detail::parallel_for(grid.size(), cfg.workers, [&](std::size_t k) { rows[k] = evaluate_row(cfg, rho0, grid[k]); });
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  auto rows = compute_sweep(cfg);
  if (!cfg.output_path.empty()) {
    write_text_file(cfg.output_path,
                    cfg.output_format == OutputFormat::Csv ? format_csv(rows, cfg) : format_json(rows, cfg));
  }
  return rows;
}

std::string_view to_string(Measure m) { return kMeasureNames[static_cast<std::size_t>(m)]; }
std::string_view to_string(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }
std::string_view to_string(NoiseMode m) { return kModeNames[static_cast<std::size_t>(m)]; }
std::string_view to_string(OutputFormat f) { return kFormatNames[static_cast<std::size_t>(f)]; }

Measure parse_measure(std::string_view name) { return parse_enum<Measure>(name, kMeasureNames, "measure"); }
Family parse_family(std::string_view name) { return parse_enum<Family>(name, kFamilyNames, "family"); }
NoiseMode parse_mode(std::string_view name) { return parse_enum<NoiseMode>(name, kModeNames, "noise mode"); }
OutputFormat parse_format(std::string_view name) { return parse_enum<OutputFormat>(name, kFormatNames, "format"); }

std::vector<Measure> parse_measure_list(std::string_view comma_list) {
  std::vector<Measure> out;
  for (auto part : split(comma_list, ',')) {
    if (part.empty()) continue;
    const Measure m = parse_measure(part);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw InvalidConfig("empty measure list");
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_csv(const std::vector<SweepRow>& rows, const SweepConfig& cfg) {
  std::string out = "t_gamma";
  for (const auto& c : kColumns) {
    if (column_present(cfg, c)) (out += ',') += c.csv;
  }
  out += '\n';
  for (const auto& row : rows) {
    out += format_number(row.t_gamma);
    for (const auto& c : kColumns) {
      if (!column_present(cfg, c)) continue;
      out += ',';
      const auto& v = row.*c.field;
      if (!v) throw InvalidConfig("row is missing requested column " + std::string(c.csv));
      out += format_number(*v);
    }
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw IoFailure("empty CSV input");
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }

  const auto header = split(lines.front(), ',');
  if (header.empty() || header.front() != "t_gamma") throw IoFailure("CSV header must start with t_gamma");
  std::vector<const Column*> layout;
  for (std::size_t k = 1; k < header.size(); ++k) {
    const auto it = std::find_if(kColumns.begin(), kColumns.end(), [&](const Column& c) { return c.csv == header[k]; });
    if (it == kColumns.end()) throw IoFailure("unknown CSV column '" + std::string(header[k]) + "'");
    layout.push_back(&*it);
  }

  std::vector<SweepRow> rows;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = split(lines[l], ',');
    if (cells.size() != header.size()) throw IoFailure("CSV line " + std::to_string(l + 1) + " has wrong field count");
    SweepRow row;
    row.t_gamma = parse_number(cells[0]);
    for (std::size_t k = 0; k < layout.size(); ++k) row.*(layout[k]->field) = parse_number(cells[k + 1]);
    rows.push_back(row);
  }
  return rows;
}

std::string format_json(const std::vector<SweepRow>& rows, const SweepConfig& cfg) {
  json jrows = json::array();
  for (const auto& row : rows) {
    json r{{"t_gamma", row.t_gamma}};
    for (const auto& c : kColumns) {
      if (const auto& v = row.*c.field; v && column_present(cfg, c)) r[std::string(c.json)] = *v;
    }
    jrows.push_back(std::move(r));
  }
  return json{{"config", config_to_json(cfg)}, {"rows", jrows}}.dump(2) + "\n";
}

std::vector<SweepRow> parse_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    std::vector<SweepRow> rows;
    for (const auto& r : doc.at("rows")) {
      SweepRow row;
      row.t_gamma = r.at("t_gamma").get<double>();
      for (const auto& c : kColumns) {
        if (r.contains(std::string(c.json))) row.*c.field = r.at(std::string(c.json)).get<double>();
      }
      rows.push_back(row);
    }
    return rows;
  } catch (const json::exception& e) {
    throw IoFailure(std::string("malformed sweep JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoFailure("write to '" + path + "' failed");
}

}  // namespace qqd
