#pragma once

// Time series of the correlation measures along a dephasing trajectory, and
// their CSV / JSON serialization.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qqd/dephasing.hpp"
#include "qqd/direction_search.hpp"
#include "qqd/states.hpp"

namespace qqd {

/// Declaration order is the CSV column order.
enum class Measure { Negativity, Discord, Geometric, Classical, Mutual };
enum class OutputFormat { Csv, Json };

inline constexpr double kDefaultPlateauThreshold = 1e-6;

struct SweepConfig {
  Family family = Family::Entangled;
  double param = 0.0;
  NoiseMode mode = NoiseMode::Multilocal;
  double gamma_rate = 1.0;
  double t_gamma_max = 5.0;
  std::size_t n_points = 201;
  std::vector<Measure> measures{Measure::Negativity, Measure::Discord, Measure::Geometric,
                                Measure::Classical, Measure::Mutual};
  OutputFormat output_format = OutputFormat::Csv;
  std::string output_path;
  /// 0 picks hardware concurrency; output does not depend on it.
  unsigned workers = 0;
  DirectionSearchOptions search;

  /// Throws InvalidConfig (or ParameterOutOfRange for the family parameter).
  void validate() const;
  bool wants(Measure m) const;
  /// True when discord or classical correlation is requested.
  bool wants_direction() const;
};

/// One time sample. A column is present iff the measure was requested;
/// geometric_x2 holds 2 D^g and discord is clamped at zero.
struct SweepRow {
  double t_gamma = 0.0;
  std::optional<double> negativity;
  std::optional<double> discord;
  std::optional<double> geometric_x2;
  std::optional<double> classical;
  std::optional<double> mutual;
  std::optional<double> optimal_theta;
  std::optional<double> optimal_phi;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Uniform grid t_gamma_k = k * t_gamma_max / (n_points - 1).
std::vector<double> sweep_grid(const SweepConfig& cfg);

/// Evaluate the requested measures on the grid without writing anything.
std::vector<SweepRow> compute_sweep(const SweepConfig& cfg);

/// compute_sweep, then write to cfg.output_path (when non-empty) in
/// cfg.output_format. Throws IoFailure if the file cannot be written.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

std::string_view to_string(Measure m);
std::string_view to_string(Family f);
std::string_view to_string(NoiseMode m);
std::string_view to_string(OutputFormat f);
/// Throw InvalidConfig on unknown names.
Measure parse_measure(std::string_view name);
Family parse_family(std::string_view name);
NoiseMode parse_mode(std::string_view name);
OutputFormat parse_format(std::string_view name);
std::vector<Measure> parse_measure_list(std::string_view comma_list);

/// Header `t_gamma,negativity,discord,geometric_x2,classical,mutual,theta_opt,phi_opt`
/// restricted to the present columns; LF line endings, %.17g numerics.
std::string format_csv(const std::vector<SweepRow>& rows, const SweepConfig& cfg);
/// Throws IoFailure on malformed input.
std::vector<SweepRow> parse_csv(std::string_view text);

/// {"config": {...}, "rows": [...]} with snake_case field names.
std::string format_json(const std::vector<SweepRow>& rows, const SweepConfig& cfg);
std::vector<SweepRow> parse_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace qqd
